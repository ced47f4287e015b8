#ifndef PLSTAB_H
#define PLSTAB_H

/* C interface to the exact PL toolkit. Every call returns a status code;
 * on failure plstab_last_error() holds a message for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * plstab_string_free(). Reports are JSON documents with exact rationals
 * written as "p/q" strings. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PLSTAB_API __declspec(dllexport)
#else
#define PLSTAB_API __attribute__((visibility("default")))
#endif

typedef enum plstab_status {
  PLSTAB_OK = 0,
  PLSTAB_E_PARSE,
  PLSTAB_E_IO,
  PLSTAB_E_INVALID_COMPLEX,
  PLSTAB_E_INVALID_MAP,
  PLSTAB_E_UNKNOWN_VERTEX,
  PLSTAB_E_REALIZATION_MISMATCH,
  PLSTAB_E_NONCOPLANAR_OVERLAP,
  PLSTAB_E_POINT_OUTSIDE_COMPLEX,
  PLSTAB_E_NONDEGENERATE_VIOLATION,
  PLSTAB_E_OUT_OF_INTERVAL,
  PLSTAB_E_NOT_FIXED_POINT,
  PLSTAB_E_SIDE_OUTSIDE_INTERVAL,
  PLSTAB_E_ORIENTATION_REVERSING,
  PLSTAB_E_SUPPORT_MISMATCH,
  PLSTAB_E_FIX_IS_EVERYTHING,
  PLSTAB_E_FIX_IS_EMPTY,
  PLSTAB_E_DISCONNECTED_COMPLEX,
  PLSTAB_E_VERTEX_NOT_IN_COMPLEX,
  PLSTAB_E_DIVISION_BY_ZERO,
  PLSTAB_E_UNSUPPORTED,
  PLSTAB_E_INVALID_ARGUMENT,
  PLSTAB_E_INTERNAL
} plstab_status;

typedef enum plstab_map_kind {
  PLSTAB_MAP_INTERVAL = 1,
  PLSTAB_MAP_SURFACE = 2,
  PLSTAB_MAP_CIRCLE = 3
} plstab_map_kind;

typedef enum plstab_certificate_status {
  PLSTAB_CERT_TRIVIAL = 0,
  PLSTAB_CERT_OBSTRUCTED = 2,
  PLSTAB_CERT_HYPOTHESIS_FAILED = 3
} plstab_certificate_status;

typedef struct plstab_complex plstab_complex;
typedef struct plstab_map plstab_map;
typedef struct plstab_action plstab_action;
typedef struct plstab_presentation plstab_presentation;

PLSTAB_API const char* plstab_last_error(void);
PLSTAB_API const char* plstab_status_name(plstab_status s);
PLSTAB_API void plstab_string_free(char* s);

/* Complexes */
PLSTAB_API plstab_status plstab_complex_load(const char* path, plstab_complex** out);
PLSTAB_API plstab_status plstab_complex_parse(const char* text, plstab_complex** out);
PLSTAB_API void plstab_complex_free(plstab_complex* c);
PLSTAB_API plstab_status plstab_complex_euler(const plstab_complex* c, long* out);
PLSTAB_API plstab_status plstab_complex_write(const plstab_complex* c, char** out);
/* Common refinement as complex text, with one `# cell i from a b` comment
 * per cell naming the parent simplices. */
PLSTAB_API plstab_status plstab_overlay(const plstab_complex* a, const plstab_complex* b, char** out);

/* Maps. Surface maps name their base complex in a `base` record, resolved
 * relative to the map file. */
PLSTAB_API plstab_status plstab_map_load(const char* path, plstab_map** out);
PLSTAB_API void plstab_map_free(plstab_map* m);
PLSTAB_API plstab_map_kind plstab_map_get_kind(const plstab_map* m);
/* Point as space-separated rationals; result in the same form. */
PLSTAB_API plstab_status plstab_map_eval(const plstab_map* m, const char* point, char** out);
/* f ∘ g; both maps must have the same kind (and base). */
PLSTAB_API plstab_status plstab_map_compose(const plstab_map* f, const plstab_map* g, plstab_map** out);
PLSTAB_API plstab_status plstab_map_invert(const plstab_map* m, plstab_map** out);
/* Map text; surface maps refer to their base by the path they were loaded with. */
PLSTAB_API plstab_status plstab_map_write(const plstab_map* m, char** out);
/* Fixed locus as complex text plus a provenance sidecar, and a JSON report
 * (locus, frontier, N_f). Circle lifts report fixed arcs of F - p. */
PLSTAB_API plstab_status plstab_map_fixset(const plstab_map* m, long p, char** complex_text, char** provenance, char** json);
/* Rotation enclosure at n iterations and rational detection up to qmax. */
PLSTAB_API plstab_status plstab_map_rotation(const plstab_map* m, unsigned n, unsigned qmax, char** json);
/* Germ at a fixed point given as space-separated rationals. */
PLSTAB_API plstab_status plstab_map_tangent(const plstab_map* m, const char* point, char** text, char** json);
/* Germ at a base vertex (surface maps). */
PLSTAB_API plstab_status plstab_map_tangent_vertex(const plstab_map* m, size_t vertex, char** text, char** json);
PLSTAB_API plstab_status plstab_map_fuller(const plstab_map* m, unsigned kmax, char** json);

/* Presentations */
PLSTAB_API plstab_status plstab_presentation_load(const char* path, plstab_presentation** out);
PLSTAB_API void plstab_presentation_free(plstab_presentation* p);
PLSTAB_API plstab_status plstab_abelianize(const plstab_presentation* p, char** json);
PLSTAB_API plstab_status plstab_word_ball(const plstab_presentation* p, unsigned radius, char** json);

/* Actions: a directory with action.txt (see README). */
PLSTAB_API plstab_status plstab_action_load(const char* dir, const char* presentation_path, plstab_action** out);
PLSTAB_API void plstab_action_free(plstab_action* a);
PLSTAB_API plstab_status plstab_certify(const plstab_action* a, size_t vertex, plstab_certificate_status* result, char** json);
PLSTAB_API plstab_status plstab_verify_relators(const plstab_action* a, int* pass, char** json);
PLSTAB_API plstab_status plstab_analyze(const plstab_action* a, unsigned kmax, unsigned qmax, unsigned n, char** json);

#ifdef __cplusplus
}
#endif

#endif
