#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plstab {

/// Letters are signed 1-based generator indices: +i is g_i, -i its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word multiply(const Word& a, const Word& b);
/// Freely reduced w1 w2 w1^-1 w2^-1.
Word commutator(const Word& w1, const Word& w2);
/// Exponent sum of each generator.
std::vector<long> exponent_sums(const Word& w, std::size_t generators);

class Presentation {
 public:
  /// Validates names (distinct, nonempty) and letter ranges; reduces relators.
  static Presentation create(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return rels_; }
  /// Position of a generator name, if present.
  std::ptrdiff_t index_of(std::string_view name) const;

  /// Letters as `a`, `a^-1`, powers collapsed (`a^3`); `1` for the empty word.
  std::string format(const Word& w) const;
  /// Parses space-separated `name` / `name^k` tokens.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> gens_;
  std::vector<Word> rels_;
};

// Text format: `gens a b`, then `rel <word>` lines.
Presentation parse_presentation(std::string_view text);
std::string write_presentation(const Presentation& p);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Bareiss fraction-free elimination; requires a square matrix.
  mpz_class determinant() const;
  bool is_diagonal() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  IntMatrix u, d, v;  // u * m * v == d
};

/// Diagonal entries are nonnegative and each divides the next.
SmithForm smith_normal_form(const IntMatrix& m);

struct AbelianizationReport {
  /// Nontrivial cyclic factors in divisibility order; 0 stands for Z.
  std::vector<mpz_class> invariant_factors;
  std::size_t free_rank = 0;
};

/// Relator exponent matrix of the presentation.
IntMatrix relation_matrix(const Presentation& p);
AbelianizationReport abelianization(const Presentation& p);
/// `Z^2 x Z/2`, or `0` for the trivial group.
std::string describe(const AbelianizationReport& r);

/// All freely reduced words of length <= i, in shortlex order.
std::vector<Word> word_ball(const Presentation& p, unsigned i);

/// Evaluates w as a composition: the word `a b` acts as a ∘ b.
template <class T, class Compose, class Invert>
T evaluate_word(const Word& w, std::span<const T> gens, T identity, Compose compose, Invert invert) {
  T out = std::move(identity);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const T& g = gens[static_cast<std::size_t>(*it > 0 ? *it : -*it) - 1];
    out = *it > 0 ? compose(g, out) : compose(invert(g), out);
  }
  return out;
}

}  // namespace plstab
