#include "plstab/presentation.hpp"

#include <algorithm>
#include <set>

#include "plstab/error.hpp"
#include "text.hpp"

namespace plstab {

Word free_reduce(Word w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word multiply(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return free_reduce(std::move(w));
}

Word commutator(const Word& w1, const Word& w2) {
  return multiply(multiply(w1, w2), multiply(inverse_word(w1), inverse_word(w2)));
}

std::vector<long> exponent_sums(const Word& w, std::size_t generators) {
  std::vector<long> out(generators, 0);
  for (int l : w) out.at(static_cast<std::size_t>(std::abs(l)) - 1) += l > 0 ? 1 : -1;
  return out;
}

Presentation Presentation::create(std::vector<std::string> generators, std::vector<Word> relators) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty() || g.find_first_of("^ \t") != std::string::npos) fail(ErrorCode::InvalidArgument, "bad generator name `" + g + "`");
    if (!seen.insert(g).second) fail(ErrorCode::InvalidArgument, "duplicate generator `" + g + "`");
  }
  const int n = static_cast<int>(generators.size());
  Presentation p;
  for (auto& r : relators) {
    for (int l : r) {
      if (l == 0 || l > n || l < -n) fail(ErrorCode::InvalidArgument, "relator letter out of range");
    }
    p.rels_.push_back(free_reduce(std::move(r)));
  }
  p.gens_ = std::move(generators);
  return p;
}

std::ptrdiff_t Presentation::index_of(std::string_view name) const {
  const auto it = std::find(gens_.begin(), gens_.end(), name);
  return it == gens_.end() ? -1 : it - gens_.begin();
}

std::string Presentation::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long k = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += gens_.at(static_cast<std::size_t>(std::abs(w[i])) - 1);
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

namespace {

Word parse_tokens(const Presentation& p, const text::Line& line, std::size_t first) {
  Word w;
  for (std::size_t t = first; t < line.tokens.size(); ++t) {
    const std::string_view tok = line.tokens[t];
    const auto caret = tok.find('^');
    const std::string_view name = tok.substr(0, caret);
    const auto idx = p.index_of(name);
    if (idx < 0) text::parse_error(line, "unknown generator `" + std::string(name) + "`");
    const long k = caret == std::string_view::npos ? 1 : text::parse_integer(line, tok.substr(caret + 1));
    const int letter = static_cast<int>(idx) + 1;
    for (long i = 0; i < std::abs(k); ++i) w.push_back(k > 0 ? letter : -letter);
  }
  return free_reduce(std::move(w));
}

}  // namespace

Word Presentation::parse_word(std::string_view input) const {
  const auto lines = text::tokenize(input);
  Word w;
  for (const auto& line : lines) w = multiply(w, parse_tokens(*this, line, 0));
  return w;
}

Presentation parse_presentation(std::string_view input) {
  const auto lines = text::tokenize(input);
  if (lines.empty() || lines[0].tokens[0] != "gens") fail(ErrorCode::Parse, "expected `gens <names...>` first");
  std::vector<std::string> names(lines[0].tokens.begin() + 1, lines[0].tokens.end());
  Presentation p;
  try {
    p = Presentation::create(names, {});
  } catch (const Error& e) {
    text::parse_error(lines[0], e.what());
  }
  std::vector<Word> rels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens[0] != "rel") text::parse_error(lines[i], "expected `rel <word>`");
    rels.push_back(parse_tokens(p, lines[i], 1));
  }
  return Presentation::create(std::move(names), std::move(rels));
}

std::string write_presentation(const Presentation& p) {
  std::string out = "gens";
  for (const auto& g : p.generators()) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators()) out += "rel " + (r.empty() ? std::string() : p.format(r)) + "\n";
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) fail(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::InvalidArgument, "matrix shapes do not match");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

struct Reducer {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const mpz_class& k) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += k * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += k * u(j, c);
  }
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, const mpz_class& k) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += k * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += k * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block, first in row-major order.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (r.a(i, j) == 0) continue;
          if (pi == rows || abs(r.a(i, j)) < abs(r.a(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return {std::move(r.u), std::move(r.a), std::move(r.v)};
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (r.a(i, t) == 0) continue;
        r.add_row(i, t, -floor_div(r.a(i, t), r.a(t, t)));
        clean = clean && r.a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (r.a(t, j) == 0) continue;
        r.add_col(j, t, -floor_div(r.a(t, j), r.a(t, t)));
        clean = clean && r.a(t, j) == 0;
      }
      if (!clean) continue;
      // Pivot must divide the rest; otherwise fold the offending row in.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (r.a(i, j) % r.a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      r.add_row(t, bad, 1);
    }
    if (r.a(t, t) < 0) r.negate_row(t);
  }
  return {std::move(r.u), std::move(r.a), std::move(r.v)};
}

IntMatrix relation_matrix(const Presentation& p) {
  const std::size_t n = p.generators().size();
  IntMatrix m(p.relators().size(), n);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto sums = exponent_sums(p.relators()[i], n);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sums[j];
  }
  return m;
}

AbelianizationReport abelianization(const Presentation& p) {
  const IntMatrix m = relation_matrix(p);
  const SmithForm s = smith_normal_form(m);
  AbelianizationReport out;
  const std::size_t n = m.cols();
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class d = k < m.rows() ? s.d(k, k) : mpz_class(0);
    if (d == 1) continue;
    out.invariant_factors.push_back(d);
    if (d == 0) ++out.free_rank;
  }
  return out;
}

std::string describe(const AbelianizationReport& r) {
  std::string out;
  for (const auto& d : r.invariant_factors) {
    if (d == 0) continue;
    if (!out.empty()) out += " x ";
    out += "Z/" + d.get_str();
  }
  if (r.free_rank > 0) {
    if (!out.empty()) out += " x ";
    out += r.free_rank == 1 ? "Z" : "Z^" + std::to_string(r.free_rank);
  }
  return out.empty() ? "0" : out;
}

std::vector<Word> word_ball(const Presentation& p, unsigned i) {
  if (i == 0) fail(ErrorCode::InvalidArgument, "word ball radius must be positive");
  std::vector<int> letters;
  for (int g = 1; g <= static_cast<int>(p.generators().size()); ++g) {
    letters.push_back(g);
    letters.push_back(-g);
  }
  std::vector<Word> out{Word{}};
  std::size_t layer = 0;
  for (unsigned len = 1; len <= i; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = layer; k < end; ++k) {
      for (int l : letters) {
        if (!out[k].empty() && out[k].back() == -l) continue;
        Word w = out[k];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    layer = end;
  }
  return out;
}

}  // namespace plstab
