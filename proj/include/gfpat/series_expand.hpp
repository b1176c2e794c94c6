#pragma once

// Reciprocals 1/q(x,y) as formal Laurent series over GF(2), cut down to a
// window. This is how random-looking patterns are generated from compact
// rational expressions.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfpat/core_poly.hpp"

namespace gfpat {

class InadmissibleDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// numerator / denominator. The denominator must contain 1 and every other
/// monomial x^a y^b must have b > 0, or b = 0 and a > 0.
struct RationalTerm {
  Poly numerator = Poly::one();
  Poly denominator = Poly::one();

  friend bool operator==(const RationalTerm&, const RationalTerm&) = default;
};

/// Throws InadmissibleDenominator if q has no formal reciprocal under the
/// lex(y, x) grading.
inline void check_admissible(const Poly& q) {
  if (!q.contains({0, 0})) {
    throw InadmissibleDenominator("denominator " + to_string(q) +
                                  " lacks a constant term");
  }
  for (const auto& t : q.terms()) {
    if (t.i == 0 && t.j == 0) continue;
    if (t.j < 0 || (t.j == 0 && t.i < 0)) {
      throw InadmissibleDenominator("denominator term " + to_string(t) + " of " +
                                    to_string(q) +
                                    " is not positive in y (then x)");
    }
  }
}

inline bool is_admissible(const Poly& q) {
  try {
    check_admissible(q);
    return true;
  } catch (const InadmissibleDenominator&) {
    return false;
  }
}

namespace detail {

/// Coefficients of 1/q on columns [lo, hi] of rows 0..rows-1, computed in
/// (j, i) order from c(i,j) = sum over q's non-constant terms (a,b) of
/// c(i-a, j-b). Columns outside [lo, hi] read as zero, so only the interior
/// away from the right edge is exact; callers widen the range accordingly.
class SeriesGrid {
 public:
  SeriesGrid(const Poly& q, std::int64_t lo, std::int64_t hi, std::int64_t rows)
      : lo_(lo), width_(hi - lo + 1), rows_(rows),
        cells_(static_cast<std::size_t>(width_ * rows), 0) {
    std::vector<Monomial> taps;
    for (const auto& t : q.terms()) {
      if (t.i != 0 || t.j != 0) taps.push_back(t);
    }
    for (std::int64_t j = 0; j < rows_; ++j) {
      for (std::int64_t i = lo_; i <= hi; ++i) {
        std::uint8_t c = (i == 0 && j == 0) ? 1 : 0;
        for (const auto& t : taps) c ^= at(i - t.i, j - t.j);
        cells_[index(i, j)] = c;
      }
    }
  }

  std::uint8_t at(std::int64_t i, std::int64_t j) const {
    if (j < 0 || j >= rows_ || i < lo_ || i >= lo_ + width_) return 0;
    return cells_[index(i, j)];
  }

 private:
  std::size_t index(std::int64_t i, std::int64_t j) const {
    return static_cast<std::size_t>(j * width_ + (i - lo_));
  }

  std::int64_t lo_;
  std::int64_t width_;
  std::int64_t rows_;
  std::vector<std::uint8_t> cells_;
};

/// Exact coefficients of 1/q on [i0, i1] x [0, j1].
///
/// Row j of the series is zero left of -reach*j, where reach bounds |a| over
/// taps with b > 0. A value at column i depends on row j-b at column at most
/// i + reach, so computing rows up to column i1 + reach*j1 keeps the target
/// rectangle exact.
inline SeriesGrid exact_series(const Poly& q, std::int64_t i0, std::int64_t i1,
                               std::int64_t j1) {
  std::int64_t reach = 0;
  for (const auto& t : q.terms()) {
    if (t.j > 0) reach = std::max<std::int64_t>(reach, t.i < 0 ? -t.i : t.i);
  }
  const std::int64_t lo = std::min<std::int64_t>(i0, -reach * j1);
  const std::int64_t hi = std::max<std::int64_t>(i1, 0) + reach * j1;
  if ((hi - lo + 1) * (j1 + 1) > (std::int64_t{1} << 28)) {
    throw std::length_error("series working region too large");
  }
  return SeriesGrid(q, lo, hi, j1 + 1);
}

}  // namespace detail

/// The formal reciprocal 1/q restricted to the window rectangle.
inline Poly reciprocal(const Poly& q, const Window& w) {
  check_admissible(q);
  const auto grid = detail::exact_series(q, 0, w.m, w.n);
  std::vector<Monomial> out;
  for (int j = 0; j <= w.n; ++j) {
    for (int i = 0; i <= w.m; ++i) {
      if (grid.at(i, j)) out.push_back({i, j});
    }
  }
  return Poly::from_support(std::move(out));
}

/// numerator * (1/denominator), exact on the window. Window mode only;
/// wrap-mode division goes through the quotient ring.
inline Poly eval_term(const RationalTerm& t, const Window& w) {
  if (w.mode != EvalMode::window) {
    throw std::invalid_argument("eval_term requires window mode");
  }
  check_admissible(t.denominator);
  if (t.numerator.empty()) return {};

  // Numerator monomial (p, r) needs the series on [-p, m-p] x [-r, n-r].
  const std::int64_t i0 = -std::int64_t{t.numerator.max_i()};
  const std::int64_t i1 = std::int64_t{w.m} - t.numerator.min_i();
  const std::int64_t j1 = std::int64_t{w.n} - t.numerator.min_j();
  if (j1 < 0) return {};
  const auto grid = detail::exact_series(t.denominator, i0, i1, j1);

  std::vector<Monomial> out;
  for (int j = 0; j <= w.n; ++j) {
    for (int i = 0; i <= w.m; ++i) {
      std::uint8_t c = 0;
      for (const auto& s : t.numerator.terms()) {
        c ^= grid.at(std::int64_t{i} - s.i, std::int64_t{j} - s.j);
      }
      if (c) out.push_back({i, j});
    }
  }
  return Poly::from_support(std::move(out));
}

/// GF(2) sum of eval_term over all terms.
inline Poly eval_sum(const std::vector<RationalTerm>& terms, const Window& w) {
  Poly sum;
  for (const auto& t : terms) sum += eval_term(t, w);
  return sum;
}

}  // namespace gfpat
