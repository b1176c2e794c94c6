#pragma once

// Bivariate Laurent polynomials over GF(2), stored as their support set.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfpat {

/// Largest exponent magnitude accepted anywhere in the library. Results that
/// would leave [-kExponentLimit, kExponentLimit] throw std::overflow_error.
inline constexpr std::int64_t kExponentLimit = std::int64_t{1} << 20;

inline int checked_exponent(std::int64_t e) {
  if (e > kExponentLimit || e < -kExponentLimit) {
    throw std::overflow_error("exponent " + std::to_string(e) +
                              " outside supported range");
  }
  return static_cast<int>(e);
}

/// The monomial x^i y^j. Exponents may be negative.
///
/// Monomials compare in diagonal order: by total degree i+j, then by the y
/// exponent. Restricted to nonnegative exponents this is the enumeration
/// 1, x, y, x^2, xy, y^2, x^3, ...
struct Monomial {
  int i = 0;
  int j = 0;

  constexpr std::int64_t degree() const { return std::int64_t{i} + j; }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr std::strong_ordering operator<=>(const Monomial& a,
                                                    const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.j <=> b.j;
  }

  /// Product of monomials (exponents add), overflow-checked.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {checked_exponent(std::int64_t{a.i} + b.i),
            checked_exponent(std::int64_t{a.j} + b.j)};
  }
};

enum class EvalMode { window, wrap };

/// Visible rectangle of exponents [0, m] x [0, n] (inclusive maxima), so the
/// grid has (m+1)(n+1) cells.
struct Window {
  int m = 0;
  int n = 0;
  EvalMode mode = EvalMode::window;

  Window() = default;
  Window(int max_x, int max_y, EvalMode eval_mode = EvalMode::window)
      : m(max_x), n(max_y), mode(eval_mode) {
    if (m < 0 || n < 0) {
      throw std::invalid_argument("window maxima must be nonnegative");
    }
  }

  int width() const { return m + 1; }
  int height() const { return n + 1; }
  bool contains(const Monomial& t) const {
    return t.i >= 0 && t.i <= m && t.j >= 0 && t.j <= n;
  }
};

/// A polynomial over GF(2) in x, y and their inverses. Every monomial in the
/// support has coefficient 1; the zero polynomial has empty support.
class Poly {
 public:
  Poly() = default;

  /// Builds the polynomial whose support is the given set; repeated
  /// monomials are listed once.
  Poly(std::initializer_list<Monomial> terms) : terms_(terms) { normalize_set(); }

  static Poly from_support(std::vector<Monomial> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize_set();
    return p;
  }

  static Poly one() { return Poly{{0, 0}}; }
  static Poly monomial(int i, int j) { return Poly{{i, j}}; }

  /// Support in diagonal order.
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }

  bool contains(const Monomial& t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t);
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// GF(2) sum: symmetric difference of the supports.
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.terms_.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(),
                                  b.terms_.begin(), b.terms_.end(),
                                  std::back_inserter(r.terms_));
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }

  /// GF(2) product: pairwise exponent sums, equal monomials cancel in pairs.
  friend Poly operator*(const Poly& a, const Poly& b) {
    std::vector<Monomial> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) raw.push_back(s * t);
    }
    return from_multiset(std::move(raw));
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Sums a list of monomials with GF(2) coefficients: a monomial survives
  /// iff it occurs an odd number of times.
  static Poly from_multiset(std::vector<Monomial> raw) {
    std::sort(raw.begin(), raw.end());
    Poly r;
    for (std::size_t k = 0; k < raw.size();) {
      std::size_t run = k;
      while (run < raw.size() && raw[run] == raw[k]) ++run;
      if ((run - k) % 2 == 1) r.terms_.push_back(raw[k]);
      k = run;
    }
    return r;
  }

  int min_i() const { return extreme([](const Monomial& t) { return t.i; }, true); }
  int max_i() const { return extreme([](const Monomial& t) { return t.i; }, false); }
  int min_j() const { return extreme([](const Monomial& t) { return t.j; }, true); }
  int max_j() const { return extreme([](const Monomial& t) { return t.j; }, false); }

 private:
  void normalize_set() {
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  }

  template <typename Proj>
  int extreme(Proj proj, bool lowest) const {
    if (terms_.empty()) throw std::logic_error("extent of the zero polynomial");
    int best = proj(terms_.front());
    for (const auto& t : terms_) {
      best = lowest ? std::min(best, proj(t)) : std::max(best, proj(t));
    }
    return best;
  }

  std::vector<Monomial> terms_;
};

inline Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

/// Multiplies by x^dx y^dy. Translation preserves the diagonal order, so the
/// support stays sorted.
inline Poly shift(const Poly& a, int dx, int dy) {
  std::vector<Monomial> out;
  out.reserve(a.size());
  const Monomial by{dx, dy};
  for (const auto& t : a.terms()) out.push_back(t * by);
  return Poly::from_support(std::move(out));
}

/// Keeps only the monomials inside the window rectangle.
inline Poly truncate(const Poly& a, const Window& w) {
  std::vector<Monomial> out;
  for (const auto& t : a.terms()) {
    if (w.contains(t)) out.push_back(t);
  }
  return Poly::from_support(std::move(out));
}

/// "1", "x", "y^3", "x^2*y", "x^-1*y", ...
inline std::string to_string(const Monomial& t) {
  auto var = [](char v, int e) {
    std::string s(1, v);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  if (t.i == 0 && t.j == 0) return "1";
  if (t.j == 0) return var('x', t.i);
  if (t.i == 0) return var('y', t.j);
  return var('x', t.i) + "*" + var('y', t.j);
}

/// Canonical text form: terms in diagonal order joined by '+', "0" for the
/// zero polynomial. Example: "1+x+x*y^2".
inline std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += '+';
    s += to_string(t);
  }
  return s;
}

}  // namespace gfpat
