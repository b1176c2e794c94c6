#pragma once

// The finite ring GF(2)[x,y]/(x^m - 1, y^n - 1). Exponents wrap around an
// m x n torus, so x^m = 1 and y^n = 1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfpat/core_poly.hpp"

namespace gfpat {

struct RingSpec {
  int m = 1;
  int n = 1;

  RingSpec() = default;
  RingSpec(int mod_x, int mod_y) : m(mod_x), n(mod_y) {
    if (m < 1 || n < 1) {
      throw std::invalid_argument("ring moduli must be positive");
    }
    if (std::int64_t{m} * n > (std::int64_t{1} << 24)) {
      throw std::invalid_argument("ring too large");
    }
  }

  std::size_t cells() const { return static_cast<std::size_t>(m) * n; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// A residue whose monomials all satisfy 0 <= i < m, 0 <= j < n.
/// Obtain one through reduce().
class RingElement {
 public:
  RingElement() = default;

  const Poly& poly() const { return residue_; }
  bool is_zero() const { return residue_.empty(); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  explicit RingElement(Poly p) : residue_(std::move(p)) {}
  friend RingElement reduce(const Poly& a, const RingSpec& spec);

  Poly residue_;
};

inline std::string to_string(const RingElement& e) { return to_string(e.poly()); }

/// Folds every exponent into [0, m) x [0, n); colliding monomials cancel.
inline RingElement reduce(const Poly& a, const RingSpec& spec) {
  auto wrap = [](int e, int mod) { return ((e % mod) + mod) % mod; };
  std::vector<Monomial> raw;
  raw.reserve(a.size());
  for (const auto& t : a.terms()) raw.push_back({wrap(t.i, spec.m), wrap(t.j, spec.n)});
  return RingElement(Poly::from_multiset(std::move(raw)));
}

/// The m*n basis monomials x^i y^j (i < m, j < n) in diagonal order.
inline std::vector<Monomial> ring_basis(const RingSpec& spec) {
  std::vector<Monomial> basis;
  basis.reserve(spec.cells());
  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < spec.m; ++i) basis.push_back({i, j});
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace detail {

/// Fixed-length GF(2) vector packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  void flip(std::size_t k) { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }
  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  void xor_with(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec& a, const BitVec& b) {
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense view of ring elements: cell (i, j) lives at bit j*m + i.
struct DenseRing {
  RingSpec spec;

  std::size_t cell(int i, int j) const {
    return static_cast<std::size_t>(j) * spec.m + static_cast<std::size_t>(i);
  }

  BitVec to_dense(const RingElement& e) const {
    BitVec v(spec.cells());
    for (const auto& t : e.poly().terms()) v.set(cell(t.i, t.j));
    return v;
  }

  RingElement from_dense(const BitVec& v) const {
    std::vector<Monomial> terms;
    for (int j = 0; j < spec.n; ++j) {
      for (int i = 0; i < spec.m; ++i) {
        if (v.get(cell(i, j))) terms.push_back({i, j});
      }
    }
    return reduce(Poly::from_support(std::move(terms)), spec);
  }

  std::vector<std::pair<int, int>> support(const BitVec& v) const {
    std::vector<std::pair<int, int>> s;
    for (int j = 0; j < spec.n; ++j) {
      for (int i = 0; i < spec.m; ++i) {
        if (v.get(cell(i, j))) s.emplace_back(i, j);
      }
    }
    return s;
  }

  BitVec mul(const BitVec& a, const BitVec& b) const {
    BitVec r(spec.cells());
    const auto sa = support(a);
    const auto sb = support(b);
    for (const auto& [ai, aj] : sa) {
      for (const auto& [bi, bj] : sb) {
        r.flip(cell((ai + bi) % spec.m, (aj + bj) % spec.n));
      }
    }
    return r;
  }

  BitVec one() const {
    BitVec v(spec.cells());
    v.set(0);
    return v;
  }
};

struct LinearSolve {
  std::optional<BitVec> solution;  // a * solution = 1, when a is a unit
  std::optional<BitVec> kernel;    // nonzero b with a * b = 0, otherwise
};

/// Gauss-Jordan elimination on the matrix of b -> a*b, augmented with the
/// unit vector for 1.
inline LinearSolve solve_multiplication(const DenseRing& ring, const BitVec& a) {
  const RingSpec& spec = ring.spec;
  const std::size_t dim = spec.cells();
  const auto sa = ring.support(a);

  // Row r, column c: coefficient of cell r in a * cell_c. Column dim is the
  // right-hand side.
  std::vector<BitVec> rows(dim, BitVec(dim + 1));
  for (int cj = 0; cj < spec.n; ++cj) {
    for (int ci = 0; ci < spec.m; ++ci) {
      const std::size_t col = ring.cell(ci, cj);
      for (const auto& [ai, aj] : sa) {
        rows[ring.cell((ai + ci) % spec.m, (aj + cj) % spec.n)].flip(col);
      }
    }
  }
  rows[0].flip(dim);

  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(dim, false);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < dim; ++col) {
    std::size_t p = rank;
    while (p < dim && !rows[p].get(col)) ++p;
    if (p == dim) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r != rank && rows[r].get(col)) rows[r].xor_with(rows[rank]);
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++rank;
  }

  LinearSolve out;
  if (rank == dim) {
    BitVec x(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (rows[k].get(dim)) x.set(pivot_col[k]);
    }
    out.solution = std::move(x);
    return out;
  }
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  BitVec x(dim);
  x.set(free_col);
  for (std::size_t k = 0; k < rank; ++k) {
    if (rows[k].get(free_col)) x.set(pivot_col[k]);
  }
  out.kernel = std::move(x);
  return out;
}

}  // namespace detail

inline RingElement ring_add(const RingElement& a, const RingElement& b,
                            const RingSpec& spec) {
  return reduce(a.poly() + b.poly(), spec);
}

inline RingElement ring_mul(const RingElement& a, const RingElement& b,
                            const RingSpec& spec) {
  const detail::DenseRing ring{spec};
  return ring.from_dense(ring.mul(ring.to_dense(a), ring.to_dense(b)));
}

inline RingElement ring_one(const RingSpec& spec) { return reduce(Poly::one(), spec); }

inline RingElement ring_pow(const RingElement& a, std::uint64_t k, const RingSpec& spec) {
  const detail::DenseRing ring{spec};
  auto base = ring.to_dense(a);
  auto acc = ring.one();
  for (; k > 0; k >>= 1) {
    if (k & 1U) acc = ring.mul(acc, base);
    if (k > 1) base = ring.mul(base, base);
  }
  return ring.from_dense(acc);
}

/// The multiplicative inverse, if multiplication by a is a bijection.
inline std::optional<RingElement> inverse(const RingElement& a, const RingSpec& spec) {
  const detail::DenseRing ring{spec};
  auto solved = detail::solve_multiplication(ring, ring.to_dense(a));
  if (!solved.solution) return std::nullopt;
  return ring.from_dense(*solved.solution);
}

inline bool is_invertible(const RingElement& a, const RingSpec& spec) {
  return inverse(a, spec).has_value();
}

/// A nonzero b with a*b = 0, present exactly when a is not a unit.
inline std::optional<RingElement> annihilator(const RingElement& a, const RingSpec& spec) {
  const detail::DenseRing ring{spec};
  auto solved = detail::solve_multiplication(ring, ring.to_dense(a));
  if (!solved.kernel) return std::nullopt;
  return ring.from_dense(*solved.kernel);
}

/// Order of a nonzero element.
///
/// Units: least k >= 1 with a^k = 1. Non-units: least k >= 2 such that a^k
/// repeats an earlier power a^j (j >= 1). When the power sequence returns to
/// a itself this is the least k >= 2 with a^k = a; nilpotent elements, whose
/// powers settle at 0, get the index at which 0 first repeats.
///
/// Throws std::domain_error for zero and std::length_error past max_steps.
inline std::uint64_t order(const RingElement& a, const RingSpec& spec,
                           std::uint64_t max_steps = std::uint64_t{1} << 24) {
  if (a.is_zero()) throw std::domain_error("order of the zero element is undefined");
  const detail::DenseRing ring{spec};
  const auto base = ring.to_dense(a);
  auto power = base;

  if (is_invertible(a, spec)) {
    const auto one = ring.one();
    for (std::uint64_t k = 1; k <= max_steps; ++k) {
      if (power == one) return k;
      power = ring.mul(power, base);
    }
    throw std::length_error("order search exceeded step limit");
  }

  std::map<detail::BitVec, std::uint64_t> seen{{power, 1}};
  for (std::uint64_t k = 2; k <= max_steps; ++k) {
    power = ring.mul(power, base);
    if (seen.contains(power)) return k;
    seen.emplace(power, k);
  }
  throw std::length_error("order search exceeded step limit");
}

struct MulTable {
  std::vector<Monomial> basis;
  std::vector<std::vector<RingElement>> cells;  // cells[row][col]
};

/// Products of all pairs of basis monomials, rows and columns in diagonal
/// order. Requires m*n <= 64.
inline MulTable mul_table(const RingSpec& spec) {
  if (spec.cells() > 64) {
    throw std::invalid_argument("multiplication table limited to m*n <= 64");
  }
  MulTable t;
  t.basis = ring_basis(spec);
  for (const auto& g : t.basis) {
    auto& row = t.cells.emplace_back();
    for (const auto& h : t.basis) row.push_back(reduce(Poly{g * h}, spec));
  }
  return t;
}

/// All 2^(mn) - 1 nonzero elements. Element v has basis monomial b in its
/// support iff bit b of v is set (basis in diagonal order); output is in
/// ascending v. Requires m*n <= 24.
inline std::vector<RingElement> enumerate_nonzero(const RingSpec& spec) {
  if (spec.cells() > 24) {
    throw std::invalid_argument("enumeration limited to m*n <= 24");
  }
  const auto basis = ring_basis(spec);
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  std::vector<RingElement> out;
  out.reserve(count - 1);
  for (std::uint64_t v = 1; v < count; ++v) {
    std::vector<Monomial> terms;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if ((v >> b) & 1U) terms.push_back(basis[b]);
    }
    out.push_back(reduce(Poly::from_support(std::move(terms)), spec));
  }
  return out;
}

}  // namespace gfpat
