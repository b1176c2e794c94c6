#pragma once

// Enumerations of the monomials x^i y^j (i, j >= 0) and the polynomial <->
// bit-sequence codec each one induces.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gfpat/core_poly.hpp"
#include "gfpat/seq_gen.hpp"

namespace gfpat {

/// diagonal:      antidiagonals d = i+j in turn, each from x^d up to y^d.
/// boustrophedon: antidiagonals again, alternating direction (odd d runs
///                from x^d to y^d, even d from y^d to x^d).
/// meander:       square shells s = max(i, j); odd shells go
///                (s,0) -> (s,s) -> (0,s), even shells the reverse.
enum class TermOrdering { diagonal, boustrophedon, meander };

inline std::string_view ordering_name(TermOrdering o) {
  switch (o) {
    case TermOrdering::diagonal: return "diagonal";
    case TermOrdering::boustrophedon: return "boustrophedon";
    case TermOrdering::meander: return "meander";
  }
  return "?";
}

inline std::optional<TermOrdering> parse_ordering(std::string_view name) {
  if (name == "diagonal") return TermOrdering::diagonal;
  if (name == "boustrophedon") return TermOrdering::boustrophedon;
  if (name == "meander") return TermOrdering::meander;
  return std::nullopt;
}

namespace detail {

/// Largest r with r*r <= v.
inline std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline std::uint64_t triangle(std::uint64_t d) { return d * (d + 1) / 2; }

/// Antidiagonal holding index k: largest d with d(d+1)/2 <= k.
inline std::uint64_t antidiagonal_of(std::uint64_t k) {
  std::uint64_t d = (isqrt(8 * k + 1) - 1) / 2;
  while (triangle(d) > k) --d;
  while (triangle(d + 1) <= k) ++d;
  return d;
}

}  // namespace detail

inline Monomial monomial_at(TermOrdering o, std::uint64_t k) {
  auto mono = [](std::uint64_t i, std::uint64_t j) {
    return Monomial{checked_exponent(static_cast<std::int64_t>(i)),
                    checked_exponent(static_cast<std::int64_t>(j))};
  };
  switch (o) {
    case TermOrdering::diagonal: {
      const auto d = detail::antidiagonal_of(k);
      const auto j = k - detail::triangle(d);
      return mono(d - j, j);
    }
    case TermOrdering::boustrophedon: {
      const auto d = detail::antidiagonal_of(k);
      const auto offset = k - detail::triangle(d);
      const auto j = (d % 2 == 1) ? offset : d - offset;
      return mono(d - j, j);
    }
    case TermOrdering::meander: {
      const auto s = detail::isqrt(k);
      const auto p = k - s * s;  // position along the shell, 0..2s
      if (s % 2 == 1) return p <= s ? mono(s, p) : mono(2 * s - p, s);
      return p <= s ? mono(p, s) : mono(s, 2 * s - p);
    }
  }
  throw std::logic_error("unknown ordering");
}

inline std::uint64_t index_of(TermOrdering o, const Monomial& t) {
  if (t.i < 0 || t.j < 0) {
    throw std::invalid_argument("monomial " + to_string(t) + " has a negative exponent");
  }
  const std::uint64_t i = static_cast<std::uint64_t>(t.i);
  const std::uint64_t j = static_cast<std::uint64_t>(t.j);
  switch (o) {
    case TermOrdering::diagonal:
      return detail::triangle(i + j) + j;
    case TermOrdering::boustrophedon: {
      const auto d = i + j;
      return detail::triangle(d) + ((d % 2 == 1) ? j : d - j);
    }
    case TermOrdering::meander: {
      const auto s = std::max(i, j);
      const auto base = s * s;
      if (s % 2 == 1) return i == s ? base + j : base + 2 * s - i;
      return j == s ? base + i : base + 2 * s - j;
    }
  }
  throw std::logic_error("unknown ordering");
}

/// Bit k is set iff monomial_at(o, k) is in the support. Without an explicit
/// length the sequence ends at the last set bit.
inline BitSeq encode(const Poly& p, TermOrdering o, std::optional<std::size_t> length = {}) {
  std::uint64_t needed = 0;
  std::vector<std::uint64_t> indices;
  indices.reserve(p.size());
  for (const auto& t : p.terms()) {
    indices.push_back(index_of(o, t));
    needed = std::max(needed, indices.back() + 1);
  }
  if (length && *length < needed) {
    throw std::invalid_argument("length " + std::to_string(*length) +
                                " cannot hold the polynomial (needs " +
                                std::to_string(needed) + " bits)");
  }
  if (needed > (std::uint64_t{1} << 28)) throw std::length_error("encoded sequence too long");
  BitSeq s;
  s.bits.assign(length.value_or(static_cast<std::size_t>(needed)), 0);
  for (auto k : indices) s.bits[k] = 1;
  return s;
}

inline Poly decode(const BitSeq& s, TermOrdering o) {
  std::vector<Monomial> terms;
  for (std::size_t k = 0; k < s.bits.size(); ++k) {
    if (s.bits[k]) terms.push_back(monomial_at(o, k));
  }
  return Poly::from_support(std::move(terms));
}

}  // namespace gfpat
