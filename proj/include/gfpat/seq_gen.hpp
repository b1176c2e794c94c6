#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfpat/core_poly.hpp"

namespace gfpat {

struct BitSeq {
  std::vector<std::uint8_t> bits;
  std::optional<std::size_t> period_hint;

  std::size_t size() const { return bits.size(); }
  bool operator==(const BitSeq& o) const { return bits == o.bits; }
};

/// Contiguous '0'/'1' characters.
inline std::string to_string(const BitSeq& s) {
  std::string out;
  out.reserve(s.bits.size());
  for (auto b : s.bits) out += b ? '1' : '0';
  return out;
}

inline BitSeq parse_bits(std::string_view text) {
  BitSeq s;
  s.bits.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != '0' && text[k] != '1') {
      throw std::invalid_argument("bit sequence has '" + std::string(1, text[k]) +
                                  "' at offset " + std::to_string(k));
    }
    s.bits.push_back(text[k] == '1');
  }
  return s;
}

/// Smallest t >= 1 with bits[k] = bits[k+t] wherever both exist
/// (length minus the longest proper border, via the KMP failure function).
inline std::size_t period(const BitSeq& s) {
  const auto& b = s.bits;
  if (b.empty()) throw std::invalid_argument("period of an empty sequence");
  std::vector<std::size_t> fail(b.size() + 1, 0);
  for (std::size_t k = 1, len = 0; k < b.size(); ++k) {
    while (len > 0 && b[k] != b[len]) len = fail[len];
    if (b[k] == b[len]) ++len;
    fail[k + 1] = len;
  }
  return b.size() - fail[b.size()];
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Binary expansion of the prime reciprocal 1/p: bit k is
/// (2^(k+1) mod p) mod 2, starting at exponent 1. The period hint is the
/// multiplicative order of 2 mod p.
inline BitSeq dseq(std::uint64_t p, std::size_t count) {
  if (p < 3 || !detail::is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
  if (count == 0) throw std::invalid_argument("count must be positive");
  BitSeq s;
  s.bits.reserve(count);
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < count; ++k) {
    r = detail::mul_mod(r, 2, p);
    s.bits.push_back(r & 1U);
  }
  std::size_t ord = 1;
  for (std::uint64_t v = 2 % p; v != 1; v = detail::mul_mod(v, 2, p)) ++ord;
  s.period_hint = ord;
  return s;
}

/// Coefficients c_0, c_1, ... of the series 1/q for univariate q(x) with
/// q(0) = 1: c_0 = 1, c_k = sum of c_(k-a) over x^a in q, a > 0. This is
/// the output of the linear feedback shift register with feedback
/// polynomial q.
///
/// The period hint is the exact period of the infinite sequence, computed
/// by cycling the register state when deg q <= 24.
inline BitSeq poly_reciprocal_seq(const Poly& q, std::size_t count) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  if (!q.contains({0, 0})) {
    throw std::invalid_argument("polynomial " + to_string(q) + " lacks a constant term");
  }
  std::vector<int> taps;
  for (const auto& t : q.terms()) {
    if (t.j != 0 || t.i < 0) {
      throw std::invalid_argument("polynomial " + to_string(q) +
                                  " is not a polynomial in x alone");
    }
    if (t.i > 0) taps.push_back(t.i);
  }

  BitSeq s;
  s.bits.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::uint8_t c = (k == 0) ? 1 : 0;
    for (int a : taps) {
      if (static_cast<std::size_t>(a) <= k) c ^= s.bits[k - a];
    }
    s.bits.push_back(c);
  }

  const int degree = taps.empty() ? 0 : taps.back();
  if (degree >= 1 && degree <= 24) {
    // State holds the last `degree` coefficients, newest in bit 0. The
    // recurrence is invertible (x^degree is a tap), so the orbit of the
    // initial state (..., 0, 0, c_0 = 1) is a pure cycle.
    const std::uint32_t mask = (1U << degree) - 1;
    const std::uint32_t start = 1;
    std::uint32_t state = start;
    std::size_t steps = 0;
    do {
      std::uint32_t next = 0;
      for (int a : taps) next ^= (state >> (a - 1)) & 1U;
      state = ((state << 1) | next) & mask;
      ++steps;
    } while (state != start);
    s.period_hint = steps;
  }
  return s;
}

}  // namespace gfpat
