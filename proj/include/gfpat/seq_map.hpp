#pragma once

// Folding binary sequences into rectangular arrays and back.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfpat/seq_gen.hpp"

namespace gfpat {

class BitGrid {
 public:
  BitGrid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  std::uint8_t& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  friend bool operator==(const BitGrid&, const BitGrid&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> cells_;
};

/// One row per line, '0'/'1' characters, each line newline-terminated.
inline std::string to_string(const BitGrid& g) {
  std::string out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out += g.at(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

enum class FoldScheme { diagonal, row_major, col_major };

struct CellIndex {
  std::size_t row;
  std::size_t col;
};

inline void check_fold_shape(std::size_t rows, std::size_t cols, FoldScheme scheme) {
  if (scheme == FoldScheme::diagonal && std::gcd(rows, cols) != 1) {
    throw std::domain_error("rows and cols must be coprime for diagonal folding");
  }
}

/// Grid cell receiving term k (0-based) of the sequence.
///
/// diagonal walks down the main diagonal and wraps at the edges: term k lands
/// at (k mod rows, k mod cols), a bijection iff gcd(rows, cols) = 1.
inline CellIndex fold_position(std::size_t k, std::size_t rows, std::size_t cols,
                               FoldScheme scheme) {
  switch (scheme) {
    case FoldScheme::diagonal:
      return {k % rows, k % cols};
    case FoldScheme::row_major:
      return {k / cols, k % cols};
    case FoldScheme::col_major:
      return {k % rows, k / rows};
  }
  throw std::logic_error("unknown fold scheme");
}

inline BitGrid fold(const BitSeq& s, std::size_t rows, std::size_t cols, FoldScheme scheme) {
  BitGrid g(rows, cols);
  check_fold_shape(rows, cols, scheme);
  if (s.size() != rows * cols) {
    throw std::invalid_argument("sequence length " + std::to_string(s.size()) +
                                " does not equal rows*cols = " + std::to_string(rows * cols));
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto [r, c] = fold_position(k, rows, cols, scheme);
    g.at(r, c) = s.bits[k];
  }
  return g;
}

inline BitSeq unfold(const BitGrid& g, FoldScheme scheme) {
  check_fold_shape(g.rows(), g.cols(), scheme);
  BitSeq s;
  s.bits.resize(g.rows() * g.cols());
  for (std::size_t k = 0; k < s.bits.size(); ++k) {
    const auto [r, c] = fold_position(k, g.rows(), g.cols(), scheme);
    s.bits[k] = g.at(r, c);
  }
  return s;
}

}  // namespace gfpat
