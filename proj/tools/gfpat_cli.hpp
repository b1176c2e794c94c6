#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it with in-memory streams.

#include <algorithm>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfpat/gfpat.hpp"

namespace gfpat::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::pair<int, int> parse_pair(const std::string& text, const std::string& seps,
                                      const std::string& flag) {
  const auto cut = text.find_first_of(seps);
  const std::string usage = flag + " expects two integers separated by one of \"" + seps +
                            "\", got \"" + text + "\"";
  if (cut == std::string::npos) throw UsageError(usage);
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, cut);
    const std::string b = text.substr(cut + 1);
    const int first = std::stoi(a, &used_a);
    const int second = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw UsageError(usage);
    return {first, second};
  } catch (const std::logic_error&) {
    throw UsageError(usage);
  }
}

struct RenderFlags {
  std::string grid;
  std::string size;
  std::string mode = "window";
  std::string format;
  std::string origin = "top-left";
  char on = '#';
  char off = '.';
  double cell = 10.0;
  std::optional<double> rx;
  std::optional<double> ry;
  std::string expr;
  bool from_stdin = false;

  Window window() const {
    const EvalMode m = mode == "wrap" ? EvalMode::wrap : EvalMode::window;
    if (!grid.empty() && !size.empty()) throw UsageError("--grid and --size are exclusive");
    if (!size.empty()) {
      const auto [w, h] = parse_pair(size, "x", "--size");
      if (w < 1 || h < 1) throw UsageError("--size dimensions must be positive");
      return Window(w - 1, h - 1, m);
    }
    const auto [mx, my] = parse_pair(grid.empty() ? "4x3" : grid, "x", "--grid");
    if (mx < 0 || my < 0) throw UsageError("--grid maxima must be nonnegative");
    return Window(mx, my, m);
  }

  RenderConfig config() const {
    RenderConfig cfg;
    cfg.glyph_on = on;
    cfg.glyph_off = off;
    cfg.origin = origin == "bottom-left" ? Origin::bottom_left : Origin::top_left;
    cfg.base_cell = cell;
    if (rx || ry) cfg.perspective = Perspective{rx.value_or(1.0), ry.value_or(1.0)};
    return cfg;
  }
};

inline void add_render_flags(CLI::App& sub, RenderFlags& f, const std::string& default_format) {
  f.format = default_format;
  auto* expr = sub.add_option("--expr", f.expr, "pattern expression, e.g. \"1/(1+x+y)\"");
  auto* in = sub.add_flag("--stdin", f.from_stdin, "read the expression from standard input");
  expr->excludes(in);
  sub.add_option("--grid", f.grid, "inclusive maximum exponents MxN (default 4x3)");
  sub.add_option("--size", f.size, "cell counts WxH, i.e. (M+1)x(N+1)");
  sub.add_option("--mode", f.mode)->check(CLI::IsMember({"window", "wrap"}));
  sub.add_option("--format", f.format)->check(CLI::IsMember({"terms", "ascii", "pbm", "svg"}));
  sub.add_option("--origin", f.origin)->check(CLI::IsMember({"top-left", "bottom-left"}));
  sub.add_option("--on", f.on, "ASCII glyph for a set cell");
  sub.add_option("--off", f.off, "ASCII glyph for an empty cell");
  sub.add_option("--cell", f.cell, "SVG base cell size");
  sub.add_option("--rx", f.rx, "SVG column shrink ratio in (0,1]");
  sub.add_option("--ry", f.ry, "SVG row shrink ratio in (0,1]");
}

inline std::string render_pattern(const RenderFlags& f, std::istream& in) {
  std::string text = f.expr;
  if (f.from_stdin) {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else if (text.empty()) {
    throw UsageError("one of --expr or --stdin is required");
  }
  const Window w = f.window();
  const Poly pattern = evaluate(parse(text), w);
  if (f.format == "terms") return to_string(pattern) + "\n";
  if (f.format == "ascii") return render_ascii(pattern, w, f.config()) + "\n";
  if (f.format == "pbm") return render_pbm(pattern, w);
  return render_svg(pattern, w, f.config());
}

inline RingSpec ring_from(const std::string& mod) {
  const auto [m, n] = parse_pair(mod, ",x", "--mod");
  if (m < 1 || n < 1) throw UsageError("--mod moduli must be positive");
  return RingSpec(m, n);
}

inline std::string format_table(const MulTable& t) {
  std::vector<std::vector<std::string>> cells;
  auto& header = cells.emplace_back(std::vector<std::string>{"*"});
  for (const auto& b : t.basis) header.push_back(to_string(b));
  for (std::size_t r = 0; r < t.basis.size(); ++r) {
    auto& row = cells.emplace_back(std::vector<std::string>{to_string(t.basis[r])});
    for (const auto& e : t.cells[r]) row.push_back(to_string(e));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline FoldScheme scheme_from(const std::string& name) {
  if (name == "diagonal") return FoldScheme::diagonal;
  if (name == "row-major" || name == "row_major") return FoldScheme::row_major;
  return FoldScheme::col_major;
}

}  // namespace detail

/// Runs one invocation. args excludes the program name. Standard output is
/// written only on success.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Algebra of two-dimensional binary patterns over GF(2)", "gfpat"};
  app.require_subcommand(1);

  detail::RenderFlags expand_flags;
  auto* expand = app.add_subcommand("expand", "evaluate a pattern expression (default: terms)");
  detail::add_render_flags(*expand, expand_flags, "terms");

  detail::RenderFlags render_flags;
  auto* render = app.add_subcommand("render", "evaluate and draw a pattern (default: ascii)");
  detail::add_render_flags(*render, render_flags, "ascii");

  std::string element, mod;
  auto* order_cmd = app.add_subcommand("order", "order of a quotient-ring element");
  order_cmd->add_option("--element", element)->required();
  order_cmd->add_option("--mod", mod, "moduli M,N of x^M-1, y^N-1")->required();

  auto* table_cmd = app.add_subcommand("table", "monomial multiplication table");
  table_cmd->add_option("--mod", mod)->required();

  auto* invert_cmd = app.add_subcommand("invert", "inverse of a quotient-ring element");
  invert_cmd->add_option("--element", element)->required();
  invert_cmd->add_option("--mod", mod)->required();

  std::string seq, scheme = "diagonal";
  std::size_t rows = 0, cols = 0;
  auto* map_cmd = app.add_subcommand("map", "fold a bit sequence into an array");
  map_cmd->add_option("--seq", seq)->required();
  map_cmd->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
  map_cmd->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  map_cmd->add_option("--scheme", scheme)
      ->check(CLI::IsMember({"diagonal", "row-major", "col-major", "row_major", "col_major"}));

  std::uint64_t prime = 0;
  std::optional<std::size_t> count;
  auto* dseq_cmd = app.add_subcommand("dseq", "binary expansion of 1/p");
  dseq_cmd->add_option("--prime", prime)->required();
  dseq_cmd->add_option("--count", count, "number of bits (default: one period)")
      ->check(CLI::PositiveNumber);

  std::string poly_text;
  auto* lfsr_cmd = app.add_subcommand("lfsr", "coefficients of 1/q(x)");
  lfsr_cmd->add_option("--poly", poly_text)->required();
  lfsr_cmd->add_option("--count", count, "number of bits (default: one period)")
      ->check(CLI::PositiveNumber);

  std::string ordering = "diagonal";
  std::optional<std::size_t> length;
  auto* encode_cmd = app.add_subcommand("encode", "polynomial to bit sequence");
  encode_cmd->add_option("--poly", poly_text)->required();
  encode_cmd->add_option("--ordering", ordering)
      ->check(CLI::IsMember({"diagonal", "boustrophedon", "meander"}));
  encode_cmd->add_option("--length", length)->check(CLI::PositiveNumber);

  auto* decode_cmd = app.add_subcommand("decode", "bit sequence to polynomial");
  decode_cmd->add_option("--seq", seq)->required();
  decode_cmd->add_option("--ordering", ordering)
      ->check(CLI::IsMember({"diagonal", "boustrophedon", "meander"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  std::ostringstream buf;
  try {
    if (expand->parsed()) {
      buf << detail::render_pattern(expand_flags, in);
    } else if (render->parsed()) {
      buf << detail::render_pattern(render_flags, in);
    } else if (order_cmd->parsed()) {
      const RingSpec ring = detail::ring_from(mod);
      buf << order(reduce(parse_poly(element), ring), ring) << "\n";
    } else if (table_cmd->parsed()) {
      buf << detail::format_table(mul_table(detail::ring_from(mod)));
    } else if (invert_cmd->parsed()) {
      const RingSpec ring = detail::ring_from(mod);
      const auto inv = inverse(reduce(parse_poly(element), ring), ring);
      if (!inv) throw std::domain_error(element + " is not invertible modulo (" + mod + ")");
      buf << to_string(*inv) << "\n";
    } else if (map_cmd->parsed()) {
      const auto grid = fold(parse_bits(seq), rows, cols, detail::scheme_from(scheme));
      buf << to_string(grid);
    } else if (dseq_cmd->parsed()) {
      auto s = dseq(prime, 1);
      buf << to_string(dseq(prime, count.value_or(*s.period_hint))) << "\n";
    } else if (lfsr_cmd->parsed()) {
      const Poly q = parse_poly(poly_text);
      auto probe = poly_reciprocal_seq(q, 1);
      if (!count && !probe.period_hint) {
        throw UsageError("--count is required when the period is not known");
      }
      buf << to_string(poly_reciprocal_seq(q, count.value_or(probe.period_hint.value_or(1))))
          << "\n";
    } else if (encode_cmd->parsed()) {
      buf << to_string(encode(parse_poly(poly_text), *parse_ordering(ordering), length)) << "\n";
    } else if (decode_cmd->parsed()) {
      buf << to_string(decode(parse_bits(seq), *parse_ordering(ordering))) << "\n";
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  out << buf.str();
  return kOk;
}

}  // namespace gfpat::cli
