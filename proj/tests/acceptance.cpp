// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gfpat/gfpat.hpp"
#include "oracles.hpp"

using namespace gfpat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

Poly P(std::string_view text) { return parse_poly(text); }

Outcome table1() {
  Outcome o;
  const auto t = mul_table(RingSpec(3, 3));
  const auto& expected = oracle::table_3x3();
  int equal = 0;
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) {
      const bool ok = to_string(t.cells[r][c]) == expected[r][c];
      equal += ok;
      o.expect(ok, "cell " + std::to_string(r) + "," + std::to_string(c));
    }
  }
  o.expect(t.cells.size() == 9, "table has 9 rows");
  if (o.pass) o.detail = std::to_string(equal) + "/81 cells";
  return o;
}

Outcome table2() {
  Outcome o;
  const RingSpec spec(3, 3);
  const std::vector<std::uint64_t> expected{1, 3, 3, 3, 3, 3, 3, 3, 3};
  const auto basis = ring_basis(spec);
  std::string got;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto ord = order(reduce(Poly{basis[k]}, spec), spec);
    got += std::to_string(ord) + " ";
    o.expect(ord == expected[k], to_string(basis[k]));
  }
  o.detail = "orders " + got;
  return o;
}

Outcome table3() {
  Outcome o;
  const RingSpec spec(3, 3);
  const std::vector<std::pair<const char*, std::uint64_t>> rows{
      {"1", 1},     {"1+x", 4},     {"1+x+y", 4},   {"1+x^2", 4},
      {"1+x*y", 4}, {"1+x+x*y", 4}, {"1+x^2*y", 4}, {"1+x^2*y^2", 4}};
  std::string got;
  for (const auto& [e, want] : rows) {
    const auto ord = order(reduce(P(e), spec), spec);
    got += std::to_string(ord) + " ";
    o.expect(ord == want, e);
  }
  o.detail = "orders " + got;
  return o;
}

Outcome example2() {
  Outcome o;
  const RingSpec spec(2, 2);
  std::set<std::string> listed;
  for (auto s : {"1", "x", "y", "1+x", "1+y", "x*y", "x+y", "1+x+y", "1+x+x*y", "1+y+x*y",
                 "x+x*y", "y+x*y", "x+y+x*y", "1+x*y", "1+x+y+x*y"}) {
    listed.insert(to_string(reduce(P(s), spec)));
  }
  const auto all = enumerate_nonzero(spec);
  std::set<std::string> produced;
  for (const auto& e : all) produced.insert(to_string(e));
  o.expect(all.size() == 15, "15 elements");
  o.expect(produced.size() == 15, "elements distinct");
  o.expect(produced == listed, "same set as the listing");
  o.detail = std::to_string(all.size()) + " elements";
  return o;
}

Outcome folding() {
  Outcome o;
  const auto s = parse_bits("000100110101111");
  o.expect(to_string(fold(s, 3, 5, FoldScheme::diagonal)) == "01111\n00110\n01001\n", "diagonal");
  o.expect(to_string(fold(s, 3, 5, FoldScheme::row_major)) == "00010\n01101\n01111\n", "rows");
  o.expect(to_string(fold(s, 3, 5, FoldScheme::col_major)) == "01111\n00101\n00011\n", "columns");
  o.expect(to_string(fold(dseq(19, 18), 3, 6, FoldScheme::row_major)) ==
               "000011\n010111\n100101\n",
           "1/19 array");
  o.detail = "4 arrays";
  return o;
}

Outcome dsequence() {
  Outcome o;
  const auto s = dseq(19, 18);
  o.expect(to_string(s) == "000011010111100101", "bits");
  o.expect(period(dseq(19, 36)) == 18, "period");
  o.expect(s.period_hint == 18u, "period hint");
  int complements = 0;
  const auto two = dseq(19, 36);
  for (std::size_t k = 0; k < 18; ++k) complements += (two.bits[k] ^ two.bits[k + 9]) == 1;
  o.expect(complements == 18, "half-period complement");
  o.detail = to_string(s) + ", complement at " + std::to_string(complements) + "/18";
  return o;
}

Outcome lfsr() {
  Outcome o;
  const auto s = poly_reciprocal_seq(P("1+x+x^3"), 21);
  const auto p = period(s);
  const std::string phase = to_string(poly_reciprocal_seq(P("1+x+x^3"), 7));
  o.expect(p == 7, "period 7");
  o.expect((phase + phase).find("0100111") != std::string::npos, "rotation of 0100111");
  o.detail = "phase " + phase + ", period " + std::to_string(p);
  return o;
}

Outcome figure8() {
  Outcome o;
  const auto r = reciprocal(P("1+x+x*y^2"), Window(4, 3));
  o.expect(r == P("1+x+x*y^2+x^2+x^3+x^3*y^2+x^4"), "expansion");
  o.detail = to_string(r);
  return o;
}

Outcome lucas() {
  Outcome o;
  const auto r = reciprocal(P("1+x+y"), Window(63, 63));
  int checks = 0;
  for (int i = 0; i <= 63; ++i) {
    for (int j = 0; j <= 63; ++j, ++checks) {
      o.expect(r.contains({i, j}) == oracle::binomial_is_odd(i + j, i),
               std::to_string(i) + "," + std::to_string(j));
    }
  }
  o.detail = std::to_string(checks) + " coefficients";
  return o;
}

Outcome pascal_rows() {
  Outcome o;
  const auto pascal = oracle::pascal_parity(64);
  const auto r = reciprocal(P("1+x+x*y"), Window(63, 63));
  int checks = 0;
  for (int i = 0; i <= 63; ++i) {
    for (int j = 0; j <= 63; ++j, ++checks) {
      const bool expected = j <= i && pascal[i][j] == 1;
      o.expect(r.contains({i, j}) == expected, std::to_string(i) + "," + std::to_string(j));
    }
  }
  o.detail = std::to_string(checks) + " coefficients";
  return o;
}

Outcome defining_identity() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> side(0, 31);
  for (int trial = 0; trial < 200; ++trial) {
    const Window w(side(rng), side(rng));
    const Poly q = oracle::random_admissible(rng, 5, 5, 6);
    o.expect(truncate(q * reciprocal(q, w), w) == Poly::one(), to_string(q));
  }
  o.detail = "200 random denominators";
  return o;
}

Outcome figures10to12() {
  Outcome o;
  const Window w(4, 3);
  const auto cross = evaluate(parse("1/(1+x) + x^2/(1+y) + 1/(1+x+x*y^2)"), w);
  o.expect(oracle::cells_of(cross) ==
               oracle::Cells{{2, 0}, {2, 1}, {2, 2}, {2, 3}, {1, 2}, {3, 2}},
           "cross");
  const auto checker =
      evaluate(parse("1/(1+x*y) + x^2/(1+x*y) + y^2/(1+x*y) + x^4/(1+x*y)"), w);
  oracle::Cells even;
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 3; ++j) {
      if ((i - j) % 2 == 0) even.insert({i, j});
    }
  }
  o.expect(even.size() == 10 && oracle::cells_of(checker) == even, "checkerboard");
  const auto leftward = evaluate(parse("x^4/(1+x^-1*y)"), w);
  o.expect(oracle::cells_of(leftward) == oracle::Cells{{4, 0}, {3, 1}, {2, 2}, {1, 3}},
           "leftward diagonal");
  o.detail = "cross, checkerboard, leftward diagonal";
  return o;
}

Outcome ring_properties() {
  Outcome o;
  auto check_triple = [&](const RingSpec& spec, const RingElement& a, const RingElement& b,
                          const RingElement& c) {
    o.expect(ring_mul(a, b, spec) == ring_mul(b, a, spec), "commutativity");
    o.expect(ring_mul(ring_mul(a, b, spec), c, spec) == ring_mul(a, ring_mul(b, c, spec), spec),
             "associativity");
    o.expect(ring_mul(a, ring_add(b, c, spec), spec) ==
                 ring_add(ring_mul(a, b, spec), ring_mul(a, c, spec), spec),
             "distributivity");
  };

  const RingSpec small(2, 2);
  std::vector<RingElement> elems{reduce(Poly{}, small)};
  for (const auto& e : enumerate_nonzero(small)) elems.push_back(e);
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) check_triple(small, a, b, c);
    }
  }

  const RingSpec big(3, 3);
  const auto nonzero = enumerate_nonzero(big);
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    check_triple(big, nonzero[pick(rng)], nonzero[pick(rng)], nonzero[pick(rng)]);
  }

  std::size_t units = 0, zero_divisors = 0;
  for (const RingSpec& spec : {small, big}) {
    const auto one = ring_one(spec);
    for (const auto& a : enumerate_nonzero(spec)) {
      if (const auto inv = inverse(a, spec)) {
        ++units;
        o.expect(ring_mul(a, *inv, spec) == one, "a * a^-1 = 1 for " + to_string(a));
      } else {
        ++zero_divisors;
        const auto b = annihilator(a, spec);
        o.expect(b && !b->is_zero() && ring_mul(a, *b, spec).is_zero(),
                 "annihilator for " + to_string(a));
      }
    }
  }
  o.detail = "4096 + 1000 triples; " + std::to_string(units) + " units, " +
             std::to_string(zero_divisors) + " zero divisors";
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::mt19937 rng(31337);
  int codec = 0, folds = 0, dsl = 0;
  for (auto ord : {TermOrdering::diagonal, TermOrdering::boustrophedon, TermOrdering::meander}) {
    for (int trial = 0; trial < 500; ++trial, ++codec) {
      const Poly p = oracle::random_poly(rng, 0, 15, 12);
      o.expect(decode(encode(p, ord), ord) == p, "codec " + to_string(p));
    }
  }
  for (std::size_t rows = 1; rows <= 16; ++rows) {
    for (std::size_t cols = 1; cols <= 16; ++cols) {
      if (std::gcd(rows, cols) != 1) continue;
      for (auto scheme : {FoldScheme::diagonal, FoldScheme::row_major, FoldScheme::col_major}) {
        BitSeq s;
        for (std::size_t k = 0; k < rows * cols; ++k) s.bits.push_back(rng() & 1U);
        o.expect(unfold(fold(s, rows, cols, scheme), scheme) == s,
                 "fold " + std::to_string(rows) + "x" + std::to_string(cols));
        ++folds;
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial, ++dsl) {
    const auto e = oracle::random_expr(rng);
    o.expect(parse(to_string(e)) == e, "dsl " + to_string(e));
  }
  o.detail = std::to_string(codec) + " codec, " + std::to_string(folds) + " fold, " +
             std::to_string(dsl) + " dsl";
  return o;
}

Outcome renderer_goldens() {
  Outcome o;
  o.expect(render_pbm(Poly::one(), Window(1, 1)) == "P1\n2 2\n1 0\n0 0\n", "pbm");
  const Window w(4, 3);
  const auto cross = evaluate(parse("1/(1+x) + x^2/(1+y) + 1/(1+x+x*y^2)"), w);
  o.expect(render_ascii(cross, w) == "..#..\n..#..\n.###.\n..#..", "ascii cross");
  for (const auto& p : {cross, Poly::one(), Poly{}, reciprocal(P("1+x+y"), w)}) {
    const auto svg = render_svg(p, w);
    std::size_t rects = 0;
    for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) {
      ++rects;
    }
    o.expect(rects == p.size(), "svg rect count");
  }
  o.detail = "pbm, ascii, svg";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC01 monomial multiplication table mod (3,3)", table1},
      {"AC02 monomial orders mod (3,3)", table2},
      {"AC03 orders of sums mod (3,3)", table3},
      {"AC04 nonzero elements mod (2,2)", example2},
      {"AC05 sequence-to-array foldings", folding},
      {"AC06 d-sequence of 19", dsequence},
      {"AC07 shift register 1/(1+x+x^3)", lfsr},
      {"AC08 expansion of 1/(1+x+xy^2)", figure8},
      {"AC09 Lucas oracle for 1/(1+x+y)", lucas},
      {"AC10 Pascal oracle for 1/(1+x+xy)", pascal_rows},
      {"AC11 defining identity q * (1/q) = 1", defining_identity},
      {"AC12 cross, checkerboard, leftward patterns", figures10to12},
      {"AC13 quotient ring properties", ring_properties},
      {"AC14 codec, fold and DSL round trips", round_trips},
      {"AC15 renderer goldens", renderer_goldens},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] %s (%s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = seconds < 10.0;
  failed += !fast;
  std::printf("[%s] total runtime %.2f s (limit 10 s)\n", fast ? "PASS" : "FAIL", seconds);
  std::printf("%d failure(s)\n", failed);
  return failed == 0 ? 0 : 1;
}
