#include <doctest.h>

#include "psc/error.hpp"
#include "psc/multiplet.hpp"
#include "support/reference_tables.hpp"

using namespace psc;
using psc::testing::generator_list;

namespace {

const AlgebraSignature k6d{1, 3};

VirtualRep R(const char* s) { return parse_rep(s, k6d); }

void check_list(const MultipletTable& t, const std::vector<VirtualRep>& expected) {
  const auto got = generator_list(t, expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(t.source);
    CAPTURE(i);
    const VirtualRep want = i < expected.size() ? expected[i] : VirtualRep(k6d);
    CHECK(format_rep(got[i]) == format_rep(want));
  }
}

BettiTable betti(int first_row, std::vector<std::vector<std::int64_t>> rows) {
  return BettiTable{first_row, 0, std::move(rows)};
}

}  // namespace

TEST_CASE("vector, hyper and antifield multiplets") {
  const auto v = build_multiplet(BundlePreset::line(0, 0));
  CHECK(v.certified);
  CHECK(v.betti() == betti(0, {{1, 0, 0, 0}, {0, 6, 8, 3}}));
  CHECK(build_multiplet(BundlePreset::line(1, 0)).betti() == betti(0, {{2, 4, 0, 0}, {0, 0, 4, 2}}));
  CHECK(build_multiplet(BundlePreset::line(2, 0)).betti() == betti(0, {{3, 8, 6, 0}, {0, 0, 0, 1}}));
  for (int n = 0; n <= 6; ++n) check_list(build_multiplet(BundlePreset::line(n, 0)),
                                          psc::testing::line_n0_reference(n).expected());
}

TEST_CASE("O(0,m) generator lists and Betti tables") {
  for (int m = 1; m <= 3; ++m) check_list(build_multiplet(BundlePreset::line(0, m)),
                                          psc::testing::line_0m_reference(m).expected());
  CHECK(build_multiplet(BundlePreset::line(0, 1)).betti() == betti(0, {{4, 12, 12, 4}}));
  CHECK(build_multiplet(BundlePreset::line(0, 2)).betti() == betti(0, {{10, 40, 65, 56, 28, 8, 1}}));
}

TEST_CASE("geometric bundles") {
  for (const auto& ref : psc::testing::geometric_references()) {
    CAPTURE(ref.source);
    const auto t = psc::testing::build_reference(ref.source);
    CHECK(t.certified);
    CHECK(format_numerator(t.numerator()) == ref.numerator);
    check_list(t, ref.expected());
    CHECK(t.layout_consistent());
  }
}

TEST_CASE("two-row layout of the normal bundle table") {
  const auto t = build_multiplet(BundlePreset::named(BundleKind::normal));
  CHECK(t.start_weight() == -1);
  CHECK(t.betti() == BettiTable{-1, 0, {{8, 19, 8, 0, 0}, {0, 0, 10, 8, 1}}});
}

TEST_CASE("the conormal table splits its mixed weight across two rows") {
  const auto t = build_multiplet(BundlePreset::named(BundleKind::conormal));
  CHECK(t.betti() == BettiTable{2, 0, {{6, 8, 3, 0, 0, 0}, {0, 20, 40, 28, 8, 1}}});
  bool found_sym2 = false;
  for (const auto& c : t.layout)
    if (c.rep == R("[0|0,2,0]")) {
      found_sym2 = true;
      CHECK(c.koszul == 1);
      CHECK(c.cohom() == 3);
    }
  CHECK(found_sym2);
}

TEST_CASE("signed dimensions equal numerator coefficients") {
  for (const auto& b : BundlePreset::geometric()) {
    const auto t = build_multiplet(b);
    const auto p = t.numerator();
    for (int w = t.start_weight(); w <= t.last_weight(); ++w) {
      const auto* c = p.at(w);
      CHECK(t.entry(w).dim() == (c ? *c : 0));
    }
  }
}

TEST_CASE("layout inference") {
  std::map<int, VirtualRep> e;
  e.emplace(0, R("[0|0,0,0]"));
  e.emplace(2, R("-[0|0,1,0]"));
  e.emplace(3, R("[1|0,0,1]"));
  e.emplace(4, R("-[2|0,0,0]"));
  const auto layout = infer_layout(e);
  REQUIRE(layout.size() == 4);
  CHECK(layout[0].koszul == 0);
  CHECK(layout[1].koszul == 1);
  CHECK(layout[2].koszul == 2);
  CHECK(layout[3].koszul == 3);
  CHECK(layout[3].cohom() == 1);

  // Two positive weights in a row stay in the same Koszul degree.
  std::map<int, VirtualRep> f;
  f.emplace(0, R("[1|0,0,0]"));
  f.emplace(1, R("[0|1,0,0]"));
  const auto g = infer_layout(f);
  CHECK(g[0].koszul == 0);
  CHECK(g[1].koszul == 0);
}

TEST_CASE("shift and dual") {
  const auto v = build_multiplet(BundlePreset::line(0, 0));
  CHECK(shift(v, 0) == v);
  const auto s = shift(v, 3);
  CHECK(s.start_weight() == -3);
  CHECK(same_entries(shift(s, -3), v));

  // dual(line(0,0)) is the antifield multiplet shifted by 4.
  const auto anti = build_multiplet(BundlePreset::line(2, 0));
  CHECK(same_entries(dual(v), shift(anti, 4)));
  CHECK(dual(v).source == "dual(line(0,0))");
  CHECK(dual(dual(v)).source == "line(0,0)");
}

TEST_CASE("dual numerator identity for O(n,0) in the Cohen-Macaulay range") {
  for (int n = -1; n <= 3; ++n) {
    CAPTURE(n);
    const auto p = build_multiplet(BundlePreset::line(n, 0)).numerator();
    const auto q = build_multiplet(BundlePreset::line(2 - n, 0)).numerator();
    CHECK(q == -p.reflected(4));
    // Closed form on both sides.
    const HilbertNumerator closed(8, 0, {n + 1, -4 * n, 6 * (n - 1), -4 * (n - 2), n - 3});
    CHECK(p == closed);
  }
}

TEST_CASE("dual of a line bundle with an m-twist uses the 4-m shift") {
  for (int n = -1; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m) {
      if (!is_cohen_macaulay({n, m}).cohen_macaulay) continue;
      CAPTURE(n);
      CAPTURE(m);
      const auto t = build_multiplet(BundlePreset::line(n, m));
      const auto partner = build_multiplet(BundlePreset::line(m - n + 2, 0));
      CHECK(same_entries(dual(t), shift(partner, 4 - m)));
    }
}

TEST_CASE("short exact sequence families") {
  for (int n = 0; n <= 4; ++n) {
    const auto t = ses_family("euler-p1", n);
    CHECK(ses_additivity_check(t.sub, t.mid, t.quot, *t.preset).passed);
  }
  for (const char* f : {"normal", "conormal", "3d-quotient"}) {
    CAPTURE(f);
    const auto t = ses_family(f);
    const auto r = ses_additivity_check(t.sub, t.mid, t.quot, *t.preset);
    CHECK(r.passed);
    CHECK(r.failures.empty());
  }
  const auto broken = broken_euler_triple();
  const auto r = ses_additivity_check(broken.sub, broken.mid, broken.quot, *broken.preset);
  CHECK_FALSE(r.passed);
  REQUIRE(r.first_failure.has_value());
  CHECK(*r.first_failure == 0);
  CHECK(r.failures.front().what == "module");
  CHECK_THROWS_AS(ses_family("tangent"), UnknownPreset);
}

TEST_CASE("three-dimensional modules") {
  const auto q = named_module("3d:quotient-max2");
  const auto t = build_multiplet(q.gamma, *q.preset, q.id);
  const AlgebraSignature sl2{1};
  CHECK(t.betti() == BettiTable{0, 0, {{1, 0, 0}, {0, 3, 2}}});
  CHECK(t.entry(0) == parse_rep("[0]", sl2));
  CHECK(t.entry(1).is_zero());
  CHECK(t.entry(2) == parse_rep("-[2]", sl2));
  CHECK(t.entry(3) == parse_rep("[1]", sl2));
  CHECK(format_numerator(t.numerator()) == "(1 - 3t^2 + 2t^3) / (1-t)^2");

  for (const auto& id : named_module_ids()) {
    CAPTURE(id);
    const auto m = named_module(id);
    CHECK(build_multiplet(m.gamma, *m.preset, m.id).certified);
  }
  CHECK_THROWS_AS(named_module("3d:nope"), UnknownPreset);
}

TEST_CASE("certification failures") {
  BuildOptions opts;
  opts.max_weight = 4;
  CHECK_THROWS_AS(build_multiplet(BundlePreset::line(0, 0), opts), NotCertified);
  opts.allow_uncertified = true;
  const auto t = build_multiplet(BundlePreset::line(0, 0), opts);
  CHECK_FALSE(t.certified);
  CHECK(t.max_weight == 4);
}

TEST_CASE("text rendering") {
  const auto text = render_text(build_multiplet(BundlePreset::line(0, 0)));
  CHECK(text.find("numerator: (1 - 6t^2 + 8t^3 - 3t^4) / (1-t)^8") != std::string::npos);
  CHECK(text.find("0 [ 1  -  -  - ]") != std::string::npos);
  CHECK(text.find("1 [ -  6  8  3 ]") != std::string::npos);
  CHECK(text.find("layout: conjectural") != std::string::npos);
  CHECK(text.find("W_2 = -[0|0,1,0]") != std::string::npos);
}
