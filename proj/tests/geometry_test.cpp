#include <doctest.h>

#include "psc/error.hpp"
#include "psc/geometry.hpp"

using namespace psc;

namespace {

const AlgebraSignature k6d{1, 3};

VirtualRep rep(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) return VirtualRep(k6d);
  return VirtualRep::irrep(k6d, Weight{a, b, c, d});
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Bott formula on projective space") {
  const auto p3 = bott_line_Pn(3, 2);
  CHECK(p3.dims == std::vector<std::int64_t>{10, 0, 0, 0});
  CHECK(p3.degree == 0);
  CHECK(p3.label == Weight{2, 0, 0});

  const auto top = bott_line_Pn(3, -6);
  CHECK(top.degree == 3);
  CHECK(top.dims[3] == 10);  // H^3(O(-6)) = Sym^2 dual
  CHECK(top.label == Weight{0, 0, 2});

  for (int a = -3; a <= -1; ++a) CHECK_FALSE(bott_line_Pn(3, a).degree.has_value());
  CHECK(bott_line_Pn(1, -2).dims == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("Kunneth cohomology of line bundles") {
  const auto c = kunneth_line({-2, 0});
  CHECK(c.dims[1] == 1);
  CHECK(c.reps[1] == rep(0, 0, 0, 0));
  CHECK(c.euler_characteristic() == -1);

  for (int a = -6; a <= 4; ++a)
    for (int b = -7; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(kunneth_line({a, b}).euler_characteristic() == line_euler_characteristic(a, b));
    }

  const auto twisted = kunneth_line({1, 0}, 2);
  CHECK(twisted.dims[0] == 4 * 10);
  CHECK(twisted.reps[0] == rep(3, 2, 0, 0));
}

TEST_CASE("Cohen-Macaulay line bundles O(n,0)") {
  for (int n = -6; n <= 8; ++n) {
    CAPTURE(n);
    const CmVerdict v = is_cohen_macaulay({n, 0});
    const bool expected = n >= -1 && n <= 3;
    CHECK(v.cohen_macaulay == expected);
    if (!expected) {
      REQUIRE(v.witness_twist.has_value());
      REQUIRE(v.witness_degree.has_value());
      const int i = *v.witness_degree;
      CHECK((i == 1 || i == 2 || i == 3));
      CHECK(kunneth_line({n, 0}, *v.witness_twist).dims[i] > 0);
    } else {
      for (int k = -12; k <= 12; ++k)
        for (int i = 1; i <= 3; ++i) CHECK(kunneth_line({n, 0}, k).dims[i] == 0);
    }
  }
}

TEST_CASE("Cohen-Macaulay check agrees with a direct scan over twists") {
  for (int n = -5; n <= 5; ++n)
    for (int m = -5; m <= 5; ++m) {
      bool middle = false;
      for (int k = -20; k <= 20 && !middle; ++k)
        for (int i = 1; i <= 3; ++i) middle = middle || kunneth_line({n, m}, k).dims[i] != 0;
      CAPTURE(n);
      CAPTURE(m);
      CHECK(is_cohen_macaulay({n, m}).cohen_macaulay == !middle);
    }
}

TEST_CASE("Serre duality for line bundles") {
  const SerreDual d = serre_dual_line({0, 0});
  CHECK(d.bundle == LineBundle{2, 0});
  CHECK(d.shift == 4);
  CHECK(d.cohen_macaulay);
  // O(-n-2, -m-4) = bundle twisted by -shift.
  for (int n = -3; n <= 4; ++n)
    for (int m = -2; m <= 3; ++m) {
      const SerreDual s = serre_dual_line({n, m});
      CHECK(s.bundle.twisted(-s.shift) == LineBundle{-n - 2, -m - 4});
      CHECK(s.cohen_macaulay == is_cohen_macaulay({n, m}).cohen_macaulay);
    }
}

TEST_CASE("closed-form section counts of the geometric bundles") {
  using K = BundleKind;
  auto h0 = [](K kind, int k) { return bundle_h0(BundlePreset::named(kind), k).dimension; };
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(h0(K::tangent_P3_pullback, k) == (k + 1) * (k + 2) * (k + 3) * (k + 5) / 2);
    CHECK(h0(K::tangent_P3_pullback, k) == (k + 1) * (4 * binom(k + 4, 3) - binom(k + 3, 3)));
    CHECK(h0(K::ambient_tangent_restriction, k) == 8 * (k + 2) * binom(k + 4, 3) - (k + 1) * binom(k + 3, 3));
    CHECK(h0(K::normal, k) == (k + 3) * (k + 3) * (k + 2) * (k + 5) / 2);
    CHECK(h0(K::normal, k) == h0(K::ambient_tangent_restriction, k) - h0(K::tangent_Y, k));
    if (k >= 2) {
      CHECK(h0(K::conormal, k) == (k + 1) * (k - 1) * (k - 1) * (k + 2) / 2);
      CHECK(h0(K::conormal, k) ==
            8 * k * binom(k + 2, 3) - 2 * k * binom(k + 3, 3) - (k * k - 1) * binom(k + 2, 2));
    }
  }
  CHECK(h0(K::ambient_tangent_restriction, -1) == 8);
  CHECK(h0(K::normal, -1) == 8);
  CHECK(h0(K::conormal, 1) == 0);
  CHECK(h0(K::cotangent_P3_pullback, 1) == 0);
  CHECK(h0(K::tangent_P3_pullback, -1) == 0);
}

TEST_CASE("equivariant sections match the stated identifications") {
  using K = BundleKind;
  auto eq = [](K kind, int k) { return BundlePreset::named(kind).equivariant_h0(k); };
  for (int k = 0; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(eq(K::tangent_P3_pullback, k) == rep(k, k + 1, 0, 1));
    CHECK(eq(K::normal, k) == rep(k + 2, k + 1, 0, 1));
    CHECK(eq(K::tangent_Y, k) == rep(k + 2, k, 0, 0) + rep(k, k + 1, 0, 1));
  }
  CHECK(eq(K::ambient_tangent_restriction, -1) == rep(1, 0, 0, 1));
  for (int k = 2; k <= 7; ++k) {
    CAPTURE(k);
    CHECK(eq(K::cotangent_P3_pullback, k) == rep(k, k - 2, 1, 0));
    CHECK(eq(K::conormal, k) == rep(k - 2, k - 2, 1, 0));
    CHECK(eq(K::ambient_cotangent_restriction, k) ==
          rep(k - 2, k, 0, 0) + rep(k, k - 2, 1, 0) + rep(k - 2, k - 2, 1, 0));
  }
  for (const auto& b : BundlePreset::geometric())
    for (int k = b.validity_start(); k <= b.validity_start() + 6; ++k) {
      CAPTURE(b.name());
      CAPTURE(k);
      CHECK(b.equivariant_h0(k).dim() == b.h0_polynomial(k));
    }
}

TEST_CASE("sections below the validity range are clamped") {
  const auto conormal = BundlePreset::named(BundleKind::conormal);
  const SectionData s = bundle_h0(conormal, -3);
  CHECK(s.clamped);
  CHECK(s.dimension == 0);
  CHECK(s.rep.is_zero());
  CHECK(conormal.h0_polynomial(-3) != 0);  // the polynomial itself does not vanish there
}

TEST_CASE("line bundle sections") {
  const auto b = BundlePreset::line(2, 1);
  CHECK(b.start_weight() == -1);
  CHECK(bundle_h0(b, -1).rep == rep(1, 0, 0, 0));
  CHECK(bundle_h0(b, 0).dimension == 3 * 4);
  CHECK(bundle_h0(b, -2).dimension == 0);
  CHECK(BundlePreset::line(0, 3).h1_vanishing_from() == -1);
  CHECK_FALSE(BundlePreset::line(3, 0).h1_vanishing_from().has_value());
}

TEST_CASE("preset names") {
  CHECK(BundlePreset::geometric().size() == 8);
  for (const auto& b : BundlePreset::geometric()) CHECK(BundlePreset::from_name(b.name()) == b);
  CHECK(BundlePreset::from_name("line(-2,3)") == BundlePreset::line(-2, 3));
  CHECK(to_string(LineBundle{-2, 3}) == "O(-2,3)");
  CHECK_THROWS_AS(BundlePreset::from_name("tangent"), UnknownPreset);
  CHECK_THROWS_AS(BundlePreset::from_name("line(1)"), UnknownPreset);
}
