#include "psc/geometry.hpp"

#include <limits>
#include <regex>

#include "psc/error.hpp"

namespace psc {
namespace {

const AlgebraSignature kSig{1, 3};

std::int64_t binomial_poly3(std::int64_t x) {  // C(x, 3) as a polynomial
  return x * (x - 1) * (x - 2) / 6;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// [a|b,c,d], or zero if any label is negative.
VirtualRep rep(int a, int b, int c, int d, std::int64_t coeff = 1) {
  VirtualRep v(kSig);
  if (a >= 0 && b >= 0 && c >= 0 && d >= 0) v.add_term(Weight{a, b, c, d}, coeff);
  return v;
}

struct KindInfo {
  BundleKind kind;
  const char* name;
};

constexpr KindInfo kKinds[] = {
    {BundleKind::tangent_P3_pullback, "tangent_P3_pullback"},
    {BundleKind::tangent_Y, "tangent_Y"},
    {BundleKind::ambient_tangent_restriction, "ambient_tangent_restriction"},
    {BundleKind::normal, "normal"},
    {BundleKind::cotangent_P3_pullback, "cotangent_P3_pullback"},
    {BundleKind::cotangent_Y, "cotangent_Y"},
    {BundleKind::ambient_cotangent_restriction, "ambient_cotangent_restriction"},
    {BundleKind::conormal, "conormal"},
};

}  // namespace

std::string to_string(const LineBundle& b) {
  return "O(" + std::to_string(b.n) + "," + std::to_string(b.m) + ")";
}

ProjectiveCohomology bott_line_Pn(int n, int a) {
  if (n < 1) throw std::invalid_argument("projective space dimension must be positive");
  ProjectiveCohomology r;
  r.dims.assign(n + 1, 0);
  if (a >= 0) {
    r.dims[0] = binomial(n + a, n);
    r.degree = 0;
    r.label[0] = a;
  } else if (a <= -n - 1) {
    r.dims[n] = binomial(-a - 1, n);
    r.degree = n;
    r.label[n - 1] = -n - 1 - a;
  }
  return r;
}

std::int64_t CohomologyVector::euler_characteristic() const {
  std::int64_t s = 0;
  for (int i = 0; i < 5; ++i) s += (i % 2 ? -dims[i] : dims[i]);
  return s;
}

CohomologyVector kunneth_line(LineBundle b, int k) {
  const auto p1 = bott_line_Pn(1, b.n + k);
  const auto p3 = bott_line_Pn(3, b.m + k);
  CohomologyVector v;
  for (auto& r : v.reps) r = VirtualRep(kSig);
  if (p1.degree && p3.degree) {
    const int i = *p1.degree + *p3.degree;
    v.dims[i] = p1.dims[*p1.degree] * p3.dims[*p3.degree];
    v.reps[i] = rep(p1.label[0], p3.label[0], p3.label[1], p3.label[2]);
  }
  return v;
}

std::int64_t line_euler_characteristic(int a, int b) {
  return static_cast<std::int64_t>(a + 1) * binomial_poly3(static_cast<std::int64_t>(b) + 3);
}

// --- presets ----------------------------------------------------------------

BundlePreset BundlePreset::line(int n, int m) { return BundlePreset(BundleKind::line, {n, m}); }

BundlePreset BundlePreset::named(BundleKind kind) { return BundlePreset(kind, {}); }

BundlePreset BundlePreset::from_name(const std::string& name) {
  for (const auto& k : kKinds)
    if (name == k.name) return named(k.kind);
  static const std::regex line_re(R"(\s*line\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(name, m, line_re)) return line(std::stoi(m[1]), std::stoi(m[2]));
  std::string known;
  for (const auto& k : kKinds) known += std::string(known.empty() ? "" : ", ") + k.name;
  throw UnknownPreset("unknown bundle preset '" + name + "' (known: " + known + ", line(n,m))");
}

std::vector<BundlePreset> BundlePreset::geometric() {
  std::vector<BundlePreset> out;
  for (const auto& k : kKinds) out.push_back(named(k.kind));
  return out;
}

std::string BundlePreset::name() const {
  if (kind_ == BundleKind::line)
    return "line(" + std::to_string(line_.n) + "," + std::to_string(line_.m) + ")";
  for (const auto& k : kKinds)
    if (k.kind == kind_) return k.name;
  return "?";
}

int BundlePreset::start_weight() const {
  switch (kind_) {
    case BundleKind::line: return -std::min(line_.n, line_.m);
    case BundleKind::tangent_P3_pullback:
    case BundleKind::tangent_Y: return 0;
    case BundleKind::ambient_tangent_restriction:
    case BundleKind::normal: return -1;
    case BundleKind::cotangent_P3_pullback:
    case BundleKind::cotangent_Y:
    case BundleKind::ambient_cotangent_restriction:
    case BundleKind::conormal: return 2;
  }
  return 0;
}

int BundlePreset::validity_start() const {
  switch (kind_) {
    case BundleKind::line: return -std::min(line_.n, line_.m);
    case BundleKind::tangent_P3_pullback:
    case BundleKind::tangent_Y:
    case BundleKind::ambient_tangent_restriction:
    case BundleKind::normal: return -1;
    case BundleKind::cotangent_P3_pullback:
    case BundleKind::cotangent_Y:
    case BundleKind::ambient_cotangent_restriction:
    case BundleKind::conormal: return 1;
  }
  return 0;
}

std::int64_t BundlePreset::h0_polynomial(int k) const {
  const std::int64_t K = k;
  switch (kind_) {
    case BundleKind::line:
      return (line_.n + K + 1) * binomial_poly3(line_.m + K + 3);
    case BundleKind::tangent_P3_pullback:
      return (K + 1) * (K + 2) * (K + 3) * (K + 5) / 2;
    case BundleKind::tangent_Y:
      return (K + 3) * binomial_poly3(K + 3) + (K + 1) * (K + 2) * (K + 3) * (K + 5) / 2;
    case BundleKind::ambient_tangent_restriction:
      return 8 * (K + 2) * binomial_poly3(K + 4) - (K + 1) * binomial_poly3(K + 3);
    case BundleKind::normal:
      return (K + 3) * (K + 3) * (K + 2) * (K + 5) / 2;
    case BundleKind::cotangent_P3_pullback:
      return (K + 1) * (K + 1) * (K + 2) * (K - 1) / 2;
    case BundleKind::cotangent_Y:
      return (K - 1) * binomial_poly3(K + 3) + (K + 1) * (K + 1) * (K + 2) * (K - 1) / 2;
    case BundleKind::ambient_cotangent_restriction:
      return 8 * K * binomial_poly3(K + 2) - (K + 1) * binomial_poly3(K + 3);
    case BundleKind::conormal:
      return (K + 1) * (K - 1) * (K - 1) * (K + 2) / 2;
  }
  return 0;
}

VirtualRep BundlePreset::equivariant_h0(int k) const {
  if (k < validity_start()) return VirtualRep(kSig);
  switch (kind_) {
    case BundleKind::line: return rep(line_.n + k, line_.m + k, 0, 0);
    case BundleKind::tangent_P3_pullback: return rep(k, k + 1, 0, 1);
    case BundleKind::tangent_Y: return rep(k + 2, k, 0, 0) + rep(k, k + 1, 0, 1);
    case BundleKind::ambient_tangent_restriction:
      // Euler sequence: H0(O(k+1,k+1)) (x) C^8 minus H0(O(k,k)).
      return tensor(rep(k + 1, k + 1, 0, 0), rep(1, 0, 0, 1)) - rep(k, k, 0, 0);
    case BundleKind::normal: return rep(k + 2, k + 1, 0, 1);
    case BundleKind::cotangent_P3_pullback: return rep(k, k - 2, 1, 0);
    case BundleKind::cotangent_Y: return rep(k - 2, k, 0, 0) + rep(k, k - 2, 1, 0);
    case BundleKind::ambient_cotangent_restriction:
      return tensor(rep(k - 1, k - 1, 0, 0), rep(1, 1, 0, 0)) - rep(k, k, 0, 0);
    case BundleKind::conormal: return rep(k - 2, k - 2, 1, 0);
  }
  return VirtualRep(kSig);
}

std::optional<int> BundlePreset::h1_vanishing_from() const {
  switch (kind_) {
    case BundleKind::line: {
      // H^1(O(n+k, m+k)) != 0 iff n+k <= -2 and m+k >= 0.
      if (line_.n - line_.m >= -1) return std::nullopt;
      return -line_.n - 1;
    }
    case BundleKind::tangent_P3_pullback:
    case BundleKind::tangent_Y: return std::nullopt;
    case BundleKind::ambient_tangent_restriction:
    case BundleKind::normal: return -1;
    case BundleKind::cotangent_P3_pullback:
    case BundleKind::cotangent_Y: return 1;
    case BundleKind::ambient_cotangent_restriction: return 2;
    case BundleKind::conormal: return 1;
  }
  return std::nullopt;
}

SectionData bundle_h0(const BundlePreset& preset, int k) {
  SectionData s;
  s.rep = preset.equivariant_h0(k);
  if (k < preset.validity_start()) {
    s.clamped = true;
    return s;
  }
  s.dimension = preset.h0_polynomial(k);
  return s;
}

GradedVirtualRep gamma_star(const BundlePreset& preset) {
  return GradedVirtualRep(kSig, preset.start_weight(),
                          [preset](int k) { return preset.equivariant_h0(k); });
}

// --- Cohen-Macaulay and Serre duality ----------------------------------------

namespace {

// Twists k with H^p(P^dim, O(base + k)) != 0, as an interval.
struct Interval {
  std::int64_t lo = std::numeric_limits<int>::min();
  std::int64_t hi = std::numeric_limits<int>::max();
};

std::optional<Interval> nonvanishing(int dim, int p, int base) {
  if (p == 0) return Interval{-base, std::numeric_limits<int>::max()};
  if (p == dim) return Interval{std::numeric_limits<int>::min(), -dim - 1 - base};
  return std::nullopt;
}

}  // namespace

CmVerdict is_cohen_macaulay(LineBundle b) {
  CmVerdict v;
  for (int i = 1; i <= 3; ++i)
    for (int p = 0; p <= 1; ++p) {
      const int q = i - p;
      if (q < 0 || q > 3) continue;
      auto a = nonvanishing(1, p, b.n);
      auto c = nonvanishing(3, q, b.m);
      if (!a || !c) continue;
      const std::int64_t lo = std::max(a->lo, c->lo);
      const std::int64_t hi = std::min(a->hi, c->hi);
      if (lo > hi) continue;
      const std::int64_t k = lo != std::numeric_limits<int>::min() ? lo : hi;
      if (!v.witness_twist) {
        v.cohen_macaulay = false;
        v.witness_twist = static_cast<int>(k);
        v.witness_degree = i;
      }
    }
  return v;
}

SerreDual serre_dual_line(LineBundle b) {
  SerreDual d;
  d.shift = b.m + 4;
  d.bundle = {b.m - b.n + 2, 0};
  d.cohen_macaulay = is_cohen_macaulay(b).cohen_macaulay;
  return d;
}

}  // namespace psc
