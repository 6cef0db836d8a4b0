#pragma once

// Equivariant sheaf data on Y = P1 x P3 for sl2 x sl4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psc/hilbert.hpp"
#include "psc/rep_ring.hpp"

namespace psc {

struct LineBundle {
  int n = 0;  // degree on P1
  int m = 0;  // degree on P3

  LineBundle twisted(int k) const { return {n + k, m + k}; }
  friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

std::string to_string(const LineBundle& b);  // "O(n,m)"

// Cohomology of O(a) on P^n: dimensions h^0..h^n and the sl(n+1) label of the
// single nonzero group, if any.
struct ProjectiveCohomology {
  std::vector<std::int64_t> dims;
  std::optional<int> degree;
  Weight label;
};

ProjectiveCohomology bott_line_Pn(int n, int a);

struct CohomologyVector {
  std::array<std::int64_t, 5> dims{};
  std::array<VirtualRep, 5> reps;

  std::int64_t euler_characteristic() const;
};

// H^i(O(a,b)) = sum_{p+q=i} H^p(P1, O(a)) (x) H^q(P3, O(b)), with a twist k
// applied to both degrees.
CohomologyVector kunneth_line(LineBundle b, int k = 0);

// (a+1) * C(b+3, 3) as a polynomial in a, b.
std::int64_t line_euler_characteristic(int a, int b);

enum class BundleKind {
  line,
  tangent_P3_pullback,
  tangent_Y,
  ambient_tangent_restriction,
  normal,
  cotangent_P3_pullback,
  cotangent_Y,
  ambient_cotangent_restriction,
  conormal,
};

class BundlePreset {
 public:
  static BundlePreset line(int n, int m);
  static BundlePreset named(BundleKind kind);
  // Accepts the stable names and "line(n,m)"; throws UnknownPreset.
  static BundlePreset from_name(const std::string& name);
  static std::vector<BundlePreset> geometric();  // the eight named bundles

  BundleKind kind() const { return kind_; }
  const LineBundle& line_bundle() const { return line_; }
  std::string name() const;

  // First twist with nonzero sections.
  int start_weight() const;
  // Closed forms hold for k >= validity_start(); h0 is zero below.
  int validity_start() const;
  // The closed-form polynomial, evaluated without clamping.
  std::int64_t h0_polynomial(int k) const;
  VirtualRep equivariant_h0(int k) const;
  // H^1(F(k)) = 0 for all k >= this bound (nothing means for all k).  Taken
  // as given; the oracle cross-checks the conormal entry.
  std::optional<int> h1_vanishing_from() const;

  friend bool operator==(const BundlePreset&, const BundlePreset&) = default;

 private:
  BundlePreset(BundleKind kind, LineBundle line) : kind_(kind), line_(line) {}
  BundleKind kind_;
  LineBundle line_;
};

struct SectionData {
  std::int64_t dimension = 0;
  VirtualRep rep;
  bool clamped = false;  // k below the validity range
};

SectionData bundle_h0(const BundlePreset& preset, int k);

GradedVirtualRep gamma_star(const BundlePreset& preset);

struct CmVerdict {
  bool cohen_macaulay = true;
  // For non-CM bundles: a twist k and degree i with H^i(O(n+k,m+k)) != 0.
  std::optional<int> witness_twist;
  std::optional<int> witness_degree;
};

CmVerdict is_cohen_macaulay(LineBundle b);

struct SerreDual {
  LineBundle bundle;
  int shift = 0;
  // False when the input is not CM; the answer is then formal only.
  bool cohen_macaulay = true;
};

// O(-n-2, -m-4) written as bundle(-shift) with bundle = O(m-n+2, 0).
SerreDual serre_dual_line(LineBundle b);

}  // namespace psc
