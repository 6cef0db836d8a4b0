#pragma once

// Multiplet field-content tables assembled from the equivariant recursion.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psc/geometry.hpp"
#include "psc/hilbert.hpp"
#include "psc/rep_ring.hpp"

namespace psc {

// One generator representation in Koszul degree `koszul` and internal weight
// `weight`; it sits in cohomological row weight - koszul.
struct LayoutCell {
  int koszul = 0;
  int weight = 0;
  VirtualRep rep;  // effective

  int cohom() const { return weight - koszul; }
  friend bool operator==(const LayoutCell&, const LayoutCell&) = default;
};

struct BettiTable {
  int first_row = 0;  // cohomological degree of rows[0]
  int first_col = 0;  // Koszul degree of column 0
  std::vector<std::vector<std::int64_t>> rows;

  std::int64_t at(int row, int col) const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct MultipletTable {
  std::string source;
  std::string algebra;  // preset name, "6d" or "3d"
  AlgebraSignature signature;
  int n_vars = 0;
  bool certified = false;
  int max_weight = 0;
  std::map<int, VirtualRep> entries;  // weight -> chi_k, nonzero only
  std::vector<LayoutCell> layout;     // sorted by (weight, koszul)

  VirtualRep entry(int weight) const;
  int start_weight() const;
  int last_weight() const;
  HilbertNumerator numerator() const;
  BettiTable betti() const;
  // The layout collapses back to the entries with signs (-1)^koszul.
  bool layout_consistent() const;

  friend bool operator==(const MultipletTable&, const MultipletTable&) = default;
};

// Splits each weight's virtual rep into positive and negative parts and gives
// each the least Koszul degree >= the previous one with parity matching its
// sign.  Exact only when no cancellation occurs in the resolution.
std::vector<LayoutCell> infer_layout(const std::map<int, VirtualRep>& entries);

struct BuildOptions {
  std::optional<int> max_weight;
  bool allow_uncertified = false;
};

MultipletTable build_multiplet(const GradedVirtualRep& gamma, const AlgebraPreset& preset,
                               const std::string& source, const BuildOptions& opts = {});
MultipletTable build_multiplet(const BundlePreset& bundle, const BuildOptions& opts = {});

// Weights move from w to w - k, matching (M(k))_d = M_{d+k}.
MultipletTable shift(const MultipletTable& t, int k);
// Koszul degree j -> jmin + jmax - j, weight w -> -w, reps dualized.
MultipletTable dual(const MultipletTable& t);

// Entries-level equality (source names and bounds ignored).
bool same_entries(const MultipletTable& a, const MultipletTable& b);

struct SesFailure {
  int weight = 0;
  std::string what;  // "module" or "resolution"
  std::string detail;
};

struct SesReport {
  bool passed = true;
  int from_weight = 0;
  int to_weight = 0;
  std::optional<int> first_failure;
  std::vector<SesFailure> failures;
};

// Checks Gamma_k = Gamma'_k + Gamma''_k and chi_k = chi'_k + chi''_k.
SesReport ses_additivity_check(const GradedVirtualRep& sub, const GradedVirtualRep& mid,
                               const GradedVirtualRep& quot, const AlgebraPreset& preset,
                               std::optional<int> max_weight = std::nullopt);

struct SesTriple {
  std::string description;
  const AlgebraPreset* preset = nullptr;
  GradedVirtualRep sub, mid, quot;
};

// Families: "euler-p1" (needs n), "normal", "conormal", "3d-quotient".
SesTriple ses_family(const std::string& family, int n = 0);
std::vector<std::string> ses_family_names();
// (O(0,0), O(1,0) (x) C^2, O(3,0)): not exact.
SesTriple broken_euler_triple();

struct NamedModule {
  std::string id;  // "<algebra>:<name>"
  const AlgebraPreset* preset = nullptr;
  GradedVirtualRep gamma;
};

// 6d:free, 6d:trivial, 3d:free, 3d:trivial, 3d:quotient-max2,
// 3d:spinor-shifted.  Throws UnknownPreset.
NamedModule named_module(const std::string& id);
std::vector<std::string> named_module_ids();

std::string render_text(const MultipletTable& t);
std::string render_betti(const BettiTable& b);

}  // namespace psc
