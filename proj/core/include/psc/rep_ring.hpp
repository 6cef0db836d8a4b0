#pragma once

// Representation rings of products of special linear Lie algebras.
//
// Weights and highest weights are stored in Dynkin coordinates, factor after
// factor, in a fixed-size vector.  A signature (1,3) means sl2 x sl4, and the
// label [a|b,c,d] is the weight (a,b,c,d).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace psc {

inline constexpr std::size_t kMaxTotalRank = 8;

class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<int> coords);

  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight scaled(int k) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::size_t hash() const noexcept;

 private:
  std::array<std::int32_t, kMaxTotalRank> c_{};
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return w.hash(); }
};

// Ordered list of ranks; rank n stands for sl(n+1).
class AlgebraSignature {
 public:
  AlgebraSignature() = default;
  AlgebraSignature(std::initializer_list<int> ranks);
  explicit AlgebraSignature(std::span<const int> ranks);

  std::size_t factor_count() const { return count_; }
  int rank(std::size_t factor) const { return ranks_[factor]; }
  std::size_t offset(std::size_t factor) const;
  std::size_t total_rank() const;
  std::vector<int> ranks() const;
  bool empty() const { return count_ == 0; }

  // "sl2xsl4"
  std::string name() const;

  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;

 private:
  std::array<std::uint8_t, kMaxTotalRank> ranks_{};
  std::uint8_t count_ = 0;
};

struct IrrepLabel {
  AlgebraSignature signature;
  Weight labels;

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

// Throws std::invalid_argument unless every label is a nonnegative integer
// and coordinates past the total rank are zero.
void validate_label(const AlgebraSignature& sig, const Weight& labels);

class Character;

// Finite Z-linear combination of irreducibles.  Terms are kept in
// lexicographic label order, which is also the display order.
class VirtualRep {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  VirtualRep() = default;
  explicit VirtualRep(AlgebraSignature sig) : sig_(sig) {}
  static VirtualRep irrep(const IrrepLabel& label, std::int64_t coeff = 1);
  static VirtualRep irrep(const AlgebraSignature& sig, const Weight& labels,
                          std::int64_t coeff = 1);
  static VirtualRep trivial(const AlgebraSignature& sig);

  const AlgebraSignature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Weight& labels) const;

  void add_term(const Weight& labels, std::int64_t coeff);

  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  VirtualRep& operator*=(std::int64_t k);
  VirtualRep operator-() const;
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(std::int64_t k, VirtualRep a) { return a *= k; }

  // Equality ignores the signature of the zero element.
  friend bool operator==(const VirtualRep& a, const VirtualRep& b);

  VirtualRep positive_part() const;
  VirtualRep negative_part() const;  // returned with positive coefficients
  bool is_effective() const;         // all coefficients > 0

  std::int64_t dim() const;

 private:
  void require_same(const VirtualRep& o) const;

  AlgebraSignature sig_;
  Terms terms_;
};

// Weight multiplicities in Dynkin coordinates.
class Character {
 public:
  using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

  Character() = default;
  explicit Character(AlgebraSignature sig) : sig_(sig) {}

  const AlgebraSignature& signature() const { return sig_; }
  const Map& weights() const { return weights_; }
  std::int64_t multiplicity(const Weight& w) const;
  void add(const Weight& w, std::int64_t m);
  bool is_zero() const { return weights_.empty(); }

  // Sum of multiplicities.
  std::int64_t total() const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(std::int64_t k);
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b);

  // Adams operation: every weight scaled by k.
  Character adams(int k) const;

  bool is_weyl_symmetric() const;

 private:
  AlgebraSignature sig_;
  Map weights_;
};

std::int64_t weyl_dim(const IrrepLabel& r);
std::int64_t weyl_dim(const AlgebraSignature& sig, const Weight& labels);

Character character(const IrrepLabel& r);
Character character(const VirtualRep& v);

// Peels off highest weights; throws NonSymmetricCharacter.
VirtualRep decompose(const Character& c);

// Reflects weight + rho into the dominant chamber.  Returns the dominant
// label and the sign of the Weyl element, or nothing when weight + rho is
// singular.
std::optional<std::pair<Weight, int>> straighten(const AlgebraSignature& sig,
                                                 const Weight& weight);

// Brauer-Klimyk: v tensor (virtual rep with character c).
VirtualRep tensor_with_character(const VirtualRep& v, const Character& c);

VirtualRep tensor(const VirtualRep& a, const VirtualRep& b);
VirtualRep dual(const VirtualRep& a);
VirtualRep adams(const VirtualRep& a, int k);

VirtualRep sym_power(const VirtualRep& a, int d);
VirtualRep ext_power(const VirtualRep& a, int d);

// Powers 0..d_max in one pass (shares the Newton recursion).
std::vector<VirtualRep> sym_powers(const VirtualRep& a, int d_max);
std::vector<VirtualRep> ext_powers(const VirtualRep& a, int d_max);

// 2 * height of a weight (sum over factors of sum_j a_j * j * (n+1-j)).
std::int64_t twice_height(const AlgebraSignature& sig, const Weight& w);

// Text syntax: "[a|b,c,d]" for labels, "[1|0,0,0] - 2[0|0,1,0]" for
// virtual reps, "0" for zero.
std::string format_label(const AlgebraSignature& sig, const Weight& labels);
std::string format_label(const IrrepLabel& r);
std::string format_rep(const VirtualRep& v);
IrrepLabel parse_label(std::string_view text);
IrrepLabel parse_label(std::string_view text, const AlgebraSignature& expected);
// A zero "0" needs the signature to be known.
VirtualRep parse_rep(std::string_view text,
                     std::optional<AlgebraSignature> expected = std::nullopt);

}  // namespace psc
