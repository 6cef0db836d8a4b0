#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psc/error.hpp"
#include "psc/rep_ring.hpp"

namespace psc {

inline bool is_zero_coefficient(std::int64_t c) { return c == 0; }
inline bool is_zero_coefficient(const VirtualRep& c) { return c.is_zero(); }

// Laurent polynomial P(t) standing for P(t) / (1-t)^n_vars.  Coefficients are
// integers (graded dimensions) or virtual representations (equivariant).
// Stored trimmed: the first and last coefficients are nonzero, and the zero
// polynomial has no coefficients.
template <class Coeff>
class Numerator {
 public:
  Numerator() = default;
  Numerator(int n_vars, int lowest, std::vector<Coeff> coeffs)
      : n_vars_(n_vars), lowest_(lowest), coeffs_(std::move(coeffs)) {
    trim();
  }

  int n_vars() const { return n_vars_; }
  int lowest_degree() const { return lowest_; }
  int highest_degree() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of t^d, or nothing outside the stored range.
  const Coeff* at(int d) const {
    const int i = d - lowest_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return nullptr;
    return &coeffs_[i];
  }

  Numerator operator-() const {
    Numerator r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Numerator operator+(const Numerator& a, const Numerator& b) {
    if (a.n_vars_ != b.n_vars_)
      throw ArityMismatch("numerators over (1-t)^" + std::to_string(a.n_vars_) + " and (1-t)^" +
                          std::to_string(b.n_vars_));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.lowest_, b.lowest_);
    const int hi = std::max(a.highest_degree(), b.highest_degree());
    std::vector<Coeff> out;
    out.reserve(hi - lo + 1);
    for (int d = lo; d <= hi; ++d) {
      const Coeff* x = a.at(d);
      const Coeff* y = b.at(d);
      if (x && y)
        out.push_back(*x + *y);
      else
        out.push_back(x ? *x : *y);
    }
    return Numerator(a.n_vars_, lo, std::move(out));
  }

  friend Numerator operator-(const Numerator& a, const Numerator& b) { return a + (-b); }

  // Multiplication by t^k.
  Numerator shifted(int k) const {
    Numerator r = *this;
    r.lowest_ += k;
    return r;
  }

  // t^c P(1/t).
  Numerator reflected(int c) const {
    std::vector<Coeff> rev(coeffs_.rbegin(), coeffs_.rend());
    return Numerator(n_vars_, c - highest_degree(), std::move(rev));
  }

  friend bool operator==(const Numerator& a, const Numerator& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() && a.n_vars_ == b.n_vars_;
    return a.n_vars_ == b.n_vars_ && a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && is_zero_coefficient(coeffs_[first])) ++first;
    std::size_t last = coeffs_.size();
    while (last > first && is_zero_coefficient(coeffs_[last - 1])) --last;
    if (first == last) {
      coeffs_.clear();
      lowest_ = 0;
      return;
    }
    coeffs_ = std::vector<Coeff>(coeffs_.begin() + first, coeffs_.begin() + last);
    lowest_ += static_cast<int>(first);
  }

  int n_vars_ = 0;
  int lowest_ = 0;
  std::vector<Coeff> coeffs_;
};

using HilbertNumerator = Numerator<std::int64_t>;
using EquivariantNumerator = Numerator<VirtualRep>;

// "t^-1 (8 - t - 48t^2) / (1-t)^8"
std::string format_numerator(const HilbertNumerator& p);

// Memoized symmetric powers Sym^d of one representation.  Thread safe.
class SymPowerCache {
 public:
  explicit SymPowerCache(VirtualRep generator);
  VirtualRep get(int d) const;
  const VirtualRep& generator() const { return generator_; }

 private:
  VirtualRep generator_;
  Character generator_character_;
  mutable std::mutex mu_;
  mutable std::deque<VirtualRep> powers_;
  mutable std::vector<Character> adams_;
};

// The equivariance algebra together with the linear forms of R.
struct AlgebraPreset {
  std::string name;
  AlgebraSignature signature;
  int n_vars = 0;
  VirtualRep generator;
  std::shared_ptr<SymPowerCache> sym_cache;

  // sl2 x sl4 with generators [1|1,0,0]; eight variables.
  static const AlgebraPreset& six_d();
  // sl2 with generators [1]; two variables.
  static const AlgebraPreset& three_d();
  static const AlgebraPreset& by_name(const std::string& name);

  VirtualRep sym(int d) const { return sym_cache->get(d); }
};

// Weight-indexed family of virtual reps; zero below start_weight, and zero
// above support_end when that is set.
class GradedVirtualRep {
 public:
  using Generator = std::function<VirtualRep(int weight)>;

  GradedVirtualRep() = default;
  GradedVirtualRep(AlgebraSignature sig, int start_weight, Generator gen,
                   std::optional<int> support_end = std::nullopt);
  static GradedVirtualRep tabulated(AlgebraSignature sig, int start_weight,
                                    std::vector<VirtualRep> values);

  const AlgebraSignature& signature() const { return sig_; }
  int start_weight() const { return start_; }
  std::optional<int> support_end() const { return end_; }
  VirtualRep at(int weight) const;
  std::int64_t dim_at(int weight) const { return at(weight).dim(); }

  // (M(k))_d = M_{d+k}.
  GradedVirtualRep twisted(int k) const;
  GradedVirtualRep tensored(const VirtualRep& r) const;
  friend GradedVirtualRep operator+(const GradedVirtualRep& a, const GradedVirtualRep& b);

 private:
  AlgebraSignature sig_;
  int start_ = 0;
  std::optional<int> end_;
  Generator gen_;
};

struct ResumResult {
  HilbertNumerator numerator;
  bool certified = false;
  int max_weight = 0;
};

// P(t) = (1-t)^n * sum_{d >= start} h[d - start] t^d, truncated at
// max_weight.  Certified when max_weight >= deg P + n_vars + 4.
ResumResult resum_dims(std::span<const std::int64_t> h, int start_weight, int n_vars,
                       int max_weight);
ResumResult resum_dims(const std::function<std::int64_t(int)>& h, int start_weight, int n_vars,
                       int max_weight);

// Re-expands P(t)/(1-t)^n and returns the coefficient of t^d.
std::int64_t series_coefficient(const HilbertNumerator& p, int d);

struct RecursionResult {
  AlgebraSignature signature;
  int start_weight = 0;
  int max_weight = 0;
  int n_vars = 0;
  bool certified = false;
  std::vector<VirtualRep> chi;  // chi[i] sits at weight start_weight + i

  VirtualRep at(int weight) const;
  EquivariantNumerator numerator() const;
  HilbertNumerator dim_numerator() const;
};

// chi_k = Gamma_k - sum_{d >= 1} Sym^d(t1^vee) (x) chi_{k-d}.
RecursionResult equivariant_recursion(const GradedVirtualRep& gamma, const AlgebraPreset& preset,
                                      std::optional<int> max_weight = std::nullopt);

inline constexpr int kDefaultWeightWindow = 24;

void require_certified(const ResumResult& r, const std::string& what);
void require_certified(const RecursionResult& r, const std::string& what);

}  // namespace psc
