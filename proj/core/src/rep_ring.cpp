#include "psc/rep_ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "psc/error.hpp"

namespace psc {

Weight::Weight(std::initializer_list<int> coords) {
  if (coords.size() > kMaxTotalRank)
    throw std::invalid_argument("weight has more than 8 coordinates");
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < kMaxTotalRank; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < kMaxTotalRank; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::scaled(int k) const {
  Weight r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::size_t Weight::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : c_) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

AlgebraSignature::AlgebraSignature(std::initializer_list<int> ranks)
    : AlgebraSignature(std::span<const int>(ranks.begin(), ranks.size())) {}

AlgebraSignature::AlgebraSignature(std::span<const int> ranks) {
  if (ranks.empty()) throw std::invalid_argument("signature needs at least one factor");
  int total = 0;
  for (int r : ranks) {
    if (r < 1) throw std::invalid_argument("factor ranks must be positive");
    total += r;
  }
  if (total > static_cast<int>(kMaxTotalRank))
    throw std::invalid_argument("total rank exceeds 8");
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks_[i] = static_cast<std::uint8_t>(ranks[i]);
  count_ = static_cast<std::uint8_t>(ranks.size());
}

std::size_t AlgebraSignature::offset(std::size_t factor) const {
  std::size_t o = 0;
  for (std::size_t i = 0; i < factor; ++i) o += ranks_[i];
  return o;
}

std::size_t AlgebraSignature::total_rank() const { return offset(count_); }

std::vector<int> AlgebraSignature::ranks() const {
  return std::vector<int>(ranks_.begin(), ranks_.begin() + count_);
}

std::string AlgebraSignature::name() const {
  std::string s;
  for (std::size_t i = 0; i < count_; ++i) {
    if (i) s += "x";
    s += "sl" + std::to_string(ranks_[i] + 1);
  }
  return s;
}

void validate_label(const AlgebraSignature& sig, const Weight& labels) {
  const std::size_t n = sig.total_rank();
  for (std::size_t i = 0; i < kMaxTotalRank; ++i) {
    if (i < n && labels[i] < 0) throw std::invalid_argument("negative Dynkin label");
    if (i >= n && labels[i] != 0)
      throw std::invalid_argument("label has more entries than the signature");
  }
}

// --- VirtualRep -------------------------------------------------------------

VirtualRep VirtualRep::irrep(const IrrepLabel& label, std::int64_t coeff) {
  return irrep(label.signature, label.labels, coeff);
}

VirtualRep VirtualRep::irrep(const AlgebraSignature& sig, const Weight& labels,
                             std::int64_t coeff) {
  VirtualRep v(sig);
  v.add_term(labels, coeff);
  return v;
}

VirtualRep VirtualRep::trivial(const AlgebraSignature& sig) { return irrep(sig, Weight{}); }

std::int64_t VirtualRep::coefficient(const Weight& labels) const {
  auto it = terms_.find(labels);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualRep::add_term(const Weight& labels, std::int64_t coeff) {
  if (coeff == 0) return;
  validate_label(sig_, labels);
  auto [it, inserted] = terms_.try_emplace(labels, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void VirtualRep::require_same(const VirtualRep& o) const {
  if (sig_ != o.sig_ && !is_zero() && !o.is_zero())
    throw SignatureMismatch("virtual reps over " + sig_.name() + " and " + o.sig_.name());
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  if (&o == this) return *this *= 2;
  require_same(o);
  if (sig_.empty()) sig_ = o.sig_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  require_same(o);
  if (sig_.empty()) sig_ = o.sig_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

VirtualRep& VirtualRep::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

VirtualRep VirtualRep::operator-() const {
  VirtualRep r = *this;
  r *= -1;
  return r;
}

bool operator==(const VirtualRep& a, const VirtualRep& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.sig_ == b.sig_ && a.terms_ == b.terms_;
}

VirtualRep VirtualRep::positive_part() const {
  VirtualRep r(sig_);
  for (const auto& [w, c] : terms_)
    if (c > 0) r.terms_.emplace(w, c);
  return r;
}

VirtualRep VirtualRep::negative_part() const {
  VirtualRep r(sig_);
  for (const auto& [w, c] : terms_)
    if (c < 0) r.terms_.emplace(w, -c);
  return r;
}

bool VirtualRep::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::int64_t VirtualRep::dim() const {
  std::int64_t d = 0;
  for (const auto& [w, c] : terms_) d += c * weyl_dim(sig_, w);
  return d;
}

// --- Character --------------------------------------------------------------

std::int64_t Character::multiplicity(const Weight& w) const {
  auto it = weights_.find(w);
  return it == weights_.end() ? 0 : it->second;
}

void Character::add(const Weight& w, std::int64_t m) {
  if (m == 0) return;
  auto [it, inserted] = weights_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) weights_.erase(it);
  }
}

std::int64_t Character::total() const {
  std::int64_t t = 0;
  for (const auto& [w, m] : weights_) t += m;
  return t;
}

Character& Character::operator+=(const Character& o) {
  if (sig_.empty()) sig_ = o.sig_;
  if (sig_ != o.sig_ && !o.is_zero()) throw SignatureMismatch("characters over different algebras");
  for (const auto& [w, m] : o.weights_) add(w, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (sig_.empty()) sig_ = o.sig_;
  if (sig_ != o.sig_ && !o.is_zero()) throw SignatureMismatch("characters over different algebras");
  for (const auto& [w, m] : o.weights_) add(w, -m);
  return *this;
}

Character& Character::operator*=(std::int64_t k) {
  if (k == 0) weights_.clear();
  for (auto& [w, m] : weights_) m *= k;
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  if (a.sig_ != b.sig_) throw SignatureMismatch("characters over different algebras");
  Character r(a.sig_);
  r.weights_.reserve(a.weights_.size() * 2 + b.weights_.size());
  for (const auto& [wa, ma] : a.weights_)
    for (const auto& [wb, mb] : b.weights_) r.add(wa + wb, ma * mb);
  return r;
}

bool operator==(const Character& a, const Character& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.sig_ == b.sig_ && a.weights_ == b.weights_;
}

Character Character::adams(int k) const {
  Character r(sig_);
  for (const auto& [w, m] : weights_) r.add(w.scaled(k), m);
  return r;
}

namespace {

// Simple reflection s_i in Dynkin coordinates: w - w_i * alpha_i, where
// alpha_i is the i-th row of the Cartan matrix of its factor.
Weight reflect(const AlgebraSignature& sig, const Weight& w, std::size_t factor, int i) {
  const std::size_t off = sig.offset(factor);
  const int n = sig.rank(factor);
  Weight r = w;
  const int a = w[off + i];
  r[off + i] -= 2 * a;
  if (i > 0) r[off + i - 1] += a;
  if (i + 1 < n) r[off + i + 1] += a;
  return r;
}

}  // namespace

bool Character::is_weyl_symmetric() const {
  for (const auto& [w, m] : weights_)
    for (std::size_t f = 0; f < sig_.factor_count(); ++f)
      for (int i = 0; i < sig_.rank(f); ++i)
        if (multiplicity(reflect(sig_, w, f, i)) != m) return false;
  return true;
}

// --- Dimensions, heights, straightening --------------------------------------

namespace {

// gl(n+1) coordinates of a Dynkin weight of sl(n+1): x_i = sum_{j>=i} a_j.
std::array<std::int64_t, kMaxTotalRank + 1> to_gl(const Weight& w, std::size_t off, int n) {
  std::array<std::int64_t, kMaxTotalRank + 1> x{};
  for (int i = n - 1; i >= 0; --i) x[i] = x[i + 1] + w[off + i];
  return x;
}

}  // namespace

std::int64_t weyl_dim(const AlgebraSignature& sig, const Weight& labels) {
  std::int64_t result = 1;
  for (std::size_t f = 0; f < sig.factor_count(); ++f) {
    const int n = sig.rank(f);
    const auto x = to_gl(labels, sig.offset(f), n);
    std::int64_t num = 1, den = 1;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        num *= x[i] - x[j] + (j - i);
        den *= (j - i);
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
      }
    result *= num / den;
  }
  return result;
}

std::int64_t weyl_dim(const IrrepLabel& r) { return weyl_dim(r.signature, r.labels); }

std::int64_t twice_height(const AlgebraSignature& sig, const Weight& w) {
  std::int64_t h = 0;
  for (std::size_t f = 0; f < sig.factor_count(); ++f) {
    const std::size_t off = sig.offset(f);
    const int n = sig.rank(f);
    for (int j = 1; j <= n; ++j)
      h += static_cast<std::int64_t>(w[off + j - 1]) * j * (n + 1 - j);
  }
  return h;
}

std::optional<std::pair<Weight, int>> straighten(const AlgebraSignature& sig,
                                                 const Weight& weight) {
  Weight out;
  int sign = 1;
  for (std::size_t f = 0; f < sig.factor_count(); ++f) {
    const std::size_t off = sig.offset(f);
    const int n = sig.rank(f);
    auto x = to_gl(weight, off, n);
    for (int i = 0; i <= n; ++i) x[i] += n - i;
    // Insertion sort into strictly decreasing order, tracking parity.
    for (int i = 1; i <= n; ++i)
      for (int j = i; j > 0 && x[j - 1] < x[j]; --j) {
        std::swap(x[j - 1], x[j]);
        sign = -sign;
      }
    for (int i = 0; i < n; ++i) {
      if (x[i] == x[i + 1]) return std::nullopt;
      out[off + i] = static_cast<int>(x[i] - x[i + 1] - 1);
    }
  }
  return std::make_pair(out, sign);
}

VirtualRep tensor_with_character(const VirtualRep& v, const Character& c) {
  if (v.is_zero() || c.is_zero()) return VirtualRep(v.signature());
  if (v.signature() != c.signature())
    throw SignatureMismatch("tensor factors over " + v.signature().name() + " and " +
                            c.signature().name());
  const auto& sig = v.signature();
  VirtualRep out(sig);
  for (const auto& [lambda, a] : v.terms())
    for (const auto& [nu, m] : c.weights()) {
      auto s = straighten(sig, lambda + nu);
      if (s) out.add_term(s->first, a * m * s->second);
    }
  return out;
}

namespace {

// Number of weights, counted with multiplicity, a character of v would carry.
std::int64_t character_size(const VirtualRep& v) {
  std::int64_t s = 0;
  for (const auto& [w, c] : v.terms()) s += weyl_dim(v.signature(), w);
  return s;
}

}  // namespace

VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.signature() != b.signature() && !a.signature().empty() && !b.signature().empty())
      throw SignatureMismatch("tensor factors over different algebras");
    return VirtualRep(a.signature().empty() ? b.signature() : a.signature());
  }
  if (a.signature() != b.signature())
    throw SignatureMismatch("tensor factors over " + a.signature().name() + " and " +
                            b.signature().name());
  if (character_size(a) <= character_size(b)) return tensor_with_character(b, character(a));
  return tensor_with_character(a, character(b));
}

VirtualRep dual(const VirtualRep& a) {
  const auto& sig = a.signature();
  VirtualRep out(sig);
  for (const auto& [w, c] : a.terms()) {
    Weight d;
    for (std::size_t f = 0; f < sig.factor_count(); ++f) {
      const std::size_t off = sig.offset(f);
      const int n = sig.rank(f);
      for (int i = 0; i < n; ++i) d[off + i] = w[off + n - 1 - i];
    }
    out.add_term(d, c);
  }
  return out;
}

VirtualRep adams(const VirtualRep& a, int k) { return decompose(character(a).adams(k)); }

}  // namespace psc
