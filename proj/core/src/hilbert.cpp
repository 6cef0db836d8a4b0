#include "psc/hilbert.hpp"

#include <stdexcept>

namespace psc {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string term_text(std::int64_t c, int e, bool first) {
  std::string s;
  const std::int64_t mag = c < 0 ? -c : c;
  if (first)
    s = c < 0 ? "-" : "";
  else
    s = c < 0 ? " - " : " + ";
  if (mag != 1 || e == 0) s += std::to_string(mag);
  if (e != 0) s += "t";
  if (e != 0 && e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string format_numerator(const HilbertNumerator& p) {
  const std::string denom = "(1-t)^" + std::to_string(p.n_vars());
  if (p.is_zero()) return "0";
  std::string body;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const auto c = p.coefficients()[i];
    if (c != 0) body += term_text(c, static_cast<int>(i), body.empty());
  }
  std::string prefix;
  if (p.lowest_degree() == 1)
    prefix = "t ";
  else if (p.lowest_degree() != 0)
    prefix = "t^" + std::to_string(p.lowest_degree()) + " ";
  return prefix + "(" + body + ") / " + denom;
}

// --- SymPowerCache ----------------------------------------------------------

SymPowerCache::SymPowerCache(VirtualRep generator)
    : generator_(std::move(generator)), generator_character_(character(generator_)) {
  powers_.push_back(VirtualRep::trivial(generator_.signature()));
  adams_.emplace_back();
}

VirtualRep SymPowerCache::get(int d) const {
  if (d < 0) return VirtualRep(generator_.signature());
  std::lock_guard lock(mu_);
  while (static_cast<int>(powers_.size()) <= d) {
    const int n = static_cast<int>(powers_.size());
    adams_.push_back(generator_character_.adams(n));
    VirtualRep acc(generator_.signature());
    for (int i = 1; i <= n; ++i) acc += tensor_with_character(powers_[n - i], adams_[i]);
    VirtualRep next(generator_.signature());
    for (const auto& [w, c] : acc.terms()) {
      if (c % n != 0) throw std::logic_error("Newton recursion produced a non-integral coefficient");
      next.add_term(w, c / n);
    }
    powers_.push_back(std::move(next));
  }
  return powers_[d];
}

// --- AlgebraPreset ----------------------------------------------------------

namespace {

AlgebraPreset make_preset(std::string name, AlgebraSignature sig, int n_vars, Weight gen) {
  AlgebraPreset p;
  p.name = std::move(name);
  p.signature = sig;
  p.n_vars = n_vars;
  p.generator = VirtualRep::irrep(sig, gen);
  if (p.generator.dim() != n_vars) throw std::logic_error("generator dimension mismatch");
  p.sym_cache = std::make_shared<SymPowerCache>(p.generator);
  return p;
}

}  // namespace

const AlgebraPreset& AlgebraPreset::six_d() {
  static const AlgebraPreset p = make_preset("6d", AlgebraSignature{1, 3}, 8, Weight{1, 1, 0, 0});
  return p;
}

const AlgebraPreset& AlgebraPreset::three_d() {
  static const AlgebraPreset p = make_preset("3d", AlgebraSignature{1}, 2, Weight{1});
  return p;
}

const AlgebraPreset& AlgebraPreset::by_name(const std::string& name) {
  if (name == "6d") return six_d();
  if (name == "3d") return three_d();
  throw UnknownPreset("unknown algebra preset '" + name + "' (expected 6d or 3d)");
}

// --- GradedVirtualRep -------------------------------------------------------

GradedVirtualRep::GradedVirtualRep(AlgebraSignature sig, int start_weight, Generator gen,
                                   std::optional<int> support_end)
    : sig_(sig), start_(start_weight), end_(support_end), gen_(std::move(gen)) {}

GradedVirtualRep GradedVirtualRep::tabulated(AlgebraSignature sig, int start_weight,
                                             std::vector<VirtualRep> values) {
  const int end = start_weight + static_cast<int>(values.size()) - 1;
  auto table = std::make_shared<const std::vector<VirtualRep>>(std::move(values));
  return GradedVirtualRep(
      sig, start_weight,
      [table, start_weight, sig](int w) {
        const int i = w - start_weight;
        if (i < 0 || i >= static_cast<int>(table->size())) return VirtualRep(sig);
        return (*table)[i];
      },
      end);
}

VirtualRep GradedVirtualRep::at(int weight) const {
  if (weight < start_ || (end_ && weight > *end_) || !gen_) return VirtualRep(sig_);
  VirtualRep v = gen_(weight);
  if (!v.is_zero() && v.signature() != sig_)
    throw SignatureMismatch("graded component has the wrong signature");
  return v;
}

GradedVirtualRep GradedVirtualRep::twisted(int k) const {
  auto self = *this;
  std::optional<int> end;
  if (end_) end = *end_ - k;
  return GradedVirtualRep(
      sig_, start_ - k, [self, k](int w) { return self.at(w + k); }, end);
}

GradedVirtualRep GradedVirtualRep::tensored(const VirtualRep& r) const {
  auto self = *this;
  return GradedVirtualRep(
      sig_, start_, [self, r](int w) { return tensor(self.at(w), r); }, end_);
}

GradedVirtualRep operator+(const GradedVirtualRep& a, const GradedVirtualRep& b) {
  if (a.sig_ != b.sig_) throw SignatureMismatch("direct sum of graded reps over different algebras");
  std::optional<int> end;
  if (a.end_ && b.end_) end = std::max(*a.end_, *b.end_);
  return GradedVirtualRep(
      a.sig_, std::min(a.start_, b.start_), [a, b](int w) { return a.at(w) + b.at(w); }, end);
}

// --- resummation ------------------------------------------------------------

ResumResult resum_dims(std::span<const std::int64_t> h, int start_weight, int n_vars,
                       int max_weight) {
  return resum_dims(
      [&](int d) {
        const int i = d - start_weight;
        return i >= 0 && i < static_cast<int>(h.size()) ? h[i] : std::int64_t{0};
      },
      start_weight, n_vars, max_weight);
}

ResumResult resum_dims(const std::function<std::int64_t(int)>& h, int start_weight, int n_vars,
                       int max_weight) {
  if (n_vars < 0) throw std::invalid_argument("n_vars must be nonnegative");
  const int len = max_weight - start_weight + 1;
  std::vector<std::int64_t> q(std::max(len, 0), 0);
  for (int i = 0; i < len; ++i) {
    const std::int64_t hi = h(start_weight + i);
    if (hi == 0) continue;
    for (int j = 0; j <= n_vars && i + j < len; ++j) {
      const std::int64_t b = binomial(n_vars, j);
      q[i + j] += (j % 2 ? -b : b) * hi;
    }
  }
  int last = -1;
  for (int i = 0; i < len; ++i)
    if (q[i] != 0) last = i;
  ResumResult r;
  r.max_weight = max_weight;
  r.numerator = HilbertNumerator(n_vars, start_weight, q);
  r.certified = len - 1 - last >= n_vars + 4;
  return r;
}

std::int64_t series_coefficient(const HilbertNumerator& p, int d) {
  // 1/(1-t)^n = sum_j C(j+n-1, n-1) t^j.
  std::int64_t s = 0;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const int j = d - (p.lowest_degree() + static_cast<int>(i));
    if (j < 0) continue;
    const std::int64_t b = p.n_vars() == 0 ? (j == 0 ? 1 : 0) : binomial(j + p.n_vars() - 1, p.n_vars() - 1);
    s += p.coefficients()[i] * b;
  }
  return s;
}

// --- equivariant recursion --------------------------------------------------

VirtualRep RecursionResult::at(int weight) const {
  const int i = weight - start_weight;
  if (i < 0 || i >= static_cast<int>(chi.size())) return VirtualRep(signature);
  return chi[i];
}

EquivariantNumerator RecursionResult::numerator() const {
  return EquivariantNumerator(n_vars, start_weight, chi);
}

HilbertNumerator RecursionResult::dim_numerator() const {
  std::vector<std::int64_t> dims;
  dims.reserve(chi.size());
  for (const auto& c : chi) dims.push_back(c.dim());
  return HilbertNumerator(n_vars, start_weight, std::move(dims));
}

RecursionResult equivariant_recursion(const GradedVirtualRep& gamma, const AlgebraPreset& preset,
                                      std::optional<int> max_weight) {
  if (gamma.signature() != preset.signature)
    throw SignatureMismatch("module over " + gamma.signature().name() + " but preset " +
                            preset.name + " is over " + preset.signature.name());
  RecursionResult r;
  r.signature = preset.signature;
  r.start_weight = gamma.start_weight();
  r.max_weight = max_weight.value_or(gamma.start_weight() + kDefaultWeightWindow);
  r.n_vars = preset.n_vars;
  const int len = r.max_weight - r.start_weight + 1;
  for (int i = 0; i < len; ++i) {
    const int k = r.start_weight + i;
    VirtualRep chi = gamma.at(k);
    for (int d = 1; d <= i; ++d) {
      const VirtualRep& prev = r.chi[i - d];
      if (prev.is_zero()) continue;
      chi -= tensor(preset.sym(d), prev);
    }
    r.chi.push_back(std::move(chi));
  }
  int zeros = 0;
  for (auto it = r.chi.rbegin(); it != r.chi.rend() && it->is_zero(); ++it) ++zeros;
  r.certified = zeros >= preset.n_vars + 4;
  return r;
}

void require_certified(const ResumResult& r, const std::string& what) {
  if (!r.certified)
    throw NotCertified(what + ": Hilbert numerator not certified up to weight " +
                       std::to_string(r.max_weight));
}

void require_certified(const RecursionResult& r, const std::string& what) {
  if (!r.certified)
    throw NotCertified(what + ": recursion did not terminate by weight " +
                       std::to_string(r.max_weight));
}

}  // namespace psc
