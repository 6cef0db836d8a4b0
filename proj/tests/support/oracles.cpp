#include "oracles.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace psc::testing {
namespace {

using Counts = std::map<Weight, std::int64_t>;

// Weights of gl(n+1) patterns below `row`, accumulated as gl weights
// (mu_1..mu_r) with mu_r = |row| - |next row|.
void gt_recurse(const std::vector<int>& row, std::vector<int>& mu, std::map<std::vector<int>, std::int64_t>& out) {
  const std::size_t r = row.size();
  int row_sum = 0;
  for (int x : row) row_sum += x;
  if (r == 1) {
    mu[0] = row_sum;
    ++out[mu];
    return;
  }
  std::vector<int> next(r - 1);
  auto fill = [&](auto&& self, std::size_t j) -> void {
    if (j == r - 1) {
      int next_sum = 0;
      for (int x : next) next_sum += x;
      mu[r - 1] = row_sum - next_sum;
      gt_recurse(next, mu, out);
      return;
    }
    for (int x = row[j + 1]; x <= row[j]; ++x) {
      next[j] = x;
      self(self, j + 1);
    }
  };
  fill(fill, 0);
}

std::map<std::vector<int>, std::int64_t> factor_weights(int n, const std::vector<int>& dynkin) {
  std::vector<int> lambda(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) lambda[i] = lambda[i + 1] + dynkin[i];
  std::vector<int> mu(n + 1, 0);
  std::map<std::vector<int>, std::int64_t> gl;
  gt_recurse(lambda, mu, gl);
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [m, c] : gl) {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = m[i] - m[i + 1];
    out[a] += c;
  }
  return out;
}

std::int64_t level(const AlgebraSignature& sig, const Weight& w) {
  std::int64_t s = 0;
  for (std::size_t f = 0; f < sig.factor_count(); ++f) {
    const int n = sig.rank(f);
    for (int j = 1; j <= n; ++j) s += static_cast<std::int64_t>(w[sig.offset(f) + j - 1]) * j * (n + 1 - j);
  }
  return s;
}

bool dominant(const AlgebraSignature& sig, const Weight& w) {
  for (std::size_t i = 0; i < sig.total_rank(); ++i)
    if (w[i] < 0) return false;
  return true;
}

void add_into(Counts& acc, const Counts& c, std::int64_t scale) {
  for (const auto& [w, m] : c) {
    auto& slot = acc[w];
    slot += scale * m;
    if (slot == 0) acc.erase(w);
  }
}

std::vector<Weight> weight_basis(const VirtualRep& v) {
  if (!v.is_effective()) throw std::invalid_argument("weight basis needs an effective rep");
  std::vector<Weight> basis;
  for (const auto& [w, m] : gt_weights(v))
    for (std::int64_t i = 0; i < m; ++i) basis.push_back(w);
  return basis;
}

}  // namespace

Counts gt_weights(const AlgebraSignature& sig, const Weight& label) {
  Counts acc{{Weight{}, 1}};
  for (std::size_t f = 0; f < sig.factor_count(); ++f) {
    const int n = sig.rank(f);
    const std::size_t off = sig.offset(f);
    std::vector<int> dyn(n);
    for (int i = 0; i < n; ++i) dyn[i] = label[off + i];
    Counts next;
    for (const auto& [a, c] : factor_weights(n, dyn))
      for (const auto& [w, m] : acc) {
        Weight x = w;
        for (int i = 0; i < n; ++i) x[off + i] = a[i];
        next[x] += c * m;
      }
    acc = std::move(next);
  }
  return acc;
}

std::int64_t gt_dimension(const AlgebraSignature& sig, const Weight& label) {
  std::int64_t d = 0;
  for (const auto& [w, m] : gt_weights(sig, label)) d += m;
  return d;
}

Counts gt_weights(const VirtualRep& v) {
  Counts acc;
  for (const auto& [label, c] : v.terms()) add_into(acc, gt_weights(v.signature(), label), c);
  return acc;
}

VirtualRep peel(const AlgebraSignature& sig, Counts weights) {
  VirtualRep out(sig);
  while (!weights.empty()) {
    const Weight* top = nullptr;
    for (const auto& [w, m] : weights)
      if (dominant(sig, w) && (!top || level(sig, w) > level(sig, *top))) top = &w;
    if (!top) throw std::runtime_error("peel: no dominant weight left");
    const Weight label = *top;
    const std::int64_t m = weights.at(label);
    out.add_term(label, m);
    add_into(weights, gt_weights(sig, label), -m);
  }
  return out;
}

VirtualRep tensor_by_convolution(const VirtualRep& a, const VirtualRep& b) {
  const Counts ca = gt_weights(a);
  const Counts cb = gt_weights(b);
  Counts prod;
  for (const auto& [x, m] : ca)
    for (const auto& [y, n] : cb) add_into(prod, Counts{{x + y, 1}}, m * n);
  return peel(a.signature(), std::move(prod));
}

Counts sym_weights_by_multisets(const VirtualRep& v, int d) {
  const auto basis = weight_basis(v);
  Counts out;
  std::vector<std::size_t> idx(d, 0);
  if (d == 0) return {{Weight{}, 1}};
  if (basis.empty()) return {};
  for (;;) {
    Weight w;
    for (auto i : idx) w += basis[i];
    ++out[w];
    int pos = d - 1;
    while (pos >= 0 && idx[pos] + 1 == basis.size()) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < d; ++j) idx[j] = idx[pos];
  }
  return out;
}

Counts ext_weights_by_subsets(const VirtualRep& v, int d) {
  const auto basis = weight_basis(v);
  if (d == 0) return {{Weight{}, 1}};
  if (static_cast<std::size_t>(d) > basis.size()) return {};
  Counts out;
  std::vector<std::size_t> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    Weight w;
    for (auto i : idx) w += basis[i];
    ++out[w];
    int pos = d - 1;
    while (pos >= 0 && idx[pos] == basis.size() - d + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

// Schur functor S_p(C^{n+1}) for a partition p, as a Dynkin label at offset 1
// of signature (1, n).  Empty when p has more than n+1 rows.
std::optional<Weight> schur_label(int n, int sl2_label, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) > n + 1) return std::nullopt;
  Weight w;
  w[0] = sl2_label;
  auto part = [&](int i) { return i < static_cast<int>(p.size()) ? p[i] : 0; };
  for (int i = 0; i < n; ++i) w[1 + i] = part(i) - part(i + 1);
  return w;
}

}  // namespace

VirtualRep cauchy_sym(int n, int d) {
  const AlgebraSignature sig{1, n};
  VirtualRep out(sig);
  for (int l2 = 0; 2 * l2 <= d; ++l2) {
    const int l1 = d - l2;
    std::vector<int> p{l1};
    if (l2 > 0) p.push_back(l2);
    if (auto w = schur_label(n, l1 - l2, p)) out.add_term(*w, 1);
  }
  return out;
}

VirtualRep cauchy_ext(int n, int d) {
  const AlgebraSignature sig{1, n};
  VirtualRep out(sig);
  for (int l2 = 0; 2 * l2 <= d; ++l2) {
    const int l1 = d - l2;
    std::vector<int> conj;
    for (int i = 0; i < l1; ++i) conj.push_back(i < l2 ? 2 : 1);
    if (auto w = schur_label(n, l1 - l2, conj)) out.add_term(*w, 1);
  }
  return out;
}

}  // namespace psc::testing
