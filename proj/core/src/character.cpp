#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "psc/error.hpp"
#include "psc/rep_ring.hpp"

namespace psc {
namespace {

using Partition = std::vector<std::int64_t>;

// Weight multiplicities of one sl(n+1) irrep in Dynkin coordinates.
using FactorCharacter = std::vector<std::pair<std::vector<int>, std::int64_t>>;

// Partitions of `total` into n+1 nonincreasing nonnegative parts that are
// dominated by lambda.
void dominated_partitions(const Partition& lambda, std::size_t i, std::int64_t remaining,
                          std::int64_t prefix_room, std::int64_t cap, Partition& cur,
                          std::vector<Partition>& out) {
  const std::size_t parts = lambda.size();
  if (i == parts) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const std::int64_t hi = std::min({cap, remaining, prefix_room + lambda[i]});
  for (std::int64_t v = hi; v >= 0; --v) {
    if (v * static_cast<std::int64_t>(parts - i) < remaining) break;
    cur[i] = v;
    dominated_partitions(lambda, i + 1, remaining - v, prefix_room + lambda[i] - v, v, cur, out);
  }
}

// Freudenthal's formula in gl(n+1) coordinates, where the dominant weights of
// V(lambda) are the partitions of |lambda| dominated by lambda.
FactorCharacter freudenthal(int n, const std::vector<int>& dynkin) {
  const std::size_t parts = static_cast<std::size_t>(n) + 1;
  Partition lambda(parts, 0);
  for (int i = n - 1; i >= 0; --i) lambda[i] = lambda[i + 1] + dynkin[i];
  std::int64_t total = 0;
  for (auto x : lambda) total += x;

  std::vector<Partition> dom;
  Partition cur(parts, 0);
  dominated_partitions(lambda, 0, total, 0, lambda[0], cur, dom);

  // Higher in dominance order means a larger sum of partial sums.
  auto level = [](const Partition& p) {
    std::int64_t s = 0, acc = 0;
    for (auto x : p) s += (acc += x);
    return s;
  };
  std::sort(dom.begin(), dom.end(),
            [&](const Partition& a, const Partition& b) { return level(a) > level(b); });

  auto norm_shifted = [&](const Partition& p) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < parts; ++i) {
      const std::int64_t y = p[i] + static_cast<std::int64_t>(parts - 1 - i);
      s += y * y;
    }
    return s;
  };
  const std::int64_t lambda_norm = norm_shifted(lambda);

  std::map<Partition, std::int64_t> mult;
  mult[lambda] = 1;
  for (const auto& mu : dom) {
    if (mu == lambda) continue;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < parts; ++i)
      for (std::size_t j = i + 1; j < parts; ++j)
        for (std::int64_t k = 1; mu[j] - k >= 0; ++k) {
          Partition nu = mu;
          nu[i] += k;
          nu[j] -= k;
          const std::int64_t pair = nu[i] - nu[j];
          std::sort(nu.begin(), nu.end(), std::greater<>());
          auto it = mult.find(nu);
          if (it != mult.end()) sum += it->second * pair;
        }
    const std::int64_t denom = lambda_norm - norm_shifted(mu);
    if (denom <= 0 || (2 * sum) % denom != 0)
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    const std::int64_t m = 2 * sum / denom;
    if (m != 0) mult[mu] = m;
  }

  FactorCharacter out;
  for (const auto& [mu, m] : mult) {
    Partition p = mu;
    std::sort(p.begin(), p.end());
    do {
      std::vector<int> d(n);
      for (int i = 0; i < n; ++i) d[i] = static_cast<int>(p[i] - p[i + 1]);
      out.emplace_back(std::move(d), m);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

// Irrep characters are reused heavily by tensor products and decomposition.
class FactorCache {
 public:
  std::shared_ptr<const FactorCharacter> get(int n, const std::vector<int>& dynkin) {
    Key key{n, dynkin};
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    auto value = std::make_shared<const FactorCharacter>(freudenthal(n, dynkin));
    std::lock_guard lock(mu_);
    return cache_.try_emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  using Key = std::pair<int, std::vector<int>>;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const FactorCharacter>> cache_;
};

FactorCache& factor_cache() {
  static FactorCache cache;
  return cache;
}

}  // namespace

Character character(const IrrepLabel& r) {
  const auto& sig = r.signature;
  validate_label(sig, r.labels);
  std::vector<std::pair<Weight, std::int64_t>> acc{{Weight{}, 1}};
  for (std::size_t f = 0; f < sig.factor_count(); ++f) {
    const std::size_t off = sig.offset(f);
    const int n = sig.rank(f);
    std::vector<int> dynkin(n);
    for (int i = 0; i < n; ++i) dynkin[i] = r.labels[off + i];
    auto fc = factor_cache().get(n, dynkin);
    std::vector<std::pair<Weight, std::int64_t>> next;
    next.reserve(acc.size() * fc->size());
    for (const auto& [w, m] : acc)
      for (const auto& [d, mf] : *fc) {
        Weight x = w;
        for (int i = 0; i < n; ++i) x[off + i] = d[i];
        next.emplace_back(x, m * mf);
      }
    acc = std::move(next);
  }
  Character c(sig);
  for (const auto& [w, m] : acc) c.add(w, m);
  return c;
}

Character character(const VirtualRep& v) {
  Character c(v.signature());
  for (const auto& [w, coeff] : v.terms()) {
    Character ci = character(IrrepLabel{v.signature(), w});
    ci *= coeff;
    c += ci;
  }
  return c;
}

VirtualRep decompose(const Character& c) {
  const auto& sig = c.signature();
  if (!c.is_weyl_symmetric())
    throw NonSymmetricCharacter("character over " + sig.name() + " is not Weyl symmetric");
  VirtualRep out(sig);
  Character rest = c;
  auto dominant = [&](const Weight& w) {
    for (std::size_t i = 0; i < sig.total_rank(); ++i)
      if (w[i] < 0) return false;
    return true;
  };
  while (!rest.is_zero()) {
    const Weight* best = nullptr;
    std::int64_t best_h = 0;
    for (const auto& [w, m] : rest.weights()) {
      if (!dominant(w)) continue;
      const std::int64_t h = twice_height(sig, w);
      if (!best || h > best_h || (h == best_h && *best < w)) {
        best = &w;
        best_h = h;
      }
    }
    if (!best)
      throw NonSymmetricCharacter("character has no dominant weight left to peel");
    const Weight top = *best;
    const std::int64_t m = rest.multiplicity(top);
    Character peel = character(IrrepLabel{sig, top});
    peel *= m;
    rest -= peel;
    out.add_term(top, m);
  }
  return out;
}

}  // namespace psc
