#include "psc/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

#include "psc/geometry.hpp"

namespace psc::oracle {

using boost::multiprecision::cpp_int;

Bidegree bidegree_of(const Monomial& m) { return {m[0] + m[1], m[2] + m[3] + m[4] + m[5]}; }

namespace {

void compositions(int total, int first, int count, Monomial& cur, std::vector<Monomial>& out) {
  if (count == 1) {
    cur[first] = total;
    out.push_back(cur);
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur[first] = v;
    compositions(total - v, first + 1, count - 1, cur, out);
  }
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

SectionSpace::SectionSpace(Bidegree d) : d_(d) {
  if (d.a < 0 || d.b < 0) return;
  std::vector<Monomial> us, xs;
  Monomial cur{};
  compositions(d.a, 0, 2, cur, us);
  cur = {};
  compositions(d.b, 2, 4, cur, xs);
  for (const auto& u : us)
    for (const auto& x : xs) {
      Monomial m = x;
      m[0] = u[0];
      m[1] = u[1];
      basis_.push_back(m);
    }
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<long>(i));
}

long SectionSpace::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::int64_t SectionSpace::expected_size(Bidegree d) {
  if (d.a < 0 || d.b < 0) return 0;
  return (d.a + 1) * binomial(d.b + 3, 3);
}

// --- Polynomial -------------------------------------------------------------

Polynomial Polynomial::variable(int i, std::int64_t coeff) {
  Polynomial p;
  Monomial m{};
  m[i] = 1;
  p.add(m, coeff);
  return p;
}

Polynomial Polynomial::constant(std::int64_t c) {
  Polynomial p;
  p.add(Monomial{}, c);
  return p;
}

void Polynomial::add(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kVars; ++i) m[i] = ma[i] + mb[i];
      r.add(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

// --- PolyMatrix -------------------------------------------------------------

PolyMatrix::PolyMatrix(std::vector<Bidegree> source, std::vector<Bidegree> target,
                       std::vector<std::vector<Polynomial>> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.size() != target_.size()) throw std::invalid_argument("row count mismatch");
  for (std::size_t r = 0; r < entries_.size(); ++r) {
    if (entries_[r].size() != source_.size()) throw std::invalid_argument("column count mismatch");
    for (std::size_t c = 0; c < source_.size(); ++c)
      for (const auto& [m, coeff] : entries_[r][c].terms())
        if (!(source_[c] + bidegree_of(m) == target_[r]))
          throw std::invalid_argument("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                      ") does not map source bidegree to target bidegree");
  }
}

PolyMatrix PolyMatrix::compose(const PolyMatrix& other) const {
  if (!(other.target_ == source_)) throw std::invalid_argument("composition bidegrees mismatch");
  std::vector<std::vector<Polynomial>> e(rows(), std::vector<Polynomial>(other.cols()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < other.cols(); ++c)
      for (std::size_t k = 0; k < cols(); ++k) e[r][c] += entries_[r][k] * other.entries_[k][c];
  return PolyMatrix(other.source_, target_, std::move(e));
}

PolyMatrix PolyMatrix::dual() const {
  std::vector<Bidegree> src, tgt;
  for (auto d : target_) src.push_back(-d);
  for (auto d : source_) tgt.push_back(-d);
  std::vector<std::vector<Polynomial>> e(cols(), std::vector<Polynomial>(rows()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) e[c][r] = entries_[r][c];
  return PolyMatrix(std::move(src), std::move(tgt), std::move(e));
}

// --- SparseMatrix -----------------------------------------------------------

void SparseMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted && (it->second += v) == 0) entries_.erase(it);
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> by_row(o.rows_);
  for (const auto& [rc, v] : o.entries_) by_row[rc.first].emplace_back(rc.second, v);
  SparseMatrix r(rows_, o.cols_);
  for (const auto& [rc, v] : entries_)
    for (const auto& [c, w] : by_row[rc.second]) r.add(rc.first, c, v * w);
  return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix r = *this;
  for (const auto& [rc, v] : o.entries_) r.add(rc.first, rc.second, -v);
  return r;
}

SparseMatrix realize(const PolyMatrix& m, int k) {
  const Bidegree twist{k, k};
  std::vector<SectionSpace> src, tgt;
  std::vector<std::size_t> col_off{0}, row_off{0};
  for (auto d : m.source()) {
    src.emplace_back(d + twist);
    col_off.push_back(col_off.back() + src.back().size());
  }
  for (auto d : m.target()) {
    tgt.emplace_back(d + twist);
    row_off.push_back(row_off.back() + tgt.back().size());
  }
  SparseMatrix out(row_off.back(), col_off.back());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& p = m.entry(r, c);
      if (p.is_zero()) continue;
      const auto& basis = src[c].basis();
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [mono, coeff] : p.terms()) {
          Monomial prod;
          for (int v = 0; v < kVars; ++v) prod[v] = basis[i][v] + mono[v];
          const long j = tgt[r].index_of(prod);
          if (j < 0) throw std::logic_error("product monomial outside the target space");
          out.add(row_off[r] + static_cast<std::size_t>(j), col_off[c] + i, coeff);
        }
    }
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::int64_t bareiss_rank(std::vector<std::vector<cpp_int>>& a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  cpp_int prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[rk][c] * a[i][j] - a[i][c] * a[rk][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return static_cast<std::int64_t>(rk);
}

}  // namespace

std::int64_t rank(const SparseMatrix& m) {
  // Rows are nodes 0..rows-1, columns rows..rows+cols-1.
  DisjointSets ds(m.rows() + m.cols());
  for (const auto& [rc, v] : m.entries()) ds.unite(rc.first, m.rows() + rc.second);
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (const auto& [rc, v] : m.entries()) {
    (void)v;
    blocks[ds.find(rc.first)];
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto it = blocks.find(ds.find(r));
    if (it != blocks.end()) it->second.first.push_back(r);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto it = blocks.find(ds.find(m.rows() + c));
    if (it != blocks.end()) it->second.second.push_back(c);
  }
  std::int64_t total = 0;
  for (const auto& [root, rc] : blocks) {
    const auto& [rs, cs] = rc;
    std::map<std::size_t, std::size_t> ri, ci;
    for (std::size_t i = 0; i < rs.size(); ++i) ri[rs[i]] = i;
    for (std::size_t i = 0; i < cs.size(); ++i) ci[cs[i]] = i;
    std::vector<std::vector<cpp_int>> dense(rs.size(), std::vector<cpp_int>(cs.size()));
    for (const auto& [pos, v] : m.entries()) {
      auto r = ri.find(pos.first);
      if (r == ri.end()) continue;
      dense[r->second][ci.at(pos.second)] = v;
    }
    total += bareiss_rank(dense);
  }
  return total;
}

std::int64_t kernel_dim(const PolyMatrix& m, int k) {
  const SparseMatrix s = realize(m, k);
  return static_cast<std::int64_t>(s.cols()) - rank(s);
}

std::int64_t coker_dim(const PolyMatrix& m, int k) {
  const SparseMatrix s = realize(m, k);
  return static_cast<std::int64_t>(s.rows()) - rank(s);
}

// --- Segre and Euler matrices ---------------------------------------------

namespace {

constexpr int U0 = 0, X0 = 2;

std::vector<Bidegree> repeat(Bidegree d, int n) { return std::vector<Bidegree>(n, d); }

std::vector<Bidegree> tangent_frame() {
  auto v = repeat({1, 0}, 2);
  for (int j = 0; j < 4; ++j) v.push_back({0, 1});
  return v;
}

Polynomial var(int i) { return Polynomial::variable(i); }

}  // namespace

PolyMatrix segre_inclusion() {
  std::vector<std::vector<Polynomial>> e(6, std::vector<Polynomial>(2));
  for (int i = 0; i < 2; ++i) e[i][0] = var(U0 + i);
  for (int j = 0; j < 4; ++j) e[2 + j][1] = var(X0 + j);
  return PolyMatrix(repeat({0, 0}, 2), tangent_frame(), std::move(e));
}

PolyMatrix segre_coordinates() {
  std::vector<std::vector<Polynomial>> e(8, std::vector<Polynomial>(1));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) e[4 * i + j][0] = var(U0 + i) * var(X0 + j);
  return PolyMatrix(repeat({0, 0}, 1), repeat({1, 1}, 8), std::move(e));
}

PolyMatrix segre_coordinates_summed() {
  std::vector<std::vector<Polynomial>> e(8, std::vector<Polynomial>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) e[4 * i + j][0] = e[4 * i + j][1] = var(U0 + i) * var(X0 + j);
  return PolyMatrix(repeat({0, 0}, 2), repeat({1, 1}, 8), std::move(e));
}

PolyMatrix segre_jacobian() {
  std::vector<std::vector<Polynomial>> e(8, std::vector<Polynomial>(6));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) {
      e[4 * i + j][i] = var(X0 + j);
      e[4 * i + j][2 + j] = var(U0 + i);
    }
  return PolyMatrix(tangent_frame(), repeat({1, 1}, 8), std::move(e));
}

PolyMatrix euler_relation() {
  std::vector<std::vector<Polynomial>> e(6, std::vector<Polynomial>(1));
  for (int i = 0; i < 2; ++i) e[i][0] = var(U0 + i);
  for (int j = 0; j < 4; ++j) e[2 + j][0] = -var(X0 + j);
  return PolyMatrix(repeat({0, 0}, 1), tangent_frame(), std::move(e));
}

std::int64_t conormal_h0(int k) { return kernel_dim(segre_jacobian().dual(), k); }

std::int64_t m_dual_h0(int k) { return kernel_dim(euler_relation().dual(), k); }

std::int64_t conormal_h1(int k) {
  return m_dual_h0(k) - rank(realize(segre_jacobian().dual(), k));
}

std::int64_t normal_h0(int k) { return coker_dim(segre_jacobian(), k); }

bool composite_identity(int twist) {
  const SparseMatrix lhs = realize(segre_jacobian(), twist) * realize(segre_inclusion(), twist);
  const SparseMatrix rhs = realize(segre_coordinates_summed(), twist);
  return rank(lhs - rhs) == 0;
}

std::vector<CheckLine> verify_appendix(int max_twist) {
  std::vector<CheckLine> out;
  const auto conormal = BundlePreset::named(BundleKind::conormal);
  const auto normal = BundlePreset::named(BundleKind::normal);
  for (int k = 2; k <= max_twist; ++k) {
    const auto got = conormal_h0(k);
    const auto want = conormal.h0_polynomial(k);
    out.push_back({"h0(N^vee(" + std::to_string(k) + ")) = dim ker f^vee", got == want,
                   std::to_string(got) + " vs closed form " + std::to_string(want)});
  }
  for (int k = 1; k <= max_twist; ++k) {
    const auto got = conormal_h1(k);
    out.push_back({"h1(N^vee(" + std::to_string(k) + ")) = 0", got == 0, std::to_string(got)});
  }
  for (int k = 1; k <= max_twist; ++k) {
    const auto got = m_dual_h0(k);
    const std::int64_t K = k;
    const auto want = 2 * K * binomial(K + 3, 3) + (K * K - 1) * binomial(K + 2, 2);
    out.push_back({"h0(M^vee(" + std::to_string(k) + ")) = dim ker beta^vee", got == want,
                   std::to_string(got) + " vs closed form " + std::to_string(want)});
  }
  for (int k = -1; k <= std::min(3, max_twist); ++k) {
    const auto got = normal_h0(k);
    const auto want = normal.h0_polynomial(k);
    out.push_back({"h0(N(" + std::to_string(k) + ")) = dim coker f", got == want,
                   std::to_string(got) + " vs closed form " + std::to_string(want)});
  }
  for (int t = 0; t <= std::min(3, max_twist); ++t)
    out.push_back({"f o (i + j) = k o q at twist " + std::to_string(t), composite_identity(t), ""});
  const auto fb = segre_jacobian().compose(euler_relation());
  bool zero = true;
  for (std::size_t r = 0; r < fb.rows(); ++r) zero = zero && fb.entry(r, 0).is_zero();
  out.push_back({"f o beta = 0", zero, ""});
  return out;
}

}  // namespace psc::oracle
