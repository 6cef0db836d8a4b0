#include "psc/multiplet.hpp"

#include <algorithm>
#include <stdexcept>

#include "psc/error.hpp"

namespace psc {

std::int64_t BettiTable::at(int row, int col) const {
  const int r = row - first_row;
  const int c = col - first_col;
  if (r < 0 || r >= static_cast<int>(rows.size())) return 0;
  if (c < 0 || c >= static_cast<int>(rows[r].size())) return 0;
  return rows[r][c];
}

VirtualRep MultipletTable::entry(int weight) const {
  auto it = entries.find(weight);
  return it == entries.end() ? VirtualRep(signature) : it->second;
}

int MultipletTable::start_weight() const { return entries.empty() ? 0 : entries.begin()->first; }

int MultipletTable::last_weight() const { return entries.empty() ? 0 : entries.rbegin()->first; }

HilbertNumerator MultipletTable::numerator() const {
  if (entries.empty()) return HilbertNumerator(n_vars, 0, {});
  const int lo = start_weight();
  std::vector<std::int64_t> c(last_weight() - lo + 1, 0);
  for (const auto& [w, v] : entries) c[w - lo] = v.dim();
  return HilbertNumerator(n_vars, lo, std::move(c));
}

BettiTable MultipletTable::betti() const {
  BettiTable b;
  if (layout.empty()) return b;
  int rmin = layout.front().cohom(), rmax = rmin;
  int cmin = layout.front().koszul, cmax = cmin;
  for (const auto& cell : layout) {
    rmin = std::min(rmin, cell.cohom());
    rmax = std::max(rmax, cell.cohom());
    cmin = std::min(cmin, cell.koszul);
    cmax = std::max(cmax, cell.koszul);
  }
  b.first_row = rmin;
  b.first_col = cmin;
  b.rows.assign(rmax - rmin + 1, std::vector<std::int64_t>(cmax - cmin + 1, 0));
  for (const auto& cell : layout) b.rows[cell.cohom() - rmin][cell.koszul - cmin] += cell.rep.dim();
  return b;
}

bool MultipletTable::layout_consistent() const {
  std::map<int, VirtualRep> collapsed;
  for (const auto& cell : layout) {
    auto [it, inserted] = collapsed.try_emplace(cell.weight, VirtualRep(signature));
    it->second += cell.koszul % 2 == 0 ? cell.rep : -cell.rep;
  }
  for (const auto& [w, v] : entries)
    if (!(collapsed.count(w) ? collapsed.at(w) == v : v.is_zero())) return false;
  for (const auto& [w, v] : collapsed)
    if (!v.is_zero() && !entries.count(w)) return false;
  return true;
}

std::vector<LayoutCell> infer_layout(const std::map<int, VirtualRep>& entries) {
  std::vector<LayoutCell> out;
  int prev = 0;
  for (const auto& [w, v] : entries) {
    if (v.is_zero()) continue;
    int next = prev;
    for (int parity = 0; parity < 2; ++parity) {
      VirtualRep part = parity == 0 ? v.positive_part() : v.negative_part();
      if (part.is_zero()) continue;
      const int j = prev % 2 == parity ? prev : prev + 1;
      out.push_back({j, w, std::move(part)});
      next = std::max(next, j);
    }
    prev = next;
  }
  std::sort(out.begin(), out.end(), [](const LayoutCell& a, const LayoutCell& b) {
    return std::tie(a.weight, a.koszul) < std::tie(b.weight, b.koszul);
  });
  return out;
}

MultipletTable build_multiplet(const GradedVirtualRep& gamma, const AlgebraPreset& preset,
                               const std::string& source, const BuildOptions& opts) {
  const RecursionResult rec = equivariant_recursion(gamma, preset, opts.max_weight);
  const ResumResult resum = resum_dims([&](int w) { return gamma.dim_at(w); },
                                       gamma.start_weight(), preset.n_vars, rec.max_weight);
  if (!(rec.dim_numerator() == resum.numerator))
    throw std::logic_error("equivariant recursion disagrees with the dimension series for " +
                           source);

  MultipletTable t;
  t.source = source;
  t.algebra = preset.name;
  t.signature = preset.signature;
  t.n_vars = preset.n_vars;
  t.max_weight = rec.max_weight;
  t.certified = rec.certified && resum.certified;
  for (std::size_t i = 0; i < rec.chi.size(); ++i)
    if (!rec.chi[i].is_zero()) t.entries.emplace(rec.start_weight + static_cast<int>(i), rec.chi[i]);
  t.layout = infer_layout(t.entries);
  if (!t.certified && !opts.allow_uncertified)
    throw NotCertified(source + ": no finite resolution found up to weight " +
                       std::to_string(rec.max_weight) + "; raise --max-weight");
  return t;
}

MultipletTable build_multiplet(const BundlePreset& bundle, const BuildOptions& opts) {
  return build_multiplet(gamma_star(bundle), AlgebraPreset::six_d(), bundle.name(), opts);
}

MultipletTable shift(const MultipletTable& t, int k) {
  if (k == 0) return t;
  MultipletTable r = t;
  r.source = "shift(" + t.source + "," + std::to_string(k) + ")";
  r.max_weight = t.max_weight - k;
  r.entries.clear();
  for (const auto& [w, v] : t.entries) r.entries.emplace(w - k, v);
  for (auto& cell : r.layout) cell.weight -= k;
  return r;
}

MultipletTable dual(const MultipletTable& t) {
  MultipletTable r = t;
  r.source = t.source.rfind("dual(", 0) == 0 && t.source.back() == ')'
                 ? t.source.substr(5, t.source.size() - 6)
                 : "dual(" + t.source + ")";
  r.entries.clear();
  r.layout.clear();
  if (t.layout.empty()) return r;
  int jmin = t.layout.front().koszul, jmax = jmin;
  for (const auto& cell : t.layout) {
    jmin = std::min(jmin, cell.koszul);
    jmax = std::max(jmax, cell.koszul);
  }
  for (const auto& cell : t.layout) {
    LayoutCell d{jmin + jmax - cell.koszul, -cell.weight, psc::dual(cell.rep)};
    auto [it, inserted] = r.entries.try_emplace(d.weight, VirtualRep(t.signature));
    it->second += d.koszul % 2 == 0 ? d.rep : -d.rep;
    r.layout.push_back(std::move(d));
  }
  std::erase_if(r.entries, [](const auto& e) { return e.second.is_zero(); });
  std::sort(r.layout.begin(), r.layout.end(), [](const LayoutCell& a, const LayoutCell& b) {
    return std::tie(a.weight, a.koszul) < std::tie(b.weight, b.koszul);
  });
  return r;
}

bool same_entries(const MultipletTable& a, const MultipletTable& b) {
  return a.signature == b.signature && a.entries == b.entries;
}

// --- short exact sequences --------------------------------------------------

SesReport ses_additivity_check(const GradedVirtualRep& sub, const GradedVirtualRep& mid,
                               const GradedVirtualRep& quot, const AlgebraPreset& preset,
                               std::optional<int> max_weight) {
  SesReport rep;
  rep.from_weight = std::min({sub.start_weight(), mid.start_weight(), quot.start_weight()});
  rep.to_weight = max_weight.value_or(rep.from_weight + kDefaultWeightWindow);
  const auto r1 = equivariant_recursion(sub, preset, rep.to_weight);
  const auto r2 = equivariant_recursion(mid, preset, rep.to_weight);
  const auto r3 = equivariant_recursion(quot, preset, rep.to_weight);
  auto fail = [&](int w, std::string what, std::string detail) {
    rep.passed = false;
    if (!rep.first_failure) rep.first_failure = w;
    rep.failures.push_back({w, std::move(what), std::move(detail)});
  };
  for (int w = rep.from_weight; w <= rep.to_weight; ++w) {
    const VirtualRep g = mid.at(w);
    const VirtualRep g12 = sub.at(w) + quot.at(w);
    if (!(g == g12))
      fail(w, "module",
           "Gamma = " + format_rep(g) + " (dim " + std::to_string(g.dim()) + ") but Gamma' + Gamma'' = " +
               format_rep(g12) + " (dim " + std::to_string(g12.dim()) + ")");
    const VirtualRep c = r2.at(w);
    const VirtualRep c12 = r1.at(w) + r3.at(w);
    if (!(c == c12))
      fail(w, "resolution", "chi = " + format_rep(c) + " but chi' + chi'' = " + format_rep(c12));
  }
  return rep;
}

namespace {

GradedVirtualRep line_gamma(int n, int m) { return gamma_star(BundlePreset::line(n, m)); }

const VirtualRep& u_rep() {
  static const VirtualRep u = VirtualRep::irrep(AlgebraSignature{1, 3}, Weight{1, 0, 0, 0});
  return u;
}

GradedVirtualRep free_module(const AlgebraPreset& p) {
  const AlgebraPreset* pp = &p;
  return GradedVirtualRep(p.signature, 0, [pp](int k) { return pp->sym(k); });
}

}  // namespace

std::vector<std::string> ses_family_names() {
  return {"euler-p1", "normal", "conormal", "3d-quotient"};
}

SesTriple ses_family(const std::string& family, int n) {
  SesTriple t;
  t.preset = &AlgebraPreset::six_d();
  if (family == "euler-p1") {
    t.description = "0 -> O(" + std::to_string(n) + ",0) -> O(" + std::to_string(n + 1) +
                    ",0) (x) C^2 -> O(" + std::to_string(n + 2) + ",0) -> 0";
    t.sub = line_gamma(n, 0);
    t.mid = line_gamma(n + 1, 0).tensored(u_rep());
    t.quot = line_gamma(n + 2, 0);
  } else if (family == "normal") {
    t.description = "0 -> T_Y -> T_P7|_Y -> N_Y -> 0";
    t.sub = gamma_star(BundlePreset::named(BundleKind::tangent_Y));
    t.mid = gamma_star(BundlePreset::named(BundleKind::ambient_tangent_restriction));
    t.quot = gamma_star(BundlePreset::named(BundleKind::normal));
  } else if (family == "conormal") {
    t.description = "0 -> N_Y^vee -> Omega_P7|_Y -> Omega_Y -> 0";
    t.sub = gamma_star(BundlePreset::named(BundleKind::conormal));
    t.mid = gamma_star(BundlePreset::named(BundleKind::ambient_cotangent_restriction));
    t.quot = gamma_star(BundlePreset::named(BundleKind::cotangent_Y));
  } else if (family == "3d-quotient") {
    t.preset = &AlgebraPreset::three_d();
    t.description = "0 -> S(-1) -> R/R_{>=2} -> R/R_{>=1} -> 0";
    t.sub = named_module("3d:spinor-shifted").gamma;
    t.mid = named_module("3d:quotient-max2").gamma;
    t.quot = named_module("3d:trivial").gamma;
  } else {
    throw UnknownPreset("unknown sequence family '" + family +
                        "' (known: euler-p1, normal, conormal, 3d-quotient)");
  }
  return t;
}

SesTriple broken_euler_triple() {
  SesTriple t;
  t.preset = &AlgebraPreset::six_d();
  t.description = "O(0,0) -> O(1,0) (x) C^2 -> O(3,0) (not exact)";
  t.sub = line_gamma(0, 0);
  t.mid = line_gamma(1, 0).tensored(u_rep());
  t.quot = line_gamma(3, 0);
  return t;
}

std::vector<std::string> named_module_ids() {
  return {"6d:free", "6d:trivial", "3d:free", "3d:trivial", "3d:quotient-max2", "3d:spinor-shifted"};
}

NamedModule named_module(const std::string& id) {
  const auto colon = id.find(':');
  if (colon == std::string::npos)
    throw UnknownPreset("module id '" + id + "' must look like <algebra>:<name>");
  const std::string alg = id.substr(0, colon);
  const std::string name = id.substr(colon + 1);
  NamedModule m;
  m.id = id;
  m.preset = &AlgebraPreset::by_name(alg);
  const auto& sig = m.preset->signature;
  if (name == "free") {
    m.gamma = free_module(*m.preset);
  } else if (name == "trivial") {
    m.gamma = GradedVirtualRep::tabulated(sig, 0, {VirtualRep::trivial(sig)});
  } else if (alg == "3d" && name == "quotient-max2") {
    m.gamma = GradedVirtualRep::tabulated(sig, 0, {VirtualRep::trivial(sig), m.preset->generator});
  } else if (alg == "3d" && name == "spinor-shifted") {
    m.gamma = GradedVirtualRep::tabulated(sig, 1, {m.preset->generator});
  } else {
    std::string known;
    for (const auto& k : named_module_ids()) known += (known.empty() ? "" : ", ") + k;
    throw UnknownPreset("unknown module '" + id + "' (known: " + known + ")");
  }
  return m;
}

}  // namespace psc
