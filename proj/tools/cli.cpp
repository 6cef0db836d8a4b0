#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "psc/document.hpp"
#include "psc/error.hpp"
#include "psc/geometry.hpp"
#include "psc/multiplet.hpp"
#include "psc/oracle.hpp"
#include "psc/rep_ring.hpp"

namespace psc::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

void expect_count(const std::vector<std::string>& a, std::size_t n, const char* usage) {
  if (a.size() != n) throw UsageError(std::string("usage: ") + usage);
}

struct Source {
  std::string label;
  const AlgebraPreset* preset = nullptr;
  GradedVirtualRep gamma;
};

// "line <n> <m>", "bundle <name>" or "module <alg>:<name>".
Source resolve_source(const std::vector<std::string>& a, const std::string& algebra) {
  if (a.empty()) throw UsageError("expected line <n> <m>, bundle <preset> or module <id>");
  const std::string& kind = a[0];
  Source s;
  if (kind == "line" || kind == "bundle") {
    if (algebra != "6d")
      throw UsageError("line bundles and bundle presets are defined for the 6d algebra only; "
                       "for 3d use `module 3d:quotient-max2`");
    BundlePreset b = BundlePreset::line(0, 0);
    if (kind == "line") {
      expect_count(a, 3, "line <n> <m>");
      b = BundlePreset::line(to_int(a[1], "n"), to_int(a[2], "m"));
    } else {
      expect_count(a, 2, "bundle <preset>");
      b = BundlePreset::from_name(a[1]);
    }
    s.label = b.name();
    s.preset = &AlgebraPreset::six_d();
    s.gamma = gamma_star(b);
    return s;
  }
  if (kind == "module") {
    expect_count(a, 2, "module <algebra>:<name>");
    std::string id = a[1];
    if (id.find(':') == std::string::npos) id = algebra + ":" + id;
    NamedModule m = named_module(id);
    if (m.preset->name != algebra)
      throw UsageError("module " + id + " is not over the " + algebra + " algebra");
    s.label = m.id;
    s.preset = m.preset;
    s.gamma = m.gamma;
    return s;
  }
  throw UsageError("unknown source kind '" + kind + "' (expected line, bundle or module)");
}

std::string infer_algebra(const std::vector<std::string>& a, const std::string& flag) {
  if (!flag.empty()) return flag;
  if (a.size() == 2 && a[0] == "module") {
    const auto colon = a[1].find(':');
    if (colon != std::string::npos) return a[1].substr(0, colon);
  }
  return "6d";
}

int emit_table(const MultipletTable& t, const std::string& format, std::ostream& out,
               std::ostream& err) {
  if (format == "json")
    out << to_json(t) << "\n";
  else
    out << render_text(t);
  if (!t.certified) {
    err << "error: " << t.source << " not certified up to weight " << t.max_weight
        << "; raise --max-weight\n";
    return kNotCertified;
  }
  return kOk;
}

int cmd_multiplet(const std::vector<std::string>& a, const std::string& algebra_flag,
                  std::optional<int> max_weight, const std::string& format, std::ostream& out,
                  std::ostream& err) {
  const std::string algebra = infer_algebra(a, algebra_flag);
  AlgebraPreset::by_name(algebra);
  const Source s = resolve_source(a, algebra);
  BuildOptions opts;
  opts.max_weight = max_weight;
  opts.allow_uncertified = true;
  return emit_table(build_multiplet(s.gamma, *s.preset, s.label, opts), format, out, err);
}

int cmd_betti(const std::vector<std::string>& a, const std::string& algebra_flag,
              std::optional<int> max_weight, std::ostream& out, std::ostream& err) {
  const std::string algebra = infer_algebra(a, algebra_flag);
  AlgebraPreset::by_name(algebra);
  const Source s = resolve_source(a, algebra);
  BuildOptions opts;
  opts.max_weight = max_weight;
  opts.allow_uncertified = true;
  const MultipletTable t = build_multiplet(s.gamma, *s.preset, s.label, opts);
  out << "source: " << t.source << "\n";
  out << "numerator: " << format_numerator(t.numerator()) << "\n";
  out << "betti:\n" << render_betti(t.betti());
  if (!t.certified) {
    err << "error: " << t.source << " not certified up to weight " << t.max_weight << "\n";
    return kNotCertified;
  }
  return kOk;
}

int cmd_cm_check(const std::vector<std::string>& a, std::ostream& out) {
  expect_count(a, 2, "cm-check <n> <m>");
  const LineBundle b{to_int(a[0], "n"), to_int(a[1], "m")};
  const CmVerdict v = is_cohen_macaulay(b);
  if (v.cohen_macaulay) {
    out << to_string(b) << ": Cohen-Macaulay\n";
    return kOk;
  }
  const LineBundle w = b.twisted(*v.witness_twist);
  out << to_string(b) << ": not Cohen-Macaulay\n";
  out << "witness: k = " << *v.witness_twist << ", H^" << *v.witness_degree << "("
      << to_string(w) << ") has dimension " << kunneth_line(w).dims[*v.witness_degree] << "\n";
  return kCheckFailed;
}

int cmd_dual(const std::vector<std::string>& a, std::optional<int> max_weight,
             const std::string& format, std::ostream& out, std::ostream& err) {
  if (a.empty() || a[0] != "line") throw UsageError("usage: dual line <n> <m>");
  expect_count(a, 3, "dual line <n> <m>");
  const LineBundle b{to_int(a[1], "n"), to_int(a[2], "m")};
  const SerreDual d = serre_dual_line(b);
  const LineBundle canonical_twist{-b.n - 2, -b.m - 4};
  if (!d.cohen_macaulay)
    err << "warning: " << to_string(b)
        << " is not Cohen-Macaulay; the dual complex does not resolve a single module\n";

  BuildOptions opts;
  opts.max_weight = max_weight;
  opts.allow_uncertified = true;
  const auto t = build_multiplet(BundlePreset::line(b.n, b.m), opts);
  const auto dt = dual(t);
  if (format == "json") return emit_table(dt, format, out, err);

  out << "bundle: " << to_string(b) << "\n";
  out << "serre dual: " << to_string(canonical_twist) << " = " << to_string(d.bundle) << "("
      << -d.shift << ")\n";
  out << "shift: " << d.shift << "\n";
  out << "cohen-macaulay: " << (d.cohen_macaulay ? "yes" : "no") << "\n";
  // Table level: dual(muA(n,m)) = muA(m-n+2, 0)[4-m].
  const int table_shift = 4 - b.m;
  const auto partner = shift(build_multiplet(BundlePreset::line(d.bundle.n, 0), opts), table_shift);
  out << "table relation: dual(" << t.source << ") = shift(line(" << d.bundle.n << ",0), "
      << table_shift << "): " << (same_entries(dt, partner) ? "holds" : "fails") << "\n\n";
  out << render_text(dt);
  return t.certified ? kOk : kNotCertified;
}

int cmd_ses(const std::vector<std::string>& a, std::optional<int> max_weight, std::ostream& out) {
  if (a.empty() || a.size() > 2) throw UsageError("usage: ses-check <family> [n]");
  SesTriple t;
  if (a[0] == "euler-p1") {
    if (a.size() != 2) throw UsageError("usage: ses-check euler-p1 <n>");
    t = ses_family("euler-p1", to_int(a[1], "n"));
  } else if (a[0] == "broken") {
    t = broken_euler_triple();
  } else {
    t = ses_family(a[0]);
  }
  const SesReport r = ses_additivity_check(t.sub, t.mid, t.quot, *t.preset, max_weight);
  out << t.description << "\n";
  out << "weights " << r.from_weight << ".." << r.to_weight << ": "
      << (r.passed ? "additive" : "NOT additive") << "\n";
  constexpr std::size_t kShown = 6;
  for (std::size_t i = 0; i < std::min(kShown, r.failures.size()); ++i) {
    const auto& f = r.failures[i];
    out << "  weight " << f.weight << " (" << f.what << "): " << f.detail << "\n";
  }
  if (r.failures.size() > kShown) out << "  ... " << r.failures.size() - kShown << " more\n";
  if (r.first_failure) out << "first failing weight: " << *r.first_failure << "\n";
  return r.passed ? kOk : kCheckFailed;
}

int cmd_verify(const std::vector<std::string>& a, int max_twist, std::ostream& out) {
  if (a.size() != 1 || a[0] != "appendix-b") throw UsageError("usage: verify appendix-b [--max-twist K]");
  bool ok = true;
  for (const auto& line : oracle::verify_appendix(max_twist)) {
    out << (line.passed ? "PASS " : "FAIL ") << line.name;
    if (!line.detail.empty()) out << " (" << line.detail << ")";
    out << "\n";
    ok = ok && line.passed;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_rep(const std::vector<std::string>& a, std::ostream& out) {
  if (a.empty()) throw UsageError("usage: rep tensor|sym|ext|dual|dim <reps...>");
  const std::string& op = a[0];
  if (op == "tensor") {
    if (a.size() < 3) throw UsageError("usage: rep tensor <rep> <rep> [...]");
    VirtualRep acc = parse_rep(a[1]);
    for (std::size_t i = 2; i < a.size(); ++i) acc = tensor(acc, parse_rep(a[i], acc.signature()));
    out << format_rep(acc) << "\n";
  } else if (op == "sym" || op == "ext") {
    expect_count(a, 3, "rep sym|ext <rep> <d>");
    const int d = to_int(a[2], "d");
    if (d < 0) throw UsageError("power degree must be nonnegative");
    const VirtualRep v = parse_rep(a[1]);
    out << format_rep(op == "sym" ? sym_power(v, d) : ext_power(v, d)) << "\n";
  } else if (op == "dual") {
    expect_count(a, 2, "rep dual <rep>");
    out << format_rep(dual(parse_rep(a[1]))) << "\n";
  } else if (op == "dim") {
    expect_count(a, 2, "rep dim <rep>");
    out << parse_rep(a[1]).dim() << "\n";
  } else {
    throw UsageError("unknown rep operation '" + op + "' (expected tensor, sym, ext, dual, dim)");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"psc: supermultiplet field content from equivariant Hilbert series", "psc"};
  app.require_subcommand(1);

  std::vector<std::string> pos;
  std::string algebra;
  std::string format = "text";
  std::optional<int> max_weight;
  int max_twist = 5;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("args", pos)->required();
    sub->add_option("--max-weight", max_weight, "Highest weight examined by the recursion");
    if (with_format)
      sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* multiplet = app.add_subcommand("multiplet", "Multiplet table: line <n> <m> | bundle <preset> | module <alg>:<name>");
  add_common(multiplet, true);
  multiplet->add_option("--algebra", algebra, "Equivariance algebra")->check(CLI::IsMember({"6d", "3d"}));

  auto* betti = app.add_subcommand("betti", "Hilbert numerator and Betti table");
  add_common(betti, false);
  betti->add_option("--algebra", algebra, "Equivariance algebra")->check(CLI::IsMember({"6d", "3d"}));

  auto* cm = app.add_subcommand("cm-check", "Cohen-Macaulay test for O(n,m): cm-check <n> <m>");
  cm->add_option("args", pos)->required();

  auto* dual_cmd = app.add_subcommand("dual", "Serre-dual multiplet: dual line <n> <m>");
  add_common(dual_cmd, true);

  auto* ses = app.add_subcommand("ses-check", "Euler-characteristic additivity: euler-p1 <n> | normal | conormal | 3d-quotient | broken");
  add_common(ses, false);

  auto* verify = app.add_subcommand("verify", "Explicit rank checks: verify appendix-b");
  verify->add_option("args", pos)->required();
  verify->add_option("--max-twist", max_twist, "Largest twist k")->check(CLI::Range(0, 8));

  auto* rep = app.add_subcommand("rep", "Representation ring: rep tensor|sym|ext|dual|dim <reps...>");
  // Labels like "[1|0,0,0]" would be split by CLI11's bracketed-list syntax
  // if bound to a vector option, so take the raw arguments instead.
  rep->allow_extras();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*multiplet) return cmd_multiplet(pos, algebra, max_weight, format, out, err);
    if (*betti) return cmd_betti(pos, algebra, max_weight, out, err);
    if (*cm) return cmd_cm_check(pos, out);
    if (*dual_cmd) return cmd_dual(pos, max_weight, format, out, err);
    if (*ses) return cmd_ses(pos, max_weight, out);
    if (*verify) return cmd_verify(pos, max_twist, out);
    if (*rep) return cmd_rep(rep->remaining(), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownPreset& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SignatureMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotCertified& e) {
    err << "error: " << e.what() << "\n";
    return kNotCertified;
  }
  return kUsage;
}

}  // namespace psc::cli
