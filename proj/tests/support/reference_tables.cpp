#include "reference_tables.hpp"

#include <algorithm>

#include "psc/geometry.hpp"
#include "psc/hilbert.hpp"

namespace psc::testing {
namespace {

const AlgebraSignature k6d{1, 3};

// "[a|b,c,d]" with the term left out when any label is negative.
std::string term(const char* sign, int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) return "";
  return std::string(sign) + "[" + std::to_string(a) + "|" + std::to_string(b) + "," +
         std::to_string(c) + "," + std::to_string(d) + "]";
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (out.empty()) {
      out = p;
    } else if (p[0] == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out.empty() ? "0" : out;
}

std::string numerator_text(const std::vector<std::int64_t>& c, int lowest) {
  return format_numerator(HilbertNumerator(8, lowest, c));
}

}  // namespace

std::vector<VirtualRep> ReferenceList::as_transcribed() const {
  std::vector<VirtualRep> out;
  for (const auto& s : transcribed) out.push_back(parse_rep(s, k6d));
  return out;
}

std::vector<VirtualRep> ReferenceList::expected() const {
  auto out = as_transcribed();
  for (const auto& [i, s] : amended) out.at(i) = parse_rep(s, k6d);
  return out;
}

ReferenceList line_n0_reference(int n) {
  ReferenceList r;
  r.source = "line(" + std::to_string(n) + ",0)";
  r.numerator = numerator_text({n + 1, -4 * n, 6 * (n - 1), -4 * (n - 2), n - 3}, 0);
  switch (n) {
    case 0:
      r.transcribed = {"[0|0,0,0]", "0", "-[0|0,1,0]", "[1|0,0,1]", "-[2|0,0,0]"};
      break;
    case 1:
      r.transcribed = {"[1|0,0,0]", "-[0|1,0,0]", "0", "-[0|0,0,1]", "[1|0,0,0]"};
      r.amended = {{3, "[0|0,0,1]"}, {4, "-[1|0,0,0]"}};
      break;
    case 2:
      r.transcribed = {"[2|0,0,0]", "-[1|1,0,0]", "-[0|0,1,0]", "0", "-[0|0,0,0]"};
      r.amended = {{2, "[0|0,1,0]"}};
      break;
    default:
      r.transcribed = {join({term("", n, 0, 0, 0)}), join({term("-", n - 1, 1, 0, 0)}),
                       join({term("", n - 2, 0, 1, 0)}), join({term("-", n - 3, 0, 0, 1)}),
                       join({term("", n - 4, 0, 0, 0)})};
      break;
  }
  return r;
}

ReferenceList line_0m_reference(int m) {
  ReferenceList r;
  r.source = "line(0," + std::to_string(m) + ")";
  r.transcribed = {
      join({term("", 0, m, 0, 0)}),
      join({term("-", 1, m - 1, 1, 0)}),
      join({term("", 0, m - 2, 2, 0), term("", 2, m - 1, 0, 1)}),
      join({term("-", 1, m - 2, 1, 1), term("-", 3, m - 1, 0, 0)}),
      join({term("", 0, m - 2, 0, 2), term("", 2, m - 2, 1, 0)}),
      join({term("-", 1, m - 2, 0, 1)}),
      join({term("", 0, m - 2, 0, 0)}),
  };
  // Numerator read off from the dimensions of the list.
  std::vector<std::int64_t> dims;
  for (const auto& s : r.transcribed) dims.push_back(parse_rep(s, k6d).dim());
  r.numerator = numerator_text(dims, 0);
  return r;
}

std::vector<ReferenceList> geometric_references() {
  std::vector<ReferenceList> out;

  ReferenceList t;
  t.source = "tangent_P3_pullback";
  t.transcribed = {"[0|0,1,0]", "-[1|0,1,1] - [1|1,0,0]", "[0|0,1,0] + [2|0,0,2] + [2|0,1,0]",
                   "-[1|0,0,1] - [3|0,0,1]", "[2|0,0,0]"};
  t.amended = {{0, "[0|1,0,1]"}};
  t.numerator = "(15 - 48t + 54t^2 - 24t^3 + 3t^4) / (1-t)^8";
  out.push_back(t);

  ReferenceList a;
  a.source = "ambient_tangent_restriction";
  a.transcribed = {"[1|0,0,1]",
                   "-[0|0,0,0]",
                   "-[1|0,1,1] - [1|1,0,0]",
                   "[0|0,0,2] + [2|0,0,2] + 2[0|0,1,0] + [2|0,1,0]",
                   "-2[1|0,0,1] - [3|0,0,1]",
                   "[2|0,0,0]"};
  a.numerator = "t^-1 (8 - t - 48t^2 + 70t^3 - 32t^4 + 3t^5) / (1-t)^8";
  out.push_back(a);

  ReferenceList n;
  n.source = "normal";
  n.transcribed = {"[1|0,0,1]", "-[0|0,0,0] - [0|1,0,1] - [2|0,0,0]", "[1|1,0,0]", "[0|0,0,2]",
                   "-[1|0,0,1]", "[0|0,0,0]"};
  n.numerator = "t^-1 (8 - 19t + 8t^2 + 10t^3 - 8t^4 + t^5) / (1-t)^8";
  out.push_back(n);

  ReferenceList c;
  c.source = "cotangent_P3_pullback";
  c.transcribed = {"[2|0,1,0]",
                   "-[1|0,0,1] - [1|1,1,0] - [3|0,0,1]",
                   "[0|0,0,0] + [0|0,2,0] + [0|1,0,1] + [2|0,0,0] + [2|1,0,1] + [4|0,0,0]",
                   "-[1|0,1,1] - [1|1,0,0] - [3|1,0,0]",
                   "[0|0,0,2] + [2|0,1,0]",
                   "-[1|0,0,1]",
                   "[0|0,0,0]"};
  c.numerator = "t^2 (18 - 64t + 89t^2 - 64t^3 + 28t^4 - 8t^5 + t^6) / (1-t)^8";
  out.push_back(c);

  ReferenceList ac;
  ac.source = "ambient_cotangent_restriction";
  ac.transcribed = {"[0|0,1,0] + [0|2,0,0] + [2|0,1,0]",
                    "-2[1|0,0,1] - 2[1|1,1,0] - [3|0,0,1]",
                    "[0|0,0,0] + [0|0,2,0] + [0|1,0,1] + 2[2|0,0,0] + 2[2|1,0,1] + [4|0,0,0]",
                    "-[1|0,1,1] - [1|1,0,0] - 2[3|1,0,0]",
                    "[0|0,0,2] + [2|0,1,0]",
                    "-[1|0,0,1]",
                    "[0|0,0,0]"};
  ac.numerator = "t^2 (34 - 112t + 137t^2 - 80t^3 + 28t^4 - 8t^5 + t^6) / (1-t)^8";
  out.push_back(ac);

  ReferenceList cn;
  cn.source = "conormal";
  cn.transcribed = {"[0|0,1,0]", "-[1|0,0,1]", "-[0|0,2,0] + [2|0,0,0]", "[1|0,1,1]",
                    "-[0|0,0,2] - [2|0,1,0]", "-[1|0,0,1]", "[0|0,0,0]"};
  cn.amended = {{5, "[1|0,0,1]"}, {6, "-[0|0,0,0]"}};
  cn.numerator = "t^2 (6 - 8t - 17t^2 + 40t^3 - 28t^4 + 8t^5 - t^6) / (1-t)^8";
  out.push_back(cn);

  return out;
}

MultipletTable build_reference(const std::string& source) {
  return build_multiplet(BundlePreset::from_name(source));
}

std::vector<VirtualRep> generator_list(const MultipletTable& t, std::size_t count) {
  std::vector<VirtualRep> out;
  const int s = t.start_weight();
  const auto span = static_cast<std::size_t>(t.last_weight() - s + 1);
  for (std::size_t i = 0; i < std::max(count, span); ++i)
    out.push_back(t.entry(s + static_cast<int>(i)));
  return out;
}

}  // namespace psc::testing
