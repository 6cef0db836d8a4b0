#include "psc/document.hpp"

#include <json.hpp>

#include "psc/error.hpp"

namespace psc {

using nlohmann::json;

namespace {

json reps_json(const VirtualRep& v) {
  json arr = json::array();
  for (const auto& [w, c] : v.terms())
    arr.push_back({{"label", format_label(v.signature(), w)}, {"coeff", c}});
  return arr;
}

VirtualRep reps_from_json(const json& arr, const AlgebraSignature& sig) {
  VirtualRep v(sig);
  for (const auto& r : arr) {
    const auto label = parse_label(r.at("label").get<std::string>(), sig);
    const auto coeff = r.at("coeff").get<std::int64_t>();
    if (coeff == 0) throw ParseError("zero coefficient stored for " + format_label(label));
    if (v.coefficient(label.labels) != 0)
      throw ParseError("label " + format_label(label) + " listed twice");
    v.add_term(label.labels, coeff);
  }
  return v;
}

template <class T>
void require(const json& j, const char* key, std::vector<std::string>& errs) {
  if (!j.contains(key)) {
    errs.push_back(std::string("missing key '") + key + "'");
    return;
  }
  bool ok = false;
  if constexpr (std::is_same_v<T, std::string>) ok = j[key].is_string();
  if constexpr (std::is_same_v<T, bool>) ok = j[key].is_boolean();
  if constexpr (std::is_same_v<T, std::int64_t>) ok = j[key].is_number_integer();
  if constexpr (std::is_same_v<T, json::array_t>) ok = j[key].is_array();
  if constexpr (std::is_same_v<T, json::object_t>) ok = j[key].is_object();
  if (!ok) errs.push_back(std::string("key '") + key + "' has the wrong type");
}

MultipletTable decode(const json& j) {
  MultipletTable t;
  t.source = j.at("source").get<std::string>();
  t.algebra = j.at("algebra").get<std::string>();
  const auto ranks = j.at("signature").get<std::vector<int>>();
  t.signature = AlgebraSignature(std::span<const int>(ranks));
  t.n_vars = j.at("n_vars").get<int>();
  t.certified = j.at("certified").get<bool>();
  t.max_weight = j.at("max_weight").get<int>();
  for (const auto& e : j.at("entries")) {
    const int w = e.at("weight").get<int>();
    VirtualRep v = reps_from_json(e.at("reps"), t.signature);
    if (v.is_zero()) throw ParseError("entry at weight " + std::to_string(w) + " is empty");
    if (!t.entries.emplace(w, std::move(v)).second)
      throw ParseError("weight " + std::to_string(w) + " listed twice");
  }
  if (j.contains("layout"))
    for (const auto& c : j.at("layout")) {
      LayoutCell cell;
      cell.koszul = c.at("koszul").get<int>();
      cell.weight = c.at("weight").get<int>();
      cell.rep = reps_from_json(c.at("reps"), t.signature);
      if (c.at("cohom").get<int>() != cell.cohom())
        throw ParseError("layout cell has cohom != weight - koszul");
      t.layout.push_back(std::move(cell));
    }
  return t;
}

json encode(const MultipletTable& t) {
  json j;
  j["schema"] = std::string(kSchemaVersion);
  j["algebra"] = t.algebra;
  j["signature"] = t.signature.ranks();
  j["n_vars"] = t.n_vars;
  j["source"] = t.source;
  j["certified"] = t.certified;
  j["max_weight"] = t.max_weight;

  const auto p = t.numerator();
  json num = json::array();
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    if (p.coefficients()[i] != 0)
      num.push_back({{"weight", p.lowest_degree() + static_cast<int>(i)}, {"coeff", p.coefficients()[i]}});
  j["numerator"] = num;

  json entries = json::array();
  for (const auto& [w, v] : t.entries) entries.push_back({{"weight", w}, {"reps", reps_json(v)}});
  j["entries"] = entries;

  if (!t.layout.empty()) {
    json layout = json::array();
    for (const auto& c : t.layout)
      layout.push_back({{"koszul", c.koszul},
                        {"cohom", c.cohom()},
                        {"weight", c.weight},
                        {"reps", reps_json(c.rep)}});
    j["layout"] = layout;
    j["layout_conjectural"] = true;
    const auto b = t.betti();
    j["betti"] = {{"first_row", b.first_row}, {"first_col", b.first_col}, {"rows", b.rows}};
  }
  return j;
}

}  // namespace

std::string to_json(const MultipletTable& t, int indent) {
  const std::string text = encode(t).dump(indent);
  const auto errs = validate_document(text);
  if (!errs.empty()) throw std::logic_error("emitted document fails validation: " + errs.front());
  return text;
}

MultipletTable table_from_json(std::string_view text) {
  const auto errs = validate_document(text);
  if (!errs.empty()) throw ParseError("invalid psc document: " + errs.front());
  return decode(json::parse(text));
}

std::vector<std::string> validate_document(std::string_view text) {
  std::vector<std::string> errs;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    errs.push_back(std::string("not JSON: ") + e.what());
    return errs;
  }
  if (!j.is_object()) return {"document is not an object"};
  require<std::string>(j, "schema", errs);
  require<std::string>(j, "algebra", errs);
  require<json::array_t>(j, "signature", errs);
  require<std::int64_t>(j, "n_vars", errs);
  require<std::string>(j, "source", errs);
  require<bool>(j, "certified", errs);
  require<std::int64_t>(j, "max_weight", errs);
  require<json::array_t>(j, "numerator", errs);
  require<json::array_t>(j, "entries", errs);
  if (!errs.empty()) return errs;
  if (j["schema"] != std::string(kSchemaVersion))
    errs.push_back("unsupported schema " + j["schema"].dump());

  MultipletTable t;
  try {
    t = decode(j);
  } catch (const std::exception& e) {
    errs.push_back(e.what());
    return errs;
  }

  const auto p = t.numerator();
  std::map<int, std::int64_t> listed;
  for (const auto& n : j["numerator"]) {
    if (!n.contains("weight") || !n.contains("coeff")) {
      errs.push_back("numerator term without weight/coeff");
      continue;
    }
    listed[n["weight"].get<int>()] = n["coeff"].get<std::int64_t>();
  }
  std::map<int, std::int64_t> expected;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    if (p.coefficients()[i] != 0) expected[p.lowest_degree() + static_cast<int>(i)] = p.coefficients()[i];
  if (listed != expected) errs.push_back("numerator does not match the entry dimensions");

  if (j.contains("layout")) {
    if (!t.layout_consistent()) errs.push_back("layout does not collapse to the entries");
    if (!j.contains("betti") || !j["betti"].is_object()) {
      errs.push_back("layout present without betti");
    } else {
      const auto b = t.betti();
      const auto& jb = j["betti"];
      if (jb.value("first_row", 0) != b.first_row || jb.value("first_col", 0) != b.first_col ||
          !jb.contains("rows") || jb["rows"] != json(b.rows))
        errs.push_back("betti rows do not match the layout");
    }
  } else if (j.contains("betti")) {
    errs.push_back("betti present without layout");
  }
  return errs;
}

}  // namespace psc
