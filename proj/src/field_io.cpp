#include "mrt/field_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mrt {

using nlohmann::json;

namespace {

void position_of(const std::string& text, std::size_t byte, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

[[noreturn]] void semantic(const std::string& where, const std::string& what) {
  throw FieldSpecError("field spec: " + where + ": " + what, 0, 0);
}

template <class T>
T get_as(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) semantic(where, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    semantic(where, std::string("key '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string field_to_json(const GaussField& f) {
  json doc;
  doc["m"] = f.rank();
  doc["n"] = f.dim();
  json comps = json::array();
  const auto indices = enumerate_indices(f.rank(), f.dim());
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    if (f.component(pos).empty()) continue;
    json c;
    json idx = json::array();
    for (int v : indices[pos].indices()) idx.push_back(v + 1);
    c["index"] = idx;
    json terms = json::array();
    for (const auto& t : f.component(pos)) {
      terms.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}},
                       {"power", t.power},
                       {"width", t.width},
                       {"center", t.center}});
    }
    c["terms"] = terms;
    comps.push_back(c);
  }
  doc["components"] = comps;
  return doc.dump(1);
}

GaussField field_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 0, column = 0;
    position_of(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw FieldSpecError("field spec: syntax error at line " + std::to_string(line) +
                             ", column " + std::to_string(column),
                         line, column);
  }
  if (!doc.is_object()) semantic("document", "top level must be an object");
  const int m = get_as<int>(doc, "m", "document");
  const int n = get_as<int>(doc, "n", "document");
  if (m < 0) semantic("document", "m must be non-negative");
  if (n < 1) semantic("document", "n must be at least 1");
  GaussField f(m, n);
  if (!doc.contains("components") || !doc["components"].is_array()) {
    semantic("document", "'components' must be an array");
  }
  const auto& comps = doc["components"];
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const std::string where = "components[" + std::to_string(ci) + "]";
    const auto index = get_as<std::vector<int>>(comps[ci], "index", where);
    if (static_cast<int>(index.size()) != m) semantic(where, "index length must equal m");
    std::vector<int> tuple;
    for (int v : index) {
      if (v < 1 || v > n) semantic(where, "index entries must lie in 1..n");
      tuple.push_back(v - 1);
    }
    if (!comps[ci].contains("terms") || !comps[ci]["terms"].is_array()) {
      semantic(where, "'terms' must be an array");
    }
    const auto& terms = comps[ci]["terms"];
    for (std::size_t ti = 0; ti < terms.size(); ++ti) {
      const std::string tw = where + ".terms[" + std::to_string(ti) + "]";
      const auto coeff = get_as<std::vector<double>>(terms[ti], "coeff", tw);
      if (coeff.size() != 2) semantic(tw, "coeff must be [re, im]");
      GaussTerm t;
      t.coeff = cplx(coeff[0], coeff[1]);
      t.power = get_as<std::vector<int>>(terms[ti], "power", tw);
      t.width = get_as<double>(terms[ti], "width", tw);
      t.center = get_as<std::vector<double>>(terms[ti], "center", tw);
      if (static_cast<int>(t.power.size()) != n || static_cast<int>(t.center.size()) != n) {
        semantic(tw, "power and center must have length n");
      }
      try {
        f.add_term(tuple, std::move(t));
      } catch (const std::domain_error& e) {
        semantic(tw, e.what());
      }
    }
  }
  // Terms are kept as given so that a document written by field_to_json
  // reads back to an identical field.
  return f;
}

GaussField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FieldSpecError("field spec: cannot open '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return field_from_json(ss.str());
}

}  // namespace mrt
