#include "infgon/io.hpp"

#include <fstream>
#include <sstream>

namespace infgon {

namespace {

std::string as_text(const nlohmann::json& value, const std::string& field) {
  if (!value.is_string()) throw ParseError(value.dump(), field + " must be a string");
  return value.get<std::string>();
}

Index as_index(const nlohmann::json& value, const std::string& field) {
  if (!value.is_number_integer()) throw ParseError(value.dump(), field + " must be an integer");
  return value.get<Index>();
}

const nlohmann::json& member(const nlohmann::json& obj, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(obj.dump(), "missing field '" + key + "'");
  return obj.at(key);
}

AffineEndpoint endpoint_from_json(const Surface& s, const nlohmann::json& value) {
  if (value.is_string()) {
    const Point p = parse_point(value.get<std::string>());
    if (!lies_on(s, p)) throw ParseError(value.get<std::string>(), "point is not on " + to_string(s));
    return p;
  }
  const Index interval = as_index(member(value, "interval"), "interval");
  if (interval < 1 || interval > s.intervals()) throw ParseError(value.dump(), "interval out of range");
  const Index stride = as_index(member(value, "stride"), "stride");
  if (stride == 0) throw ParseError(value.dump(), "stride must be nonzero");
  return Moving{static_cast<int>(interval), as_index(member(value, "base"), "base"), stride};
}

ParamRange range_from_json(const nlohmann::json& value) {
  if (!value.is_array() || value.size() != 2) throw ParseError(value.dump(), "domain must be [lo, hi]");
  ParamRange r;
  if (!value[0].is_null()) r.lo = as_index(value[0], "domain");
  if (!value[1].is_null()) r.hi = as_index(value[1], "domain");
  return r;
}

Certificate certificate_from_json(const nlohmann::json& value) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name == "certified-maximal") return CertifiedMaximal{};
    if (name == "unverified") return Unverified{};
    throw ParseError(name, "unknown certificate");
  }
  return WindowChecked{as_index(member(value, "window-checked"), "window-checked")};
}

}  // namespace

Json to_json(const ParamRange& r) {
  Json out = Json::array();
  out.push_back(r.lo ? Json(*r.lo) : Json(nullptr));
  out.push_back(r.hi ? Json(*r.hi) : Json(nullptr));
  return out;
}

Json to_json(const AffineEndpoint& e) {
  if (const auto* p = std::get_if<Point>(&e)) return to_string(*p);
  const Moving& m = std::get<Moving>(e);
  return Json{{"interval", m.interval}, {"base", m.base}, {"stride", m.stride}};
}

Json to_json(const Certificate& c) {
  if (std::holds_alternative<CertifiedMaximal>(c)) return "certified-maximal";
  if (std::holds_alternative<Unverified>(c)) return "unverified";
  return Json{{"window-checked", std::get<WindowChecked>(c).bound}};
}

Json to_json(const Triangulation& t) {
  Json gens = Json::array();
  for (const ArcGenerator& g : t.generators()) {
    if (const auto* a = std::get_if<Arc>(&g)) {
      gens.push_back(Json{{"single", to_string(*a)}});
    } else {
      const Family& f = std::get<Family>(g);
      gens.push_back(Json{{"family", Json{{"e0", to_json(f.e0)}, {"e1", to_json(f.e1)}, {"domain", to_json(f.domain)}}}});
    }
  }
  return Json{{"surface", to_string(t.surface())}, {"generators", gens}, {"certificate", to_json(t.certificate())}};
}

Triangulation triangulation_from_json(const nlohmann::json& doc) {
  const Surface s = parse_surface(as_text(member(doc, "surface"), "surface"));
  const nlohmann::json& list = member(doc, "generators");
  if (!list.is_array()) throw ParseError(list.dump(), "generators must be an array");
  std::vector<ArcGenerator> gens;
  for (const nlohmann::json& g : list) {
    if (g.is_object() && g.contains("single")) {
      gens.emplace_back(parse_arc(s, as_text(g.at("single"), "single")));
    } else {
      const nlohmann::json& f = member(g, "family");
      gens.emplace_back(Family{endpoint_from_json(s, member(f, "e0")), endpoint_from_json(s, member(f, "e1")),
                               range_from_json(member(f, "domain"))});
    }
  }
  const Certificate cert = doc.contains("certificate") ? certificate_from_json(doc.at("certificate")) : Unverified{};
  try {
    return Triangulation(s, std::move(gens), cert);
  } catch (const DomainError& e) {
    throw ParseError(doc.dump(), e.what());
  }
}

Triangulation parse_triangulation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(text.substr(0, 40), std::string("malformed JSON: ") + e.what());
  }
  return triangulation_from_json(doc);
}

Triangulation read_triangulation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace infgon
