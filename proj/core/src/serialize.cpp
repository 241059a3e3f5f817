#include "genus_forge/serialize.hpp"

#include <fstream>

#include "genus_forge/error.hpp"

namespace genus_forge {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

json fixed_points_to_json(const FixedPointData& fpd) {
  json points = json::array();
  for (const auto& p : fpd.points) {
    json jp;
    if (!p.label.empty()) jp["label"] = p.label;
    jp["weights"] = p.weights;
    points.push_back(std::move(jp));
  }
  json j{{"n", fpd.n}, {"points", std::move(points)}};
  if (fpd.asserted_index) j["asserted_index"] = *fpd.asserted_index;
  return j;
}

FixedPointData fixed_points_from_json(const json& j) {
  FixedPointData fpd;
  fpd.n = field<int>(j, "n");
  const json points = field<json>(j, "points");
  if (!points.is_array()) throw ValidationError("field \"points\" must be an array");
  for (const auto& jp : points) {
    FixedPoint p;
    if (jp.is_object() && jp.contains("label")) p.label = field<std::string>(jp, "label");
    p.weights = field<std::vector<long>>(jp, "weights");
    fpd.points.push_back(std::move(p));
  }
  if (j.contains("asserted_index")) fpd.asserted_index = field<int>(j, "asserted_index");
  validate(fpd);
  return fpd;
}

json relation_to_json(const Relation& rel) {
  json terms = json::array();
  for (const auto& [I, c] : rel.terms)
    terms.push_back({{"partition", I.parts()}, {"coefficient", c.to_string()}});
  return {{"n", rel.n}, {"k", rel.k}, {"N", rel.N}, {"terms", std::move(terms)}, {"provenance", rel.provenance}};
}

Relation relation_from_json(const json& j) {
  Relation rel;
  rel.n = field<int>(j, "n");
  rel.k = field<int>(j, "k");
  rel.N = field<int>(j, "N");
  rel.provenance = j.contains("provenance") ? field<std::string>(j, "provenance") : std::string{};
  for (const auto& t : field<json>(j, "terms"))
    rel.terms.emplace_back(Partition(field<std::vector<int>>(t, "partition")),
                           Rational::parse(field<std::string>(t, "coefficient")));
  return rel;
}

json series_to_json(const QSeries& s) {
  json coeffs = json::array();
  for (const auto& [e, c] : s.coeffs()) coeffs.push_back(json::array({e, c.poly_string()}));
  return {{"variable", s.var()}, {"level", s.one().level()}, {"precision", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const json& j) {
  const int level = field<int>(j, "level");
  if (level < 1) throw ValidationError("level must be positive");
  QSeries s(field<std::string>(j, "variable"), field<long>(j, "precision"), Cyclotomic(level, Rational{1}));
  for (const auto& entry : field<json>(j, "coeffs")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_string())
      throw ValidationError("series coefficients must be [exponent, \"value\"] pairs");
    s.set(entry[0].get<long>(), Cyclotomic::parse(level, entry[1].get<std::string>()));
  }
  return s;
}

OrbitSpec orbit_from_json(const json& j) {
  const auto family = field<std::string>(j, "family");
  if (family != "A" && family != "B") throw ValidationError("orbit family must be \"A\" or \"B\"");
  const std::vector<int> J = j.contains("J") ? field<std::vector<int>>(j, "J") : std::vector<int>{};
  return OrbitSpec(RootSystem(family[0], field<int>(j, "rank")), J);
}

PolytopeInput polytope_from_json(const json& j) {
  PolytopeInput in;
  if (j.is_object() && j.contains("f")) {
    in.f = field<std::vector<long>>(j, "f");
  } else if (j.is_object() && j.contains("edges")) {
    for (const auto& e : field<json>(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("each edge must be a pair of lattice points");
      try {
        in.edges.push_back({e[0].get<LatticePoint>(), e[1].get<LatticePoint>()});
      } catch (const json::exception&) {
        throw ValidationError("edge endpoints must be integer vectors");
      }
    }
  } else {
    throw ValidationError("polytope input needs \"f\" or \"edges\"");
  }
  return in;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace genus_forge
