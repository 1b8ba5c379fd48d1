#include "chaintrace/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chaintrace/error.hpp"

namespace chaintrace::io {

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

Json point(GridPoint p) { return Json::array({p.i, p.j}); }

Json point(Point2 p) { return Json::array({round12(p.x), round12(p.y)}); }

Json face(const Face& f) { return {{"a", point(f.first())}, {"b", point(f.second())}}; }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::BadInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::BadInput, std::string(what) + " must be an integer");
  return j.get<int>();
}

GridPoint grid_point(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::BadInput, "lattice point must be [i, j]");
  return {as_int(j[0], "i"), as_int(j[1], "j")};
}

Json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SymmetryWitness>) {
          return {{"point", point(v.point)}, {"deviation", round12(v.deviation)}};
        } else if constexpr (std::is_same_v<T, RetractionWitness>) {
          return {{"point", point(v.point)}, {"deviation", round12(v.deviation)}};
        } else if constexpr (std::is_same_v<T, ContinuityWitness>) {
          const Point2 pa{static_cast<double>(v.a.i) / v.k, static_cast<double>(v.a.j) / v.k};
          const Point2 pb{static_cast<double>(v.b.i) / v.k, static_cast<double>(v.b.j) / v.k};
          return {{"k", v.k},       {"a", point(v.a)},   {"b", point(v.b)},
                  {"a_point", point(pa)}, {"b_point", point(pb)}, {"gap", round12(v.gap)}};
        } else {
          return {{"k", v.k}, {"point", point(v.point)}};
        }
      },
      w);
}

}  // namespace

Json to_json(const Coloring& c) {
  return {{"k", c.k()}, {"values", c.rows()}};
}

Json to_json(const Chain& chain) {
  Json simplexes = Json::array();
  for (const Simplex& s : chain.simplexes) {
    simplexes.push_back({{"i", s.base.i}, {"j", s.base.j}, {"orientation", s.orientation}});
  }
  Json gates = Json::array();
  for (const Face& f : chain.gates) gates.push_back(face(f));
  Json j = {{"k", chain.k},
            {"surface", chain.surface == Surface::Square ? "square" : "torus"},
            {"simplexes", simplexes},
            {"gates", gates},
            {"closed", chain.closed}};
  if (chain.surface == Surface::Torus) {
    const Winding w = chain.winding.value_or(Winding{});
    j["winding"] = Json::array({w.h, w.v});
  }
  return j;
}

Json to_json(const PointSet& set) {
  Json pts = Json::array();
  for (const Point2& p : set.points) pts.push_back(point(p));
  return {{"metric", set.metric == Metric::Euclidean ? "euclidean" : "torus"}, {"points", pts}};
}

Json to_json(const LsApprox& ls) {
  Json pts = Json::array();
  for (std::size_t n = 0; n < ls.grid_points.size(); ++n) pts.push_back(point(ls.point(n)));
  return {{"epsilon", round12(ls.epsilon)},
          {"reference_resolution", ls.reference_resolution},
          {"tail_fraction", round12(ls.tail_fraction)},
          {"count", ls.grid_points.size()},
          {"points", pts}};
}

Json to_json(const CertificateReport& report) {
  Json per_k = Json::array();
  for (const KTrace& t : report.per_k) {
    Json winding = Json::array();
    for (const Winding& w : t.windings) winding.push_back(Json::array({w.h, w.v}));
    per_k.push_back({{"k", t.k},
                     {"gap", round12(t.gap)},
                     {"cycles", t.chains.size()},
                     {"winding", winding},
                     {"cycle_components", t.cycle_components},
                     {"approx_classes", t.approx_classes},
                     {"corner_classes", t.corner_classes}});
  }
  Json j = {{"candidate", report.candidate},
            {"variant", std::string(certificate_kind_name(report.kind))},
            {"witness", witness_json(report.witness)},
            {"per_k", per_k}};
  if (report.upper_limit) {
    j["upper_limit"] = {{"epsilon", round12(report.upper_limit->epsilon)},
                        {"reference_resolution", report.upper_limit->reference_resolution},
                        {"count", report.upper_limit->grid_points.size()}};
  }
  return j;
}

Json to_json(const std::vector<TorusCycle>& cycles, const Coloring& c) {
  Json list = Json::array();
  for (const TorusCycle& cycle : cycles) list.push_back(to_json(cycle.chain));
  return {{"k", c.k()}, {"coloring", to_json(c)}, {"cycles", list}};
}

Coloring coloring_from_json(const Json& j) {
  const int k = as_int(field(j, "k"), "k");
  const Json& values = field(j, "values");
  if (!values.is_array()) throw Error(Errc::BadInput, "values must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& row : values) {
    if (!row.is_array()) throw Error(Errc::BadInput, "values must be an array of rows");
    std::vector<int> r;
    for (const Json& v : row) r.push_back(as_int(v, "coloring entry"));
    rows.push_back(std::move(r));
  }
  return Coloring::from_rows(k, rows);
}

Chain chain_from_json(const Json& j) {
  Chain chain;
  chain.k = as_int(field(j, "k"), "k");
  const auto surface = field(j, "surface").get<std::string>();
  if (surface != "square" && surface != "torus") throw Error(Errc::BadInput, "unknown surface '" + surface + "'");
  chain.surface = surface == "square" ? Surface::Square : Surface::Torus;
  for (const Json& s : field(j, "simplexes")) {
    const int o = as_int(field(s, "orientation"), "orientation");
    if (o != 0 && o != 1) throw Error(Errc::BadInput, "orientation must be 0 or 1");
    chain.simplexes.push_back({{as_int(field(s, "i"), "i"), as_int(field(s, "j"), "j")}, o});
  }
  for (const Json& g : field(j, "gates")) {
    chain.gates.push_back(Face::between(grid_point(field(g, "a")), grid_point(field(g, "b"))));
  }
  chain.closed = field(j, "closed").get<bool>();
  if (j.contains("winding")) {
    const GridPoint w = grid_point(j.at("winding"));
    chain.winding = Winding{w.i, w.j};
  }
  for (const Simplex& s : chain.simplexes) {
    if (s.base.i < 0 || s.base.j < 0 || s.base.i >= chain.k || s.base.j >= chain.k) {
      throw Error(Errc::BadInput, "chain simplex outside the grid");
    }
  }
  return chain;
}

PointSet point_set_from_json(const Json& j) {
  PointSet set;
  const auto metric = field(j, "metric").get<std::string>();
  if (metric == "euclidean") {
    set.metric = Metric::Euclidean;
  } else if (metric == "torus") {
    set.metric = Metric::Torus;
  } else {
    throw Error(Errc::BadInput, "unknown metric '" + metric + "'");
  }
  for (const Json& p : field(j, "points")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Error(Errc::BadInput, "points must be [x, y] pairs");
    }
    set.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return set;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::BadInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace chaintrace::io
