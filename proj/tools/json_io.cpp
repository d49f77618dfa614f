#include "json_io.hpp"

#include "schubert/error.hpp"

namespace schubert::io {

namespace {

json cellsJson(const auto& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({c.row, c.col});
  return out;
}

std::vector<Cell> cellsFromJson(const json& j) {
  std::vector<Cell> out;
  for (const json& c : j) out.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  return out;
}

template <typename F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

json toJson(const Permutation& w) { return w.toString(); }
json toJson(const Polynomial& p) { return p.toString(); }

json toJson(const RcGraph& r) {
  return {{"n", r.n()},
          {"permutation", r.permutation().toString()},
          {"crosses", cellsJson(r.crosses())},
          {"red", r.red()},
          {"comp", r.comp()}};
}

json toJson(const Diagram& d) { return {{"cells", cellsJson(d.cells())}}; }

json toJson(const Tableau& t) {
  json j{{"rows", t.rowEntries()}};
  if (!t.isStraight()) j["inner"] = t.inner();
  return j;
}

json toJson(const Labeling& b) {
  json cells = json::array();
  for (const auto& [c, v] : b) cells.push_back({c.row, c.col, v});
  return {{"labels", cells}};
}

json toJson(const Crystal& c) {
  json members = json::array();
  json qs = json::array();
  for (const RcGraph& g : c.members) members.push_back(toJson(g));
  for (const Tableau& q : c.qSet) qs.push_back(toJson(q));
  return {{"p", toJson(c.p)}, {"alpha", c.alpha}, {"members", members}, {"q", qs}};
}

Permutation permutationFromJson(const json& j) {
  return guarded([&] { return Permutation::parse(j.get<std::string>()); });
}

Polynomial polynomialFromJson(const json& j) {
  return guarded([&] { return Polynomial::parse(j.get<std::string>()); });
}

RcGraph rcGraphFromJson(const json& j) {
  return guarded([&] {
    RcGraph g = RcGraph::fromCrosses(cellsFromJson(j.at("crosses")), j.at("n").get<int>());
    if (j.contains("permutation") && g.permutation() != permutationFromJson(j["permutation"]).embedded(g.n()))
      throw InvalidInput("rc-graph crosses do not match its permutation");
    return g;
  });
}

Diagram diagramFromJson(const json& j) {
  return guarded([&] {
    const auto cells = cellsFromJson(j.at("cells"));
    return Diagram(CellSet(cells.begin(), cells.end()));
  });
}

Tableau tableauFromJson(const json& j) {
  return guarded([&] {
    const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (j.contains("inner")) return Tableau::skew(j["inner"].get<Partition>(), rows);
    return Tableau(rows);
  });
}

Labeling labelingFromJson(const json& j) {
  return guarded([&] {
    Labeling out;
    for (const json& c : j.at("labels")) out[{c.at(0).get<int>(), c.at(1).get<int>()}] = c.at(2).get<int>();
    return out;
  });
}

Crystal crystalFromJson(const json& j) {
  return guarded([&] {
    Crystal c;
    c.p = tableauFromJson(j.at("p"));
    c.alpha = j.at("alpha").get<Composition>();
    for (const json& g : j.at("members")) c.members.push_back(rcGraphFromJson(g));
    for (const json& q : j.at("q")) c.qSet.push_back(tableauFromJson(q));
    return c;
  });
}

json splitTermJson(const PartitionTuple& lambda, long long coefficient) {
  return {{"lambda", lambda}, {"coefficient", coefficient}};
}

}  // namespace schubert::io
