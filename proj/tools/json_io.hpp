#pragma once

#include "json.hpp"

#include "schubert/balanced.hpp"
#include "schubert/crystals.hpp"
#include "schubert/diagram.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/splitting.hpp"
#include "schubert/tableau.hpp"

namespace schubert::io {

using nlohmann::json;

json toJson(const Permutation& w);
json toJson(const Polynomial& p);
json toJson(const RcGraph& r);
json toJson(const Diagram& d);
json toJson(const Tableau& t);
json toJson(const Labeling& b);
json toJson(const Crystal& c);

Permutation permutationFromJson(const json& j);
Polynomial polynomialFromJson(const json& j);
RcGraph rcGraphFromJson(const json& j);
Diagram diagramFromJson(const json& j);
Tableau tableauFromJson(const json& j);
Labeling labelingFromJson(const json& j);
Crystal crystalFromJson(const json& j);

json splitTermJson(const PartitionTuple& lambda, long long coefficient);

}  // namespace schubert::io
