#pragma once

#include <json.hpp>
#include <span>

#include "koszul_lab/classifier.hpp"
#include "koszul_lab/semigroup.hpp"
#include "koszul_lab/toric.hpp"

namespace koszul {

// Serialization used by the CLI and the Python module. Vertex labels are
// 1-based as everywhere; generator and variable indices are shifted to
// 1-based here.

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Cycle& c);
nlohmann::json to_json(const ConditionViolation& v, const BlockDecomposition& d);
nlohmann::json to_json(const ClassificationReport& r);

nlohmann::json to_json(const MonoidBasis& b);
nlohmann::json to_json(const MonoidIdealWitness& w);
nlohmann::json to_json(const PairwiseVerdict& v);
nlohmann::json to_json(const ColonVerdict& v);

nlohmann::json to_json(const YMonomial& m);
nlohmann::json to_json(const Binomial& f);
nlohmann::json to_json(std::span<const Binomial> fs);
nlohmann::json to_json(const GbSearchOutcome& outcome);

}  // namespace koszul
