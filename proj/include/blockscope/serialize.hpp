#pragma once

#include <string>

#include "json.hpp"

#include "blockscope/abacus.hpp"
#include "blockscope/block.hpp"
#include "blockscope/character.hpp"
#include "blockscope/hecke.hpp"
#include "blockscope/skew.hpp"

namespace blockscope {

/// Keys keep insertion order so dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& nu);
Json to_json(const ResidueMultiset& c);
Json to_json(const AbacusDisplay& a);
Json to_json(const SkewShape& s);
Json to_json(const PShape& x);
Json to_json(const ArrowGraph& g);
Json to_json(const FormalCharacter& ch);
Json to_json(const DecompositionMatrix& d);
Json to_json(const BeltModule& m);
Json to_json(const RelationReport& r);
Json to_json(const CombinatorialBlock& b);

/// All readers throw ValidationError on malformed documents.
Partition partition_from_json(const Json& j);
SkewShape skew_from_json(const Json& j);
PShape pshape_from_json(const Json& j);
ArrowGraph arrow_graph_from_json(const Json& j);
FormalCharacter character_from_json(const Json& j);

/// First line: empty corner cell, then column labels.  Labels are quoted.
std::string to_csv(const DecompositionMatrix& d);

std::string edge_name(Edge e);
Edge edge_from_name(const std::string& name);

}  // namespace blockscope
