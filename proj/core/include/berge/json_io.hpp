#pragma once

#include <json.hpp>

#include "berge/assembly.hpp"
#include "berge/berge_lift.hpp"
#include "berge/graph_decomp.hpp"
#include "berge/multigraph.hpp"

// JSON wire formats. Objects rely on nlohmann's sorted keys; arrays keep
// insertion order, so serialization is deterministic.
//
//   Multigraph            {"n": int, "edges": [[x, y, mult], ...]}   (x < y)
//   GraphDecomposition    {"leave": [[x,y,copy],...], "walks": [...]}
//   HyperDecomposition    {"k":..,"mu":..,"n":..,"walks":[{"core":[...],
//                          "edges":[{"copy":c,"set":[...]},...],"kind":".."}]}

namespace berge {

void to_json(nlohmann::json& j, const Multigraph& g);
void from_json(const nlohmann::json& j, Multigraph& g);

void to_json(nlohmann::json& j, const GraphWalk& w);
void from_json(const nlohmann::json& j, GraphWalk& w);

void to_json(nlohmann::json& j, const GraphDecomposition& d);
void from_json(const nlohmann::json& j, GraphDecomposition& d);

void to_json(nlohmann::json& j, const HyperEdge& e);
void from_json(const nlohmann::json& j, HyperEdge& e);

void to_json(nlohmann::json& j, const BergeWalk& w);
void from_json(const nlohmann::json& j, BergeWalk& w);

void to_json(nlohmann::json& j, const HyperDecomposition& d);
void from_json(const nlohmann::json& j, HyperDecomposition& d);

void to_json(nlohmann::json& j, const StagedHost& s);

} // namespace berge
