#include "berge/json_io.hpp"

namespace berge {

void to_json(nlohmann::json& j, const Multigraph& g) {
    j = nlohmann::json::object();
    j["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (int x = 1; x <= g.n(); ++x)
        for (int y = x + 1; y <= g.n(); ++y)
            if (int m = g.mult(x, y); m > 0) edges.push_back({x, y, m});
    j["edges"] = std::move(edges);
}

void from_json(const nlohmann::json& j, Multigraph& g) {
    g = Multigraph(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
}

void to_json(nlohmann::json& j, const GraphWalk& w) {
    j = nlohmann::json::object();
    j["kind"] = w.kind == WalkKind::cycle ? "cycle" : "path";
    j["vertices"] = w.vertices;
    auto edges = nlohmann::json::array();
    for (const auto& e : w.edges) edges.push_back({e.x, e.y, e.copy});
    j["edges"] = std::move(edges);
}

void from_json(const nlohmann::json& j, GraphWalk& w) {
    w.kind = j.at("kind").get<std::string>() == "cycle" ? WalkKind::cycle : WalkKind::path;
    w.vertices = j.at("vertices").get<std::vector<int>>();
    w.edges.clear();
    for (const auto& e : j.at("edges"))
        w.edges.push_back(EdgeInstance(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()));
}

void to_json(nlohmann::json& j, const GraphDecomposition& d) {
    j = nlohmann::json::object();
    j["walks"] = d.walks;
    auto leave = nlohmann::json::array();
    for (const auto& e : d.leave) leave.push_back({e.x, e.y, e.copy});
    j["leave"] = std::move(leave);
}

void from_json(const nlohmann::json& j, GraphDecomposition& d) {
    d.walks = j.at("walks").get<std::vector<GraphWalk>>();
    d.leave.clear();
    for (const auto& e : j.at("leave"))
        d.leave.push_back(EdgeInstance(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()));
}

void to_json(nlohmann::json& j, const HyperEdge& e) {
    j = nlohmann::json::object();
    j["set"] = e.members;
    j["copy"] = e.copy;
}

void from_json(const nlohmann::json& j, HyperEdge& e) {
    e.members = j.at("set").get<std::vector<int>>();
    e.copy = j.at("copy").get<int>();
}

void to_json(nlohmann::json& j, const BergeWalk& w) {
    j = nlohmann::json::object();
    j["kind"] = w.kind == WalkKind::cycle ? "cycle" : "path";
    j["core"] = w.core;
    j["edges"] = w.edges;
}

void from_json(const nlohmann::json& j, BergeWalk& w) {
    w.kind = j.at("kind").get<std::string>() == "cycle" ? WalkKind::cycle : WalkKind::path;
    w.core = j.at("core").get<std::vector<int>>();
    w.edges = j.at("edges").get<std::vector<HyperEdge>>();
}

void to_json(nlohmann::json& j, const HyperDecomposition& d) {
    j = nlohmann::json::object();
    j["n"] = d.n;
    j["k"] = d.k;
    j["mu"] = d.mu;
    j["walks"] = d.walks;
}

void from_json(const nlohmann::json& j, HyperDecomposition& d) {
    d.n = j.at("n").get<int>();
    d.k = j.at("k").get<int>();
    d.mu = j.at("mu").get<int>();
    d.walks = j.at("walks").get<std::vector<BergeWalk>>();
}

void to_json(nlohmann::json& j, const StagedHost& s) {
    j = nlohmann::json::object();
    j["graph"] = s.graph;
    j["decomposition"] = s.decomposition;
    j["bounds"] = {s.level_bounds.first, s.level_bounds.second};
    j["branch"] = s.branch_label;
}

} // namespace berge
