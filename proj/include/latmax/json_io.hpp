// JSON wire formats.  All loaders canonicalize, so dump(load(dump(x)))
// is bit-exact.
//
//   polytope      {"vertices": [[x,y], ...]}
//   configuration {"vectors": [[p,q], ...]}
//   curve         {"rays": [{"u": [a,b,c,...], "mult": m}, ...]}
//   search result {"n":..,"A":..,"witness":{"vectors":[...]},"nodes":..,
//                  "ms":..,"status":"exact"|"inconclusive","primitive_witness":..}
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polytope.hpp"
#include "search.hpp"
#include "tropical.hpp"

namespace latmax {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json to_json(const Polytope& p) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : p.vertices) vs.push_back({v.x, v.y});
    return {{"vertices", std::move(vs)}};
}

inline Polytope polytope_from_json(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw std::invalid_argument("polytope json: missing non-empty \"vertices\" array");
    std::vector<LatticePoint> pts;
    for (const auto& e : j["vertices"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("polytope json: vertices must be [x,y] integer pairs");
        pts.push_back({e[0].get<Int>(), e[1].get<Int>()});
    }
    return convex_hull(pts);
}

inline nlohmann::json to_json(const VectorConfiguration& t) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : t.vectors) vs.push_back({v.p, v.q});
    return {{"vectors", std::move(vs)}};
}

inline VectorConfiguration configuration_from_json(const nlohmann::json& j) {
    if (!j.contains("vectors") || !j["vectors"].is_array())
        throw std::invalid_argument("configuration json: missing \"vectors\" array");
    std::vector<DualVector> vs;
    for (const auto& e : j["vectors"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("configuration json: vectors must be [p,q] integer pairs");
        vs.push_back({e[0].get<Int>(), e[1].get<Int>()});
    }
    return make_configuration(std::move(vs));
}

inline nlohmann::json to_json(const TropicalCurve& c) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& r : c.rays) rays.push_back({{"u", r.u}, {"mult", r.mult}});
    return {{"rays", std::move(rays)}};
}

inline TropicalCurve curve_from_json(const nlohmann::json& j) {
    if (!j.contains("rays") || !j["rays"].is_array())
        throw std::invalid_argument("curve json: missing \"rays\" array");
    TropicalCurve curve;
    for (const auto& e : j["rays"]) {
        if (!e.contains("u") || !e["u"].is_array() || e["u"].size() < 3)
            throw std::invalid_argument("curve json: each ray needs \"u\" with >= 3 integers");
        TropicalRay ray;
        for (const auto& c : e["u"]) {
            if (!c.is_number_integer())
                throw std::invalid_argument("curve json: ray coordinates must be integers");
            ray.u.push_back(c.get<Int>());
        }
        ray.mult = e.value("mult", Int{1});
        // canonicalize the representative modulo (1,...,1)
        const Int mn = *std::min_element(ray.u.begin(), ray.u.end());
        for (Int& c : ray.u) c -= mn;
        curve.rays.push_back(std::move(ray));
    }
    return curve;
}

inline nlohmann::json to_json(const SearchResult& r) {
    return {{"n", r.n},
            {"A", r.a_of_n},
            {"witness", to_json(r.witness)},
            {"nodes", r.nodes},
            {"ms", r.ms},
            {"status", r.status == SearchStatus::Exact ? "exact" : "inconclusive"},
            {"primitive_witness", r.witness_primitive_only}};
}

inline nlohmann::json to_json(const ABound& b) {
    return {{"n", b.n}, {"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}};
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace latmax
