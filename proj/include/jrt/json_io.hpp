#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#include "jrt/decomposition.hpp"
#include "jrt/extraction.hpp"
#include "jrt/hypergraph.hpp"
#include "jrt/search.hpp"
#include "jrt/star.hpp"
#include "jrt/structure.hpp"
#include "jrt/sunflower.hpp"

namespace jrt::io {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const VertexSet& s) {
    ordered_json a = ordered_json::array();
    s.for_each([&](int v) { a.push_back(v); });
    return a;
}

inline VertexSet vertex_set_from_json(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("vertex set must be an array");
    VertexSet s;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("vertex ids must be integers");
        s.set(v.get<int>());
    }
    return s;
}

inline ordered_json edges_to_json(const std::vector<VertexSet>& edges) {
    ordered_json a = ordered_json::array();
    for (const auto& e : edges) a.push_back(to_json(e));
    return a;
}

/// Numbers beyond 64 bits travel as decimal strings.
inline ordered_json big_to_json(const mpz_class& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

// --- hypergraph interchange: {"n": int, "k": int|null, "edges": [[...]]} ---

inline ordered_json to_json(const Hypergraph& h) {
    ordered_json j;
    j["n"] = h.n;
    if (h.uniform)
        j["k"] = *h.uniform;
    else
        j["k"] = nullptr;
    j["edges"] = edges_to_json(h.edges);
    return j;
}

inline Hypergraph hypergraph_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph needs keys 'n' and 'edges'");
    const int n = j.at("n").get<int>();
    std::optional<int> k;
    if (j.contains("k") && !j.at("k").is_null()) k = j.at("k").get<int>();
    std::vector<VertexSet> edges;
    for (const auto& e : j.at("edges")) {
        VertexSet s = vertex_set_from_json(e);
        if (!s.subset_of(VertexSet::prefix(n)))
            throw std::invalid_argument("edge " + s.str() + " outside the universe");
        edges.push_back(s);
    }
    return Hypergraph(n, std::move(edges), k);
}

inline std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

inline ordered_json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return ordered_json::parse(in);  // parse errors carry byte positions
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

// --- sunflowers ---

inline ordered_json to_json(const Sunflower& s) {
    ordered_json j;
    j["kernel"] = to_json(s.kernel);
    j["petals"] = edges_to_json(s.petals);
    j["size"] = s.size();
    j["exact"] = s.exact;
    return j;
}

// --- stars and cores ---

inline ordered_json to_json(const Star& s) {
    ordered_json j;
    j["centre"] = to_json(s.centre);
    j["body"] = to_json(s.body);
    j["edges"] = edges_to_json(s.edges);
    return j;
}

inline Star star_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("centre") || !j.contains("edges"))
        throw std::invalid_argument("star needs keys 'centre' and 'edges'");
    VertexSet centre = vertex_set_from_json(j.at("centre"));
    std::vector<VertexSet> edges;
    for (const auto& e : j.at("edges")) edges.push_back(vertex_set_from_json(e));
    Star s = make_star(centre, std::move(edges));
    if (j.contains("body") && !j.at("body").is_null()) {
        VertexSet body = vertex_set_from_json(j.at("body"));
        if (!s.body.subset_of(body) || body.intersects(centre))
            throw std::invalid_argument("declared body is inconsistent with the edges");
        s.body = body;
    }
    return s;
}

inline ordered_json to_json(const StarCore& c) {
    ordered_json j;
    j["core"] = to_json(c.core);
    ordered_json removed = ordered_json::array();
    for (const auto& r : c.removed) {
        ordered_json step;
        step["vertex"] = r.vertex;
        step["degree"] = r.degree;
        removed.push_back(step);
    }
    j["removed"] = removed;
    return j;
}

// --- decomposition results ---

inline ordered_json to_json(const DecompositionResult& d) {
    ordered_json j;
    j["q"] = d.params.q;
    j["k"] = d.params.k;
    j["support"] = to_json(d.support);
    j["closure"] = edges_to_json(d.closure.edges);
    j["basis"] = edges_to_json(d.basis.edges);
    ordered_json decs = ordered_json::array();
    for (const auto& dec : d.decompositions) {
        ordered_json one;
        one["edge"] = to_json(dec.edge);
        one["parts"] = edges_to_json(dec.parts);
        decs.push_back(one);
    }
    j["decompositions"] = decs;
    j["basis_max_degree"] = d.basis_max_degree;
    j["degree_bound"] = big_to_json(d.degree_bound);
    return j;
}

// --- structure certificates and traces ---

inline ordered_json to_json(const StructureCertificate& c) {
    ordered_json j;
    j["t"] = c.t;
    j["ell"] = c.ell;
    j["a"] = big_to_json(c.bound_constant);
    j["vertices"] = to_json(c.vertices);
    j["v_t"] = to_json(c.v_t);
    j["v_s"] = to_json(c.v_s);
    j["v_r"] = to_json(c.v_r);
    j["teams"] = edges_to_json(c.teams);
    ordered_json stars = ordered_json::array();
    for (const auto& s : c.stars) stars.push_back(to_json(s));
    j["stars"] = stars;
    j["h_t"] = edges_to_json(c.h_t.edges);
    j["h_s"] = edges_to_json(c.h_s.edges);
    j["h_r"] = edges_to_json(c.h_r.edges);
    return j;
}

inline StructureCertificate certificate_from_json(const ordered_json& j, int n) {
    StructureCertificate c;
    c.t = j.at("t").get<int>();
    c.ell = j.at("ell").get<int>();
    if (j.at("a").is_string())
        c.bound_constant = mpz_class(j.at("a").get<std::string>());
    else
        c.bound_constant = mpz_class(j.at("a").get<std::int64_t>());
    c.vertices = j.contains("vertices") ? vertex_set_from_json(j.at("vertices"))
                                        : VertexSet::prefix(n);
    c.v_t = vertex_set_from_json(j.at("v_t"));
    c.v_s = vertex_set_from_json(j.at("v_s"));
    c.v_r = vertex_set_from_json(j.at("v_r"));
    for (const auto& t : j.at("teams")) c.teams.push_back(vertex_set_from_json(t));
    for (const auto& s : j.at("stars")) c.stars.push_back(star_from_json(s));
    auto read_edges = [&](const char* key) {
        std::vector<VertexSet> edges;
        for (const auto& e : j.at(key)) edges.push_back(vertex_set_from_json(e));
        return Hypergraph(n, std::move(edges));
    };
    c.h_t = read_edges("h_t");
    c.h_s = read_edges("h_s");
    c.h_r = read_edges("h_r");
    return c;
}

inline ordered_json to_json(const PipelineTrace& t) {
    ordered_json j;
    ordered_json red;
    red["sets"] = edges_to_json(t.red.sets.edges);
    red["top"] = edges_to_json(t.red.top.edges);
    red["rest"] = edges_to_json(t.red.rest.edges);
    j["red"] = red;
    j["greens"] = to_json(t.greens);
    j["purple"] = edges_to_json(t.purple.edges);
    ordered_json assignments = ordered_json::array();
    for (const auto& a : t.star_assignments) {
        ordered_json one;
        one["edge"] = to_json(a.edge);
        one["centre"] = to_json(a.centre);
        one["alternatives"] = a.alternatives;
        assignments.push_back(one);
    }
    j["star_assignments"] = assignments;
    ordered_json residual = ordered_json::array();
    for (const auto& r : t.residual) {
        ordered_json one;
        one["edge"] = to_json(r.edge);
        one["class"] = residual_class_name(r.cls);
        residual.push_back(one);
    }
    j["residual"] = residual;
    ordered_json softs = ordered_json::array();
    for (const auto& s : t.soft_checks) {
        ordered_json one;
        one["name"] = s.name;
        one["holds"] = s.holds;
        one["detail"] = s.detail;
        softs.push_back(one);
    }
    j["soft_checks"] = softs;
    return j;
}

// --- search reports ---

inline ordered_json to_json(const SearchReport& r) {
    ordered_json j;
    j["status"] = search_status_name(r.status);
    j["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound ? ordered_json(*r.upper_bound) : ordered_json(nullptr);
    j["nodes"] = r.nodes;
    j["node_budget_hit"] = r.node_budget_hit;
    j["time_budget_hit"] = r.time_budget_hit;
    j["witness"] = r.witness ? to_json(*r.witness) : ordered_json(nullptr);
    return j;
}

// --- extraction traces ---

inline ordered_json to_json(const ExtractionResult& x) {
    ordered_json j;
    j["hat_threshold"] = x.hat_threshold;
    ordered_json steps = ordered_json::array();
    for (const auto& s : x.steps) {
        ordered_json one;
        one["n_before"] = s.n_before;
        one["m_before"] = s.m_before;
        one["star"] = to_json(s.star);
        one["core"] = to_json(s.core);
        steps.push_back(one);
    }
    j["steps"] = steps;
    j["residual"] = to_json(x.residual);
    j["active"] = to_json(x.active);
    j["stop_reason"] = x.stop_reason;
    return j;
}

}  // namespace jrt::io
