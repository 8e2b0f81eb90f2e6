#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phi4tc/graph.hpp"
#include "phi4tc/single_site.hpp"

namespace phi4tc {

/// Parsed model configuration. JSON schema:
///   g, a, beta: numbers; h: number or per-vertex array;
///   vertices: list of labels; edges: list of [i, j, J_ij];
///   boundary (optional): {"profile_M": m} or {"values": [...], "origin": i}
struct ModelSpec {
    SingleSiteParams params;
    double beta = 1.0;
    std::vector<double> h;
    InteractionGraph graph;
    std::optional<double> boundary_profile_m;
    std::optional<std::vector<double>> boundary_values;
    int boundary_origin = 0;

    static ModelSpec from_json_file(const std::string& path);
    static ModelSpec from_json_text(const std::string& text);
    std::string to_json_text() const;
};

}  // namespace phi4tc
