#include "phi4tc/model_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace phi4tc {

using nlohmann::json;

ModelSpec ModelSpec::from_json_text(const std::string& text) {
    json j = json::parse(text);
    ModelSpec spec;
    if (!j.contains("g")) throw std::invalid_argument("ModelSpec: missing field 'g'");
    spec.params.g = j.at("g").get<double>();
    spec.params.a = j.value("a", 0.0);
    if (!(spec.params.g > 0.0)) throw std::invalid_argument("ModelSpec: field 'g' must be > 0");
    spec.beta = j.value("beta", 1.0);
    if (spec.beta < 0.0) throw std::invalid_argument("ModelSpec: field 'beta' must be >= 0");

    std::vector<std::string> labels;
    if (j.contains("vertices"))
        for (const auto& v : j.at("vertices")) labels.push_back(v.get<std::string>());
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw std::invalid_argument("ModelSpec: field 'vertices' must be nonempty");
    spec.graph = InteractionGraph(n, labels);
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw std::invalid_argument("ModelSpec: edge entries are [i, j, J]");
            spec.graph.set_coupling(e[0].get<int>(), e[1].get<int>(), e[2].get<double>());
        }
    }

    if (j.contains("h")) {
        if (j.at("h").is_number()) {
            spec.h.assign(static_cast<std::size_t>(n), j.at("h").get<double>());
        } else {
            spec.h = j.at("h").get<std::vector<double>>();
            if (static_cast<int>(spec.h.size()) != n)
                throw std::invalid_argument("ModelSpec: field 'h' length mismatch");
        }
    } else {
        spec.h.assign(static_cast<std::size_t>(n), 0.0);
    }

    if (j.contains("boundary")) {
        const auto& b = j.at("boundary");
        if (b.contains("profile_M")) spec.boundary_profile_m = b.at("profile_M").get<double>();
        if (b.contains("values")) {
            spec.boundary_values = b.at("values").get<std::vector<double>>();
            if (static_cast<int>(spec.boundary_values->size()) != n)
                throw std::invalid_argument("ModelSpec: boundary values length mismatch");
        }
        spec.boundary_origin = b.value("origin", 0);
    }
    return spec;
}

ModelSpec ModelSpec::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ModelSpec: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ModelSpec::to_json_text() const {
    json j;
    j["g"] = params.g;
    j["a"] = params.a;
    j["beta"] = beta;
    j["h"] = h;
    std::vector<std::string> labels;
    for (int i = 0; i < graph.size(); ++i) labels.push_back(graph.label(i));
    j["vertices"] = labels;
    json edges = json::array();
    for (auto [x, y] : graph.positive_edges())
        edges.push_back(json::array({x, y, graph.coupling(x, y)}));
    j["edges"] = edges;
    if (boundary_profile_m) j["boundary"]["profile_M"] = *boundary_profile_m;
    if (boundary_values) {
        j["boundary"]["values"] = *boundary_values;
        j["boundary"]["origin"] = boundary_origin;
    }
    return j.dump(2) + "\n";
}

}  // namespace phi4tc
