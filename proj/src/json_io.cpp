#include "fairgame/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fairgame/errors.hpp"

// Output is emitted by hand instead of through the JSON library: the library
// would be entitled to reorder fields or reformat numbers between versions,
// and downstream tests pin exact bytes. Parsing goes through the library.

namespace fairgame {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

void append_id_value_map(std::ostringstream& out, const ValueVector& values) {
    out << '{';
    for (size_t v = 0; v < values.size(); ++v) {
        if (v) out << ',';
        out << '"' << v << "\":" << format_double(values[v]);
    }
    out << '}';
}

void append_strategy_map(std::ostringstream& out, const DetMemorylessStrategy& s) {
    out << '{';
    bool first = true;
    for (size_t v = 0; v < s.choice.size(); ++v) {
        if (s.choice[v] == DetMemorylessStrategy::kNone) continue;
        if (!first) out << ',';
        first = false;
        out << '"' << v << "\":" << s.choice[v];
    }
    out << '}';
}

void append_id_list(std::ostringstream& out, const std::vector<int>& ids) {
    out << '[';
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ',';
        out << ids[i];
    }
    out << ']';
}

void append_game_fields(std::ostringstream& out, const GameGraph& game) {
    out << "\"n\":" << game.size() << ",\"initial\":" << game.initial() << ",\"vertices\":[";
    for (int v = 0; v < game.size(); ++v) {
        if (v) out << ',';
        out << "{\"id\":" << v << ",\"class\":\"" << to_string(game.cls(v)) << "\",\"reward\":"
            << format_double(game.reward(v)) << ",\"succ\":[";
        auto succ = game.successors(v);
        auto prob = game.probabilities(v);
        for (size_t i = 0; i < succ.size(); ++i) {
            if (i) out << ',';
            out << '[' << succ[i] << ',' << format_double(prob[i]) << ']';
        }
        out << "]}";
    }
    out << ']';
}

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ValidationError("input is not valid JSON");
    }
    return doc;
}

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw ValidationError(std::string("missing JSON field \"") + key + "\"");
    }
    return *it;
}

int require_int(const json& value, const char* what) {
    if (!value.is_number_integer()) {
        throw ValidationError(std::string(what) + " must be an integer");
    }
    return value.get<int>();
}

double require_number(const json& value, const char* what) {
    if (!value.is_number()) {
        throw ValidationError(std::string(what) + " must be a number");
    }
    return value.get<double>();
}

int parse_id_key(const std::string& key, int n, const char* what) {
    size_t pos = 0;
    int id = -1;
    try {
        id = std::stoi(key, &pos);
    } catch (const std::exception&) {
        throw ValidationError(std::string(what) + " has a non-numeric vertex key \"" + key + "\"");
    }
    if (pos != key.size() || id < 0 || id >= n) {
        throw ValidationError(std::string(what) + " has an out-of-range vertex key \"" + key +
                              "\"");
    }
    return id;
}

}  // namespace

std::string game_to_json(const GameGraph& game) {
    std::ostringstream out;
    out << '{';
    append_game_fields(out, game);
    out << '}';
    return out.str();
}

GameGraph game_from_json(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) {
        throw ValidationError("game JSON must be an object");
    }
    const int n = require_int(require(doc, "n"), "\"n\"");
    const int initial = require_int(require(doc, "initial"), "\"initial\"");
    const json& vertices = require(doc, "vertices");
    if (!vertices.is_array() || static_cast<int>(vertices.size()) != n) {
        throw ValidationError("\"vertices\" must be an array of length \"n\"");
    }

    std::vector<VertexSpec> specs;
    specs.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        const json& jv = vertices[static_cast<size_t>(v)];
        if (!jv.is_object()) {
            throw ValidationError("vertex " + std::to_string(v) + " must be an object");
        }
        if (require_int(require(jv, "id"), "vertex id") != v) {
            throw ValidationError("vertex at position " + std::to_string(v) +
                                  " has a mismatched id");
        }
        VertexSpec spec;
        const json& cls = require(jv, "class");
        if (!cls.is_string()) {
            throw ValidationError("vertex " + std::to_string(v) + " class must be a string");
        }
        const std::string cls_name = cls.get<std::string>();
        if (cls_name == "max") {
            spec.cls = VertexClass::Max;
        } else if (cls_name == "min") {
            spec.cls = VertexClass::Min;
        } else if (cls_name == "prob") {
            spec.cls = VertexClass::Prob;
        } else {
            throw ValidationError("vertex " + std::to_string(v) + " has unknown class \"" +
                                  cls_name + "\"");
        }
        spec.reward = require_number(require(jv, "reward"), "vertex reward");
        const json& succ = require(jv, "succ");
        if (!succ.is_array()) {
            throw ValidationError("vertex " + std::to_string(v) + " succ must be an array");
        }
        for (const json& edge : succ) {
            if (!edge.is_array() || edge.size() != 2) {
                throw ValidationError("vertex " + std::to_string(v) +
                                      " successor entries must be [id, probability] pairs");
            }
            spec.succ.emplace_back(require_int(edge[0], "successor id"),
                                   require_number(edge[1], "successor probability"));
        }
        specs.push_back(std::move(spec));
    }
    return GameGraph::from_vertices(std::move(specs), initial);
}

std::string compiled_to_json(const modelc::CompiledGame& compiled) {
    std::ostringstream out;
    out << '{';
    append_game_fields(out, compiled.game);
    out << ",\"states\":{";
    for (int v = 0; v < compiled.game.size(); ++v) {
        if (v) out << ',';
        out << '"' << v << "\":";
        if (compiled.is_player_state[static_cast<size_t>(v)]) {
            const auto& valuation = compiled.valuations[static_cast<size_t>(v)];
            out << '{';
            for (size_t i = 0; i < compiled.variable_names.size(); ++i) {
                if (i) out << ',';
                out << '"' << compiled.variable_names[i] << "\":" << valuation[i];
            }
            out << '}';
        } else {
            const auto& tag = compiled.vp_tags[static_cast<size_t>(v)];
            out << "{\"@source\":" << tag.source << ",\"@command\":\"" << tag.command_label
                << "\"}";
        }
    }
    out << "}}";
    return out.str();
}

std::string solution_to_json(const Solution& solution) {
    std::ostringstream out;
    out << "{\"values\":";
    append_id_value_map(out, solution.values);
    out << ",\"sigma1\":";
    append_strategy_map(out, solution.sigma1);
    out << ",\"sigma2\":";
    append_strategy_map(out, solution.sigma2);
    out << ",\"iterations\":" << solution.iterations
        << ",\"residual\":" << format_double(solution.residual) << ",\"upper_bound\":";
    append_id_value_map(out, solution.upper_bound);
    out << ",\"converged\":" << (solution.converged ? "true" : "false") << '}';
    return out.str();
}

Solution solution_from_json(const std::string& text, const GameGraph& game) {
    const json doc = parse_json(text);
    if (!doc.is_object()) {
        throw ValidationError("solution JSON must be an object");
    }
    const size_t n = static_cast<size_t>(game.size());

    Solution solution;
    solution.values.assign(n, 0.0);
    std::vector<uint8_t> seen(n, 0);
    const json& values = require(doc, "values");
    if (!values.is_object()) {
        throw ValidationError("\"values\" must be an object");
    }
    for (const auto& [key, value] : values.items()) {
        const int v = parse_id_key(key, game.size(), "\"values\"");
        solution.values[static_cast<size_t>(v)] = require_number(value, "value entry");
        seen[static_cast<size_t>(v)] = 1;
    }
    for (size_t v = 0; v < n; ++v) {
        if (!seen[v]) {
            throw ValidationError("\"values\" is missing vertex " + std::to_string(v));
        }
    }

    const auto read_strategy = [&](const char* key, VertexClass owner) {
        DetMemorylessStrategy s;
        s.owner = owner;
        s.choice.assign(n, DetMemorylessStrategy::kNone);
        auto it = doc.find(key);
        if (it == doc.end()) return s;
        if (!it->is_object()) {
            throw ValidationError(std::string("\"") + key + "\" must be an object");
        }
        for (const auto& [vkey, choice] : it->items()) {
            const int v = parse_id_key(vkey, game.size(), key);
            const int w = require_int(choice, "strategy choice");
            if (game.cls(v) != owner || game.is_terminal(v)) {
                throw ValidationError(std::string("\"") + key + "\" names vertex " +
                                      std::to_string(v) + ", which it does not own");
            }
            auto succ = game.successors(v);
            if (std::find(succ.begin(), succ.end(), w) == succ.end()) {
                throw ValidationError(std::string("\"") + key + "\" picks " + std::to_string(w) +
                                      " which is not a successor of " + std::to_string(v));
            }
            s.choice[static_cast<size_t>(v)] = w;
        }
        return s;
    };
    solution.sigma1 = read_strategy("sigma1", VertexClass::Max);
    solution.sigma2 = read_strategy("sigma2", VertexClass::Min);

    if (auto it = doc.find("iterations"); it != doc.end()) {
        solution.iterations = it->get<long>();
    }
    if (auto it = doc.find("residual"); it != doc.end()) {
        solution.residual = require_number(*it, "\"residual\"");
    }
    solution.upper_bound.assign(n, 0.0);
    if (auto it = doc.find("upper_bound"); it != doc.end() && it->is_object()) {
        for (const auto& [key, value] : it->items()) {
            const int v = parse_id_key(key, game.size(), "\"upper_bound\"");
            solution.upper_bound[static_cast<size_t>(v)] = require_number(value, "bound entry");
        }
    }
    if (auto it = doc.find("converged"); it != doc.end()) {
        if (!it->is_boolean()) {
            throw ValidationError("\"converged\" must be a boolean");
        }
        solution.converged = it->get<bool>();
    }
    return solution;
}

std::string stopping_report_to_json(const StoppingReport& report) {
    std::ostringstream out;
    out << "{\"stopping_under_fairness\":" << (report.stopping ? "true" : "false")
        << ",\"witness\":";
    append_id_list(out, report.witness.to_ids());
    out << ",\"almost_sure\":";
    append_id_list(out, report.almost_sure.to_ids());
    out << '}';
    return out.str();
}

std::string estimate_to_json(const Estimate& estimate) {
    std::ostringstream out;
    out << "{\"mean\":" << format_double(estimate.mean)
        << ",\"stderr\":" << format_double(estimate.standard_error)
        << ",\"episodes\":" << estimate.episodes
        << ",\"termination_rate\":" << format_double(estimate.termination_rate) << '}';
    return out.str();
}

std::string oracle_result_to_json(const ValueVector& values, bool stopping) {
    std::ostringstream out;
    out << "{\"values\":";
    append_id_value_map(out, values);
    out << ",\"stopping\":" << (stopping ? "true" : "false") << '}';
    return out.str();
}

}  // namespace fairgame
