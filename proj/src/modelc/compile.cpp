#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include "fairgame/errors.hpp"
#include "fairgame/modelc.hpp"
#include "eval.hpp"

namespace fairgame::modelc {

namespace {

struct VarInfo {
    long long lo = 0;
    long long hi = 0;
};

std::string valuation_string(const std::vector<std::string>& names,
                             const std::vector<long long>& valuation) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out << ", ";
        out << names[i] << '=' << valuation[i];
    }
    out << ')';
    return out.str();
}

// One enabled command, fully evaluated at a state: merged branch targets in
// first-encounter order with their summed probabilities.
struct CommandPlan {
    const Command* command = nullptr;
    std::vector<std::pair<std::vector<long long>, double>> branches;
};

}  // namespace

CompiledGame compile(const ModelAst& ast, const CompileOptions& options) {
    // Constants fold in declaration order, so later constants may refer to
    // earlier ones.
    std::map<std::string, Value> constants;
    std::map<std::string, const TableDecl*> tables;
    for (const TableDecl& table : ast.tables) tables[table.name] = &table;
    for (const ConstDecl& decl : ast.constants) {
        EvalContext ctx{&constants, &tables, nullptr, nullptr};
        const Value v = eval(*decl.value, ctx);
        if (decl.is_real) {
            if (!v.is_numeric()) {
                throw ModelError("constant '" + decl.name + "' must be numeric", decl.pos.line,
                                 decl.pos.column);
            }
            constants[decl.name] = Value::of_real(v.as_double());
        } else {
            if (v.kind != Value::Kind::Int) {
                throw ModelError("constant '" + decl.name + "' is declared int", decl.pos.line,
                                 decl.pos.column);
            }
            constants[decl.name] = v;
        }
    }

    std::map<std::string, VertexClass> label_owner;
    for (const std::string& label : ast.player1_labels) label_owner[label] = VertexClass::Max;
    for (const std::string& label : ast.player2_labels) label_owner[label] = VertexClass::Min;

    CompiledGame out;
    std::map<std::string, int> variable_index;
    std::vector<VarInfo> var_info;
    std::vector<long long> init_valuation;
    for (const VarDecl& decl : ast.variables) {
        EvalContext ctx{&constants, &tables, nullptr, nullptr};
        VarInfo info;
        info.lo = require_int(eval(*decl.lo, ctx), *decl.lo, "range bound");
        info.hi = require_int(eval(*decl.hi, ctx), *decl.hi, "range bound");
        if (info.lo > info.hi) {
            throw ModelError("variable '" + decl.name + "' has the empty range [" +
                                 std::to_string(info.lo) + ".." + std::to_string(info.hi) + "]",
                             decl.pos.line, decl.pos.column);
        }
        const long long init = require_int(eval(*decl.init, ctx), *decl.init, "init value");
        if (init < info.lo || init > info.hi) {
            throw ModelError("variable '" + decl.name + "' initializes outside its range",
                             decl.pos.line, decl.pos.column);
        }
        variable_index[decl.name] = static_cast<int>(out.variable_names.size());
        out.variable_names.push_back(decl.name);
        var_info.push_back(info);
        init_valuation.push_back(init);
    }
    std::map<std::vector<long long>, int> id_of;
    std::vector<VertexSpec> specs;
    std::deque<int> worklist;

    const auto guard_cap = [&]() {
        if (static_cast<long>(specs.size()) >= options.state_cap) {
            throw SizeGuardError("state space exceeds the cap of " +
                                 std::to_string(options.state_cap) + " vertices");
        }
    };

    const auto add_player_state = [&](const std::vector<long long>& valuation) {
        guard_cap();
        const int id = static_cast<int>(specs.size());
        id_of.emplace(valuation, id);
        specs.emplace_back();
        out.is_player_state.push_back(1);
        out.valuations.push_back(valuation);
        out.vp_tags.emplace_back();
        worklist.push_back(id);
        return id;
    };

    add_player_state(init_valuation);

    while (!worklist.empty()) {
        const int id = worklist.front();
        worklist.pop_front();
        const std::vector<long long> state = out.valuations[static_cast<size_t>(id)];
        EvalContext ctx{&constants, &tables, &variable_index, &state};

        double reward = 0.0;
        for (const RewardItem& item : ast.rewards) {
            if (!require_bool(eval(*item.guard, ctx), *item.guard, "reward guard")) continue;
            const double r = require_number(eval(*item.value, ctx), *item.value, "reward value");
            if (!(r >= 0.0) || !std::isfinite(r)) {
                throw ModelError("reward at state " +
                                     valuation_string(out.variable_names, state) +
                                     " is negative or not finite",
                                 item.pos.line, item.pos.column);
            }
            reward += r;
        }

        std::vector<CommandPlan> plans;
        for (const Command& cmd : ast.commands) {
            if (!require_bool(eval(*cmd.guard, ctx), *cmd.guard, "guard")) continue;
            CommandPlan plan;
            plan.command = &cmd;
            double sum = 0.0;
            for (const Branch& branch : cmd.branches) {
                const double p = require_number(eval(*branch.probability, ctx),
                                                *branch.probability, "branch probability");
                if (p < 0.0 || !std::isfinite(p)) {
                    throw ModelError("branch probability " + std::to_string(p) + " of [" +
                                         cmd.label + "] is negative or not finite",
                                     cmd.pos.line, cmd.pos.column);
                }
                sum += p;
                std::vector<long long> target = state;
                for (const auto& [name, expr] : branch.update.assigns) {
                    auto it = variable_index.find(name);
                    if (it == variable_index.end()) {
                        throw ModelError("assignment to unknown variable '" + name + "'",
                                         expr->pos.line, expr->pos.column);
                    }
                    const long long v = require_int(eval(*expr, ctx), *expr, "update value");
                    const VarInfo& info = var_info[static_cast<size_t>(it->second)];
                    if (v < info.lo || v > info.hi) {
                        throw ModelError("update drives '" + name + "' to " + std::to_string(v) +
                                             ", outside [" + std::to_string(info.lo) + ".." +
                                             std::to_string(info.hi) + "] at state " +
                                             valuation_string(out.variable_names, state),
                                         expr->pos.line, expr->pos.column);
                    }
                    target[static_cast<size_t>(it->second)] = v;
                }
                bool merged = false;
                for (auto& [existing, q] : plan.branches) {
                    if (existing == target) {
                        q += p;
                        merged = true;
                        break;
                    }
                }
                if (!merged) plan.branches.emplace_back(std::move(target), p);
            }
            if (std::fabs(sum - 1.0) > options.row_tolerance) {
                throw ModelError("probabilities of [" + cmd.label + "] sum to " +
                                     std::to_string(sum) + " at state " +
                                     valuation_string(out.variable_names, state),
                                 cmd.pos.line, cmd.pos.column);
            }
            std::erase_if(plan.branches, [](const auto& entry) { return entry.second == 0.0; });
            plans.push_back(std::move(plan));
        }

        VertexSpec spec;
        if (plans.empty()) {
            if (!options.close_deadlocks) {
                throw ModelError("state " + valuation_string(out.variable_names, state) +
                                 " has no enabled command (use --close-deadlocks to make such "
                                 "states terminal)");
            }
            if (reward != 0.0) {
                throw ModelError("deadlocked state " +
                                 valuation_string(out.variable_names, state) + " carries reward " +
                                 std::to_string(reward) + "; only reward 0 can be closed");
            }
            // Closed deadlocks become terminals; the owning player of a state
            // with no commands is arbitrary, and Min is the fixed choice.
            spec.cls = VertexClass::Min;
            spec.reward = 0.0;
            spec.succ = {{id, 1.0}};
            specs[static_cast<size_t>(id)] = std::move(spec);
            continue;
        }

        spec.cls = label_owner.at(plans.front().command->label);
        for (const CommandPlan& plan : plans) {
            if (label_owner.at(plan.command->label) != spec.cls) {
                throw ModelError("state " + valuation_string(out.variable_names, state) +
                                     " enables commands of both players ([" +
                                     plans.front().command->label + "] and [" +
                                     plan.command->label + "])",
                                 plan.command->pos.line, plan.command->pos.column);
            }
        }
        spec.reward = reward;

        // Register the newly discovered player states of this expansion in
        // sorted valuation order, then materialize the command edges; the
        // probabilistic vertices introduced for branching commands follow in
        // command declaration order. This fixes all vertex ids independently
        // of address- or hash-ordering.
        std::vector<std::vector<long long>> fresh;
        for (const CommandPlan& plan : plans) {
            for (const auto& [target, p] : plan.branches) {
                if (!id_of.count(target)) {
                    if (std::find(fresh.begin(), fresh.end(), target) == fresh.end()) {
                        fresh.push_back(target);
                    }
                }
            }
        }
        std::sort(fresh.begin(), fresh.end());
        for (const auto& valuation : fresh) add_player_state(valuation);

        for (const CommandPlan& plan : plans) {
            if (plan.branches.empty()) {
                throw ModelError("command [" + plan.command->label +
                                     "] has no positive-probability branch",
                                 plan.command->pos.line, plan.command->pos.column);
            }
            // A syntactically single-branch command with probability 1 is a
            // plain edge; everything else goes through an introduced Prob
            // vertex, even if its branches merge into a point distribution.
            int edge_target;
            if (plan.command->branches.size() == 1 &&
                std::fabs(plan.branches.front().second - 1.0) <= options.row_tolerance) {
                edge_target = id_of.at(plan.branches.front().first);
            } else {
                guard_cap();
                const int vp = static_cast<int>(specs.size());
                VertexSpec vp_spec;
                vp_spec.cls = VertexClass::Prob;
                vp_spec.reward = 0.0;
                for (const auto& [target, p] : plan.branches) {
                    vp_spec.succ.emplace_back(id_of.at(target), p);
                }
                specs.push_back(std::move(vp_spec));
                out.is_player_state.push_back(0);
                out.valuations.emplace_back();
                CompiledGame::VpTag tag;
                tag.source = id;
                tag.command_label = plan.command->label;
                out.vp_tags.push_back(std::move(tag));
                edge_target = vp;
            }
            const auto already = [&](int w) {
                for (const auto& [existing, p] : spec.succ) {
                    if (existing == w) return true;
                }
                return false;
            };
            if (!already(edge_target)) spec.succ.emplace_back(edge_target, 1.0);
        }
        specs[static_cast<size_t>(id)] = std::move(spec);
    }

    for (size_t v = 0; v < specs.size(); ++v) {
        const VertexSpec& spec = specs[v];
        const bool self_loop = spec.succ.size() == 1 &&
                               spec.succ.front().first == static_cast<int>(v) &&
                               spec.succ.front().second == 1.0;
        if (self_loop && spec.reward != 0.0) {
            throw ModelError("state " +
                             (out.is_player_state[v]
                                  ? valuation_string(out.variable_names, out.valuations[v])
                                  : std::to_string(v)) +
                             " is terminal (self-loop) but carries reward " +
                             std::to_string(spec.reward));
        }
    }

    out.game = GameGraph::from_vertices(std::move(specs), 0);
    return out;
}

CompiledGame compile_model(const std::string& text, const CompileOptions& options) {
    return compile(parse(text), options);
}

}  // namespace fairgame::modelc
