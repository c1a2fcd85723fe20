#include "fairgame/scc.hpp"

#include <algorithm>

namespace fairgame {

std::vector<std::vector<int>> SccDecomposition::members() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(component_count));
    for (int v = 0; v < static_cast<int>(component.size()); ++v) {
        out[static_cast<size_t>(component[static_cast<size_t>(v)])].push_back(v);
    }
    return out;
}

SccDecomposition strongly_connected_components(const GameGraph& game,
                                               const std::vector<uint8_t>* edge_mask) {
    const int n = game.size();
    SccDecomposition out;
    out.component.assign(static_cast<size_t>(n), -1);

    std::vector<int> index(static_cast<size_t>(n), -1);
    std::vector<int> low(static_cast<size_t>(n), 0);
    std::vector<uint8_t> on_stack(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    struct Frame {
        int v;
        int edge;
    };
    std::vector<Frame> frames;
    int next_index = 0;

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        frames.push_back({root, game.row_begin(root)});
        while (!frames.empty()) {
            const int v = frames.back().v;
            if (frames.back().edge < game.row_end(v)) {
                const int e = frames.back().edge++;
                if (edge_mask && !(*edge_mask)[static_cast<size_t>(e)]) continue;
                const int w = game.succ_data()[e];
                if (index[static_cast<size_t>(w)] == -1) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = 1;
                    frames.push_back({w, game.row_begin(w)});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
                }
                continue;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().v;
                low[static_cast<size_t>(parent)] =
                    std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
            }
            if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                const int comp = out.component_count++;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = 0;
                    out.component[static_cast<size_t>(w)] = comp;
                    if (w == v) break;
                }
            }
        }
    }

    out.is_bottom.assign(static_cast<size_t>(out.component_count), 1);
    for (int v = 0; v < n; ++v) {
        for (int e = game.row_begin(v); e < game.row_end(v); ++e) {
            if (edge_mask && !(*edge_mask)[static_cast<size_t>(e)]) continue;
            const int w = game.succ_data()[e];
            const int cv = out.component[static_cast<size_t>(v)];
            if (cv != out.component[static_cast<size_t>(w)]) {
                out.is_bottom[static_cast<size_t>(cv)] = 0;
            }
        }
    }
    return out;
}

}  // namespace fairgame
