#include "subiso/oracle.hpp"

#include <algorithm>

namespace subiso {
namespace {

// Static order: smallest part first, then repeatedly the unplaced node adjacent to the placed
// ones with the smallest part (any unplaced node if none is adjacent).
std::vector<int> search_order(const HostGraph& G) {
    const Pattern& H = G.pattern();
    std::vector<int> order;
    std::vector<char> placed(H.n(), 0);
    for (int step = 0; step < H.n(); ++step) {
        int best = -1;
        bool best_adj = false;
        for (int x = 0; x < H.n(); ++x) {
            if (placed[x]) continue;
            bool adj = false;
            for (int y : H.nbrs(x)) adj = adj || placed[y];
            auto better = [&] {
                if (best < 0) return true;
                if (adj != best_adj) return adj;
                return G.part(x).size() < G.part(best).size();
            };
            if (better()) best = x, best_adj = adj;
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

}  // namespace

void brute_for_each(const HostGraph& G, const std::function<bool(const Tuple&)>& fn, const OracleOptions& opt) {
    const Pattern& H = G.pattern();
    if (H.n() == 0) return;
    if (opt.max_product > 0) {
        double prod = 1;
        for (int x = 0; x < H.n(); ++x) prod *= static_cast<double>(G.part(x).size());
        if (prod > opt.max_product) throw InputError("brute force search space too large");
    }
    auto order = search_order(G);
    std::vector<int> pos(H.n());
    for (int i = 0; i < H.n(); ++i) pos[order[i]] = i;
    // for each depth: placed neighbours of the node placed there
    std::vector<std::vector<int>> back(H.n());
    for (int i = 0; i < H.n(); ++i)
        for (int y : H.nbrs(order[i]))
            if (pos[y] < i) back[i].push_back(y);

    Tuple t(H.n(), -1);
    bool stop = false;
    auto& cnt = counters().brute;
    std::function<void(int)> rec = [&](int depth) {
        if (stop) return;
        if (depth == H.n()) {
            if (!fn(t)) stop = true;
            return;
        }
        const int x = order[depth];
        std::span<const int> cand;
        if (back[depth].empty()) {
            cand = G.part(x);
        } else {
            cand = G.nbrs(t[back[depth][0]], x);
            for (std::size_t j = 1; j < back[depth].size(); ++j) {
                auto s = G.nbrs(t[back[depth][j]], x);
                if (s.size() < cand.size()) cand = s;
            }
        }
        for (int v : cand) {
            ++cnt;
            bool ok = true;
            for (int y : back[depth])
                if (!G.has_edge(v, t[y])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            t[x] = v;
            rec(depth + 1);
            if (stop) return;
        }
        t[x] = -1;
    };
    rec(0);
}

std::vector<Tuple> brute_list(const HostGraph& G, const OracleOptions& opt) {
    std::vector<Tuple> out;
    brute_for_each(G, [&](const Tuple& t) {
        out.push_back(t);
        return true;
    }, opt);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t brute_count(const HostGraph& G, const OracleOptions& opt) {
    std::uint64_t n = 0;
    brute_for_each(G, [&](const Tuple&) {
        ++n;
        return true;
    }, opt);
    return n;
}

std::optional<MinResult> brute_min_weight(const HostGraph& G, const OracleOptions& opt) {
    std::optional<MinResult> best;
    brute_for_each(G, [&](const Tuple& t) {
        Weight w = tuple_weight(G, t);
        if (!best || w < best->weight || (w == best->weight && t < best->tuple)) best = MinResult{t, w};
        return true;
    }, opt);
    return best;
}

}  // namespace subiso
