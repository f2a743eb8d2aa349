#include "ksba/corpus.hpp"

#include "ksba/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ksba {

namespace {

struct Builder {
    DualGraph g;
    int next = 0;

    std::string curve(int self, int genus = 0) {
        std::string id = "E" + std::to_string(next++);
        g.add_curve(id, self, genus);
        return id;
    }
    // A chain hanging off `from` (or free if empty); returns the ids in order.
    std::vector<std::string> leg(const std::string& from, const std::vector<int>& weights) {
        std::vector<std::string> ids;
        std::string prev = from;
        for (int w : weights) {
            std::string id = curve(-w);
            if (!prev.empty()) g.add_edge(prev, id);
            ids.push_back(id);
            prev = id;
        }
        return ids;
    }
};

std::string join(const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

DualGraph chain(const std::vector<int>& weights) {
    Builder b;
    b.leg("", weights);
    return b.g;
}

DualGraph cycle(const std::vector<int>& weights) {
    Builder b;
    if (weights.size() == 2) {
        std::string x = b.curve(-weights[0]);
        b.g.add_edge(x, b.curve(-weights[1]), 2);
        return b.g;
    }
    auto ids = b.leg("", weights);
    b.g.add_edge(ids.back(), ids.front());
    return b.g;
}

DualGraph fork(int center, const std::vector<std::vector<int>>& legs) {
    Builder b;
    std::string c = b.curve(-center);
    for (const auto& l : legs) b.leg(c, l);
    return b.g;
}

// core chain with two legs at each end
DualGraph double_fork(const std::vector<int>& core, const std::vector<std::vector<int>>& legs) {
    Builder b;
    auto ids = b.leg("", core);
    b.leg(ids.front(), legs[0]);
    b.leg(ids.front(), legs[1]);
    b.leg(ids.back(), legs[2]);
    b.leg(ids.back(), legs[3]);
    return b.g;
}

bool negative_definite(const DualGraph& g) { return is_negative_definite(intersection_matrix(g)); }

std::string legs_name(const std::vector<std::vector<int>>& legs) {
    std::string s;
    for (const auto& l : legs) s += "[" + join(l) + "]";
    return s;
}

using EdgeList = std::vector<std::pair<int, int>>;

bool connected(int n, const EdgeList& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps == 1;
}

// One edge list per isomorphism class of connected simple graphs on n vertices.
std::vector<EdgeList> graph_shapes(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<int> perm(n);
    std::set<std::uint32_t> seen;
    std::vector<EdgeList> out;
    const std::uint32_t subsets = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        EdgeList edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask & (1u << k)) edges.push_back(pairs[k]);
        }
        if (!connected(n, edges)) continue;
        std::uint32_t canon = UINT32_MAX;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t m = 0;
            for (auto [a, b] : edges) {
                int x = std::min(perm[a], perm[b]);
                int y = std::max(perm[a], perm[b]);
                auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(x, y));
                m |= 1u << static_cast<unsigned>(it - pairs.begin());
            }
            canon = std::min(canon, m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(canon).second) out.push_back(edges);
    }
    return out;
}

template <class Keep>
std::vector<DualGraph> weighted(int max_vertices, int min_self, int max_self, Keep keep) {
    std::vector<DualGraph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        for (const auto& edges : graph_shapes(n)) {
            if (!keep(n, edges)) continue;
            std::vector<int> w(n, max_self);
            while (true) {
                DualGraph g;
                for (int i = 0; i < n; ++i) g.add_curve("E" + std::to_string(i), w[i]);
                for (auto [a, b] : edges) g.add_edge("E" + std::to_string(a), "E" + std::to_string(b));
                if (negative_definite(g)) out.push_back(std::move(g));
                int k = 0;
                while (k < n && w[k] == min_self) w[k++] = max_self;
                if (k == n) break;
                --w[k];
            }
        }
    }
    return out;
}

}  // namespace

std::vector<NamedGraph> taxonomy_corpus() {
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, DualGraph g) {
        bool seen = std::any_of(out.begin(), out.end(), [&](const NamedGraph& ng) { return ng.name == name; });
        if (!seen && negative_definite(g)) out.push_back({std::move(name), std::move(g)});
    };

    add("smooth point blowup", chain({1}));
    for (int a = 2; a <= 6; ++a) add("string [" + std::to_string(a) + "]", chain({a}));
    for (int a = 2; a <= 6; ++a) {
        for (int b = a; b <= 6; ++b) add("string [" + join({a, b}) + "]", chain({a, b}));
    }
    for (const auto& w : std::vector<std::vector<int>>{{2, 2, 2}, {2, 3, 2}, {3, 2, 3}, {2, 2, 3}, {4, 2, 5},
                                                      {2, 2, 2, 2}, {3, 3, 3, 3}, {2, 2, 2, 2, 2}, {6, 2, 2, 6}}) {
        add("string [" + join(w) + "]", chain(w));
    }

    for (int d = 1; d <= 6; ++d) {
        Builder b;
        b.curve(-d, 1);
        add("elliptic curve of degree " + std::to_string(d), b.g);
    }
    for (const auto& w : std::vector<std::vector<int>>{{2, 3}, {3, 3}, {2, 6}, {2, 2, 3}, {3, 3, 3}, {2, 3, 2, 3},
                                                      {2, 2, 2, 3}, {4, 2, 5}}) {
        add("cycle [" + join(w) + "]", cycle(w));
    }

    const std::vector<std::vector<int>> third{{2}, {3}, {2, 2}, {4}, {2, 3}, {3, 2}, {2, 2, 2}};
    for (int c : {2, 3}) {
        for (const auto& t : third) add("fork " + std::to_string(c) + legs_name({{2}, {2}, t}), fork(c, {{2}, {2}, t}));
    }

    // branch strings by determinant
    const std::vector<std::vector<std::vector<int>>> by_det{
        {},
        {},
        {{2}},
        {{3}, {2, 2}},
        {{4}, {2, 2, 2}},
        {{5}, {2, 2, 2, 2}, {2, 3}},
        {{6}, {2, 2, 2, 2, 2}},
        {{7}, {4, 2}},
    };
    const std::vector<std::vector<int>> triples{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6},
                                                {2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {2, 5, 5}};
    for (const auto& t : triples) {
        for (int c : {2, 3}) {
            // first choice in each slot, then one variation in the last slot
            std::vector<std::vector<int>> legs{by_det[t[0]][0], by_det[t[1]][0], by_det[t[2]][0]};
            add("fork " + std::to_string(c) + legs_name(legs), fork(c, legs));
            legs[2] = by_det[t[2]].back();
            add("fork " + std::to_string(c) + legs_name(legs), fork(c, legs));
            legs[1] = by_det[t[1]].back();
            add("fork " + std::to_string(c) + legs_name(legs), fork(c, legs));
        }
    }

    for (const auto& core : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 3}, {3, 2, 3}, {2, 2, 2}, {3, 4}}) {
        add("double fork [" + join(core) + "]", double_fork(core, {{2}, {2}, {2}, {2}}));
    }
    add("double fork [3,3] with a (-3) leg", double_fork({3, 3}, {{2}, {2}, {2}, {3}}));
    add("double fork [3,3] with a long leg", double_fork({3, 3}, {{2}, {2}, {2}, {2, 2}}));
    for (int c : {3, 4, 5}) add("star " + std::to_string(c), fork(c, {{2}, {2}, {2}, {2}}));
    add("star 4 with a (-3) leg", fork(4, {{2}, {2}, {2}, {3}}));
    add("star 4 with a long leg", fork(4, {{2}, {2}, {2}, {2, 2}}));

    {
        DualGraph g = cycle({3, 3, 3});
        g.add_curve("T", -2);
        g.add_edge("E0", "T");
        add("cycle [3,3,3] with a tail", g);
    }
    return out;
}

std::vector<DualGraph> small_weighted_graphs(int max_vertices, int min_self) {
    return weighted(max_vertices, min_self, -1, [](int, const EdgeList&) { return true; });
}

std::vector<DualGraph> small_weighted_trees(int max_vertices, int min_self) {
    return weighted(max_vertices, min_self, -2,
                    [](int n, const EdgeList& e) { return static_cast<int>(e.size()) == n - 1; });
}

std::optional<std::vector<std::int64_t>> brute_force_minimal_cycle(const DualGraph& g, int bound) {
    return brute_force_minimal_cycle(g, std::vector<std::int64_t>(g.size(), bound));
}

std::optional<std::vector<std::int64_t>> brute_force_minimal_cycle(const DualGraph& g,
                                                                   const std::vector<std::int64_t>& bounds) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = g.vertex(i).self_intersection;
    for (const auto& [key, mult] : g.edges()) {
        m[key.first][key.second] = mult;
        m[key.second][key.first] = mult;
    }
    std::vector<std::int64_t> v(n, 1);
    std::vector<std::int64_t> ze(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ze[i] += m[i][j];
    }
    std::optional<std::vector<std::int64_t>> best;
    while (true) {
        if (std::all_of(ze.begin(), ze.end(), [](std::int64_t x) { return x <= 0; })) {
            if (!best) {
                best = v;
            } else {
                for (std::size_t i = 0; i < n; ++i) (*best)[i] = std::min((*best)[i], v[i]);
            }
        }
        std::size_t k = 0;
        while (k < n && v[k] == bounds[k]) {
            for (std::size_t i = 0; i < n; ++i) ze[i] -= (bounds[k] - 1) * m[i][k];
            v[k++] = 1;
        }
        if (k == n) break;
        ++v[k];
        for (std::size_t i = 0; i < n; ++i) ze[i] += m[i][k];
    }
    return best;
}

}  // namespace ksba
