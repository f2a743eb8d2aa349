#pragma once

#include "ksba/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing_helpers {

/// Same graph with vertices inserted in the order `perm` and renamed with `prefix`.
inline ksba::DualGraph permuted(const ksba::DualGraph& g, const std::vector<std::size_t>& perm,
                                const std::string& prefix = "V") {
    ksba::DualGraph out;
    std::vector<std::string> name(g.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        const auto& v = g.vertex(perm[k]);
        name[perm[k]] = prefix + std::to_string(k);
        out.add_curve(name[perm[k]], v.self_intersection, v.genus);
    }
    for (const auto& [key, m] : g.edges()) out.add_edge(name[key.second], name[key.first], m);
    return out;
}

inline std::vector<std::size_t> random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace testing_helpers
