#pragma once

#include "ksba/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ksba {

struct NamedGraph {
    std::string name;
    DualGraph graph;
};

/// Negative definite resolution graphs with weights at most 6: every lc family plus
/// near misses just outside the list.
std::vector<NamedGraph> taxonomy_corpus();

/// Connected simple graphs on 1..max_vertices vertices up to isomorphism, each with every
/// assignment of self-intersections in [min_self, -1] that is negative definite.
std::vector<DualGraph> small_weighted_graphs(int max_vertices, int min_self);

/// Rational trees with every curve of self-intersection in [min_self, -2], up to isomorphism
/// of the underlying tree (weightings are not reduced).
std::vector<DualGraph> small_weighted_trees(int max_vertices, int min_self);

/// Componentwise minimum of all cycles with coefficients in 1..bound and Z·E_i <= 0,
/// by exhaustive search. Empty if no such cycle exists.
std::optional<std::vector<std::int64_t>> brute_force_minimal_cycle(const DualGraph& g, int bound);
/// Same search with a separate upper bound per coefficient.
std::optional<std::vector<std::int64_t>> brute_force_minimal_cycle(const DualGraph& g,
                                                                   const std::vector<std::int64_t>& bounds);

}  // namespace ksba
