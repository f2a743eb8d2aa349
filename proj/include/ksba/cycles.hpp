#pragma once

#include "ksba/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ksba {

/// Effective integral cycle Σ m_i E_i, aligned with the graph's vertex order.
struct Cycle {
    std::vector<std::string> ids;
    std::vector<std::int64_t> coefficients;

    [[nodiscard]] std::int64_t at(const std::string& id) const;
    [[nodiscard]] std::string str() const;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct LauferTrace {
    Cycle cycle;
    std::size_t iterations = 0;
};

/// Laufer's algorithm from the reduced cycle, always adding the lowest-index E_i with Z·E_i > 0.
/// Throws Disconnected, NotContractible.
LauferTrace laufer(const DualGraph& g);
Cycle fundamental_cycle(const DualGraph& g);

/// Z·E_i for every vertex.
std::vector<std::int64_t> intersections_with_curves(const DualGraph& g, const std::vector<std::int64_t>& z);
std::int64_t self_intersection(const DualGraph& g, const std::vector<std::int64_t>& z);

/// −Z².
std::int64_t degree(const DualGraph& g, const Cycle& z);

/// For a simple elliptic or cusp graph, the reduced cycle; verified against the discrepancy solve.
/// Throws NotEllipticGorenstein.
Cycle canonical_cycle(const DualGraph& g);

enum class BaseLocusKind { SmoothPoint, ADE, EllipticDegreeAtLeast2, EllipticDegree1 };

struct BaseLocusBound {
    BaseLocusKind kind;
    bool ideal_contains_minus_z;   // pullback of m_p contained in O(-Z)
    bool extra_base_point;         // an isolated base point remains on Z
    std::string description;
};

BaseLocusBound base_locus_lower_bound(BaseLocusKind kind);

}  // namespace ksba
