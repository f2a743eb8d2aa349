#pragma once

#include "ksba/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ksba {

enum class SingularityTag {
    Smooth,
    ADE,
    CyclicQuotient,
    DihedralQuotient,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    SimpleElliptic,
    Cusp,
    Z2QuotientOfCuspOrElliptic,
    Z3Quotient,
    Z4Quotient,
    Z6Quotient,
    EllipticGorenstein,  // simple elliptic or cusp, not told apart
    NotInTaxonomy,
};

const char* to_string(SingularityTag t);

struct SingularityType {
    SingularityTag tag = SingularityTag::NotInTaxonomy;
    std::string label;                       // "A3", "D5", "E8", "1/7(1,3)", ...
    std::vector<std::int64_t> branch_dets;   // forks: sorted branch determinants
    std::optional<std::int64_t> degree;      // elliptic Gorenstein: -Z^2
    std::string note;

    [[nodiscard]] bool log_canonical() const;
    [[nodiscard]] bool log_terminal() const;
    [[nodiscard]] bool elliptic_gorenstein() const;
    [[nodiscard]] std::string describe() const;
};

/// First matching pattern of the lc taxonomy on a minimal good resolution graph.
/// Throws Disconnected, InvalidGraph, NonRationalVertexOutsideEllipticCase.
SingularityType classify(const DualGraph& g);

/// Discrepancy criterion (all a_E >= -1). Throws NotContractible.
bool is_lc(const DualGraph& g);

enum class BranchPointKind { Simple, Triple33, Quadruple };

/// Singularity of a double cover over a point of the branch curve.
SingularityType branch_curve_singularity_kind(BranchPointKind kind);

}  // namespace ksba
