#pragma once

#include "ksba/graph.hpp"
#include "ksba/rational.hpp"

#include <string>
#include <vector>

namespace ksba {

enum class Verdict { SmoothPointBlowdown, Canonical, LogTerminal, LcNotLt, NotLc };

const char* to_string(Verdict v);

struct ComponentVerdict {
    std::vector<std::size_t> members;
    Verdict verdict = Verdict::Canonical;
};

/// Coefficients a_E in K_Y = π*K_X + Σ a_E E, one per exceptional curve.
struct DiscrepancyProfile {
    std::vector<std::string> ids;
    std::vector<Rational> a;
    std::vector<ComponentVerdict> components;

    [[nodiscard]] const Rational& at(const std::string& id) const;
    [[nodiscard]] Rational minimum() const;
    [[nodiscard]] bool log_canonical() const;
};

/// Solves M a = k where k_i = K·E_i. Components are read off the nonzero off-diagonal entries.
/// Throws SingularMatrix.
DiscrepancyProfile solve_discrepancies(const SymMatrix& m, const std::vector<Rational>& k_dot_e,
                                       const std::vector<std::string>& ids);

/// K·E_i from adjunction: 2g − 2 − E_i².
DiscrepancyProfile discrepancies(const DualGraph& g);

/// Chain of ℓ−1 (−2)-curves followed by one (−3)-curve, listed from the (−2) end.
DualGraph end_chain(int ell);

/// −a of the first curve of end_chain(ℓ), from a direct solve.
Rational end_chain_bound(int ell);

/// Chain with diagonal entries `selfs`, ids prefix+"1".. in order.
DualGraph make_chain(const std::vector<int>& selfs, const std::string& prefix = "E");

/// For a rational string whose inner curves are (−2): true iff a_k = k·a_1, reading from
/// one of the two ends. Throws NotAChain otherwise.
bool proportionality_check(const DualGraph& g);

}  // namespace ksba
