#pragma once

#include "ksba/discrepancy.hpp"
#include "ksba/lattice.hpp"

#include <string>
#include <vector>

namespace ksba {

struct ContractionSpec {
    IntersectionLattice lattice;
    std::vector<std::string> contracted;
};

struct VolumeResult {
    Rational ambient_k2;
    Rational volume;           // K² − Σ a_E (K·E)
    DiscrepancyProfile profile;
    DivisorClass pullback;     // π*K_X = K − Σ a_E E on the ambient surface
    bool log_canonical = true;
};

/// Throws UnknownLabel, NotACurve, DuplicateLabel, NotContractible.
VolumeResult volume(const ContractionSpec& spec);

struct StabilityCheck {
    std::string name;
    bool pass = false;
    Rational value;
};

struct StabilityReport {
    std::string scope = "necessary conditions on listed curves";
    std::vector<StabilityCheck> checks;
    [[nodiscard]] bool passed() const;
};

/// (π*K)² > 0, (π*K)·C > 0 on flagged curves that are not contracted, all a_E ≥ −1.
StabilityReport stability_necessary_checks(const ContractionSpec& spec);

/// If some contracted E has a_E < 0 and K·E > 0, the volume exceeds the ambient K².
bool gorenstein_gap_check(const ContractionSpec& spec);

}  // namespace ksba
