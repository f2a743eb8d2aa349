#include "ksba/volume.hpp"

#include "ksba/errors.hpp"

#include <algorithm>
#include <set>

namespace ksba {

VolumeResult volume(const ContractionSpec& spec) {
    const auto& lat = spec.lattice;
    std::set<std::string> seen;
    for (const auto& e : spec.contracted) {
        (void)lat.index_of(e);
        if (!lat.is_curve(e)) throw NotACurve(e + " is not a flagged curve");
        if (!seen.insert(e).second) throw DuplicateLabel(e + " contracted twice");
    }
    lat.check_adjunction();

    const std::size_t n = spec.contracted.size();
    SymMatrix m(n);
    std::vector<Rational> k(n);
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = lat.pair(lat.canonical(), spec.contracted[i]);
        for (std::size_t j = i; j < n; ++j) m.set(i, j, lat.pair(spec.contracted[i], spec.contracted[j]));
    }
    if (!is_negative_definite(m)) throw NotContractible("contracted curves have a non negative definite pairing");

    VolumeResult r;
    r.ambient_k2 = lat.canonical_square();
    r.profile = solve_discrepancies(m, k, spec.contracted);
    r.volume = r.ambient_k2;
    r.pullback = lat.K();
    for (std::size_t i = 0; i < n; ++i) {
        r.volume -= r.profile.a[i] * k[i];
        r.pullback -= r.profile.a[i] * DivisorClass::of(spec.contracted[i]);
    }
    r.log_canonical = r.profile.log_canonical();
    return r;
}

bool StabilityReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const StabilityCheck& c) { return c.pass; });
}

StabilityReport stability_necessary_checks(const ContractionSpec& spec) {
    VolumeResult r = volume(spec);
    const auto& lat = spec.lattice;
    StabilityReport rep;
    Rational sq = lat.square(r.pullback);
    rep.checks.push_back({"(pi*K)^2 > 0", sq.sign() > 0, sq});
    for (const auto& [label, genus] : lat.curves()) {
        if (std::find(spec.contracted.begin(), spec.contracted.end(), label) != spec.contracted.end()) continue;
        Rational v = lat.pair(r.pullback, DivisorClass::of(label));
        rep.checks.push_back({"(pi*K)." + label + " > 0", v.sign() > 0, v});
    }
    Rational lo = r.profile.minimum();
    rep.checks.push_back({"min a_E >= -1", lo >= Rational(-1), lo});
    return rep;
}

bool gorenstein_gap_check(const ContractionSpec& spec) {
    VolumeResult r = volume(spec);
    bool antecedent = false;
    for (std::size_t i = 0; i < spec.contracted.size(); ++i) {
        Rational ke = spec.lattice.pair(spec.lattice.canonical(), spec.contracted[i]);
        if (r.profile.a[i].sign() < 0 && ke.sign() > 0) antecedent = true;
    }
    return !antecedent || r.volume > r.ambient_k2;
}

}  // namespace ksba
