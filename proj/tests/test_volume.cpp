#include "ksba/errors.hpp"
#include "ksba/scenarios.hpp"
#include "ksba/volume.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ksba;

namespace {

// Lattice on labels + "K" from an integer Gram matrix whose last row is K; every
// non-K label is flagged with the given genus.
IntersectionLattice hand_lattice(const std::vector<std::string>& labels, const std::vector<std::vector<long>>& rows,
                                 const std::vector<int>& genera) {
    std::vector<std::string> all = labels;
    all.push_back("K");
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    IntersectionLattice lat(all, SymMatrix::from_rows(r));
    lat.set_canonical("K");
    for (std::size_t i = 0; i < labels.size(); ++i) lat.flag_curve(labels[i], genera[i]);
    return lat;
}

// K^2 - sum a_E K.E with a from an independent Gauss-Jordan solve on the contracted block.
oracle::Frac oracle_volume(const ContractionSpec& spec) {
    const auto& lat = spec.lattice;
    const std::size_t n = spec.contracted.size();
    auto frac = [](const Rational& q) {
        return oracle::Frac(static_cast<oracle::i128>(Rational(q.numerator()).to_int64()),
                            static_cast<oracle::i128>(Rational(q.denominator()).to_int64()));
    };
    oracle::Matrix m(n, std::vector<oracle::Frac>(n));
    std::vector<oracle::Frac> k(n);
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = frac(lat.pair(lat.canonical(), spec.contracted[i]));
        for (std::size_t j = 0; j < n; ++j) m[i][j] = frac(lat.pair(spec.contracted[i], spec.contracted[j]));
    }
    auto a = oracle::solve(m, k);
    oracle::Frac v = frac(lat.canonical_square());
    for (std::size_t i = 0; i < n; ++i) v = v - a[i] * k[i];
    return v;
}

std::vector<Scenario> catalog_sample() {
    std::vector<Scenario> out;
    for (const auto& name : scenario_names()) {
        for (const auto& p : parameter_grid(name, 9)) out.push_back(build(name, p));
    }
    return out;
}

}  // namespace

TEST(Volume, ElevenA) {
    auto s = build("6.1a");
    auto r = volume(s.spec);
    EXPECT_EQ(r.ambient_k2, Rational(0));
    EXPECT_EQ(r.volume, Rational(4, 3));
    EXPECT_TRUE(r.log_canonical);
}

TEST(Volume, HandBuiltChainContraction) {
    // E0^2 = -5, C0^2 = -2 meeting once, K^2 = 0: the n = 3 chain volume
    for (long n = 1; n <= 15; ++n) {
        auto lat = hand_lattice({"E0", "C0"}, {{-(n + 2), 1, n}, {1, -2, 0}, {n, 0, 0}}, {0, 0});
        auto r = volume({lat, {"E0", "C0"}});
        EXPECT_EQ(r.volume, w2_first(n)) << n;
        EXPECT_EQ(r.volume, Rational(2 * n * n, 2 * n + 3)) << n;
        EXPECT_EQ(r.profile.at("E0"), Rational(-2 * n, 2 * n + 3));
    }
    auto lat = hand_lattice({"E0", "C0"}, {{-5, 1, 3}, {1, -2, 0}, {3, 0, 0}}, {0, 0});
    EXPECT_EQ(volume({lat, {"E0", "C0"}}).volume, Rational(2));
}

TEST(Volume, CanonicalContractionLeavesVolumeUnchanged) {
    auto lat = hand_lattice({"A", "B", "Z"}, {{-2, 1, 0, 0}, {1, -2, 0, 0}, {0, 0, -3, 1}, {0, 0, 1, 5}}, {0, 0, 0});
    auto r = volume({lat, {"A", "B"}});
    EXPECT_EQ(r.volume, Rational(5));
    EXPECT_EQ(r.profile.a, (std::vector<Rational>{0, 0}));
    EXPECT_EQ(r.profile.components[0].verdict, Verdict::Canonical);
}

TEST(Volume, Errors) {
    auto lat = hand_lattice({"A", "B"}, {{-2, 1, 0}, {1, -2, 0}, {0, 0, 1}}, {0, 0});
    lat.add_class("X", DivisorClass::of("A") + DivisorClass::of("B"));
    EXPECT_THROW(volume({lat, {"X"}}), NotACurve);
    EXPECT_THROW(volume({lat, {"A", "A"}}), DuplicateLabel);
    EXPECT_THROW(volume({lat, {"Q"}}), UnknownLabel);
    auto fibre = hand_lattice({"C0", "C1"}, {{-2, 2, 0}, {2, -2, 0}, {0, 0, 0}}, {0, 0});
    EXPECT_THROW(volume({fibre, {"C0", "C1"}}), NotContractible);
    auto bad = hand_lattice({"E"}, {{-2, 1}, {1, 0}}, {0});
    EXPECT_THROW(volume({bad, {"E"}}), AdjunctionMismatch);
}

TEST(Stability, ElevenBPasses) {
    auto s = build("6.1b", {{"n", 4}});
    auto rep = stability_necessary_checks(s.spec);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.scope, "necessary conditions on listed curves");
    auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                           [](const StabilityCheck& c) { return c.name == "(pi*K).Ecal > 0"; });
    ASSERT_NE(it, rep.checks.end());
    EXPECT_EQ(it->value, Rational(1, 3));
}

TEST(Stability, EllipticCurveIsLcAndWorseIsFlagged) {
    // genus 1, E^2 = -3: a = -1
    auto ell = hand_lattice({"E"}, {{-3, 3}, {3, 4}}, {1});
    auto r = volume({ell, {"E"}});
    EXPECT_EQ(r.profile.a[0], Rational(-1));
    EXPECT_TRUE(r.log_canonical);
    EXPECT_EQ(r.volume, Rational(7));

    // genus 2, E^2 = -4: a = -3/2
    auto g2 = hand_lattice({"E"}, {{-4, 6}, {6, 10}}, {2});
    auto r2 = volume({g2, {"E"}});
    EXPECT_EQ(r2.profile.a[0], Rational(-3, 2));
    EXPECT_FALSE(r2.log_canonical);
    EXPECT_EQ(r2.profile.components[0].verdict, Verdict::NotLc);
    EXPECT_EQ(r2.volume, Rational(19));
    auto rep = stability_necessary_checks({g2, {"E"}});
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.checks.back().pass);

    // genus 2 (-1)-curve: a = -3
    auto g2m1 = hand_lattice({"E"}, {{-1, 3}, {3, 10}}, {2});
    EXPECT_EQ(volume({g2m1, {"E"}}).profile.a[0], Rational(-3));
    EXPECT_FALSE(volume({g2m1, {"E"}}).log_canonical);
}

TEST(Stability, NonPositiveCurveFails) {
    // a listed curve with (pi*K).C = 0 after a canonical contraction
    auto lat = hand_lattice({"A", "C"}, {{-2, 0, 0}, {0, -2, 0}, {0, 0, 2}}, {0, 0});
    auto rep = stability_necessary_checks({lat, {"A"}});
    EXPECT_FALSE(rep.passed());
    EXPECT_EQ(rep.checks[1].name, "(pi*K).C > 0");
    EXPECT_FALSE(rep.checks[1].pass);
}

TEST(GorensteinGap, Examples) {
    auto minus3 = hand_lattice({"E"}, {{-3, 1}, {1, 5}}, {0});
    EXPECT_TRUE(gorenstein_gap_check({minus3, {"E"}}));
    EXPECT_EQ(volume({minus3, {"E"}}).volume, Rational(5) + Rational(1, 3));

    auto ade = hand_lattice({"A", "B"}, {{-2, 1, 0}, {1, -2, 0}, {0, 0, 3}}, {0, 0});
    EXPECT_TRUE(gorenstein_gap_check({ade, {"A", "B"}}));
    EXPECT_EQ(volume({ade, {"A", "B"}}).volume, Rational(3));

    for (long n = 1; n <= 10; ++n) {
        auto sec = hand_lattice({"Z"}, {{-(n + 1), n + 1}, {n + 1, 2}}, {1});
        auto r = volume({sec, {"Z"}});
        EXPECT_EQ(r.profile.a[0], Rational(-1));
        EXPECT_EQ(r.volume, Rational(2 + n + 1));
        EXPECT_TRUE(gorenstein_gap_check({sec, {"Z"}}));
    }
}

TEST(GorensteinGap, HoldsOnCatalog) {
    for (const auto& s : catalog_sample()) EXPECT_TRUE(gorenstein_gap_check(s.spec)) << s.name;
}

TEST(VolumeProperties, TwoSidedComputationAgrees) {
    for (const auto& s : catalog_sample()) {
        auto r = volume(s.spec);
        EXPECT_EQ(s.spec.lattice.square(r.pullback), r.volume) << s.name;
        EXPECT_TRUE(oracle::same(r.volume, oracle_volume(s.spec))) << s.name;
        // pi*K is orthogonal to every contracted curve
        for (const auto& e : s.spec.contracted) {
            EXPECT_EQ(s.spec.lattice.pair(r.pullback, DivisorClass::of(e)), Rational(0)) << s.name << " " << e;
        }
    }
}

TEST(VolumeProperties, PositiveAndMatchesExpectationOnCatalog) {
    for (const auto& s : catalog_sample()) {
        auto r = volume(s.spec);
        EXPECT_GT(r.volume, Rational(0)) << s.name;
        EXPECT_EQ(r.volume, s.expected_volume) << s.name;
    }
}

TEST(VolumeProperties, OrderOfContractedListIrrelevant) {
    for (const auto& s : catalog_sample()) {
        auto spec = s.spec;
        std::reverse(spec.contracted.begin(), spec.contracted.end());
        EXPECT_EQ(volume(spec).volume, volume(s.spec).volume) << s.name;
        std::rotate(spec.contracted.begin(), spec.contracted.begin() + 1, spec.contracted.end());
        EXPECT_EQ(volume(spec).volume, volume(s.spec).volume) << s.name;
    }
}

TEST(VolumeProperties, DisjointMinusTwoCurvesChangeNothing) {
    for (const auto& s : catalog_sample()) {
        auto base = volume(s.spec).volume;
        auto spec = s.spec;
        spec.lattice = resolve_a1(spec.lattice, {"extraA", "extraB"});
        spec.contracted.push_back("extraA");
        spec.contracted.push_back("extraB");
        EXPECT_EQ(volume(spec).volume, base) << s.name;
    }
}
