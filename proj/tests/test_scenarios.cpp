#include "ksba/errors.hpp"
#include "ksba/scenarios.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace ksba;

namespace {

std::vector<std::string> surfaces(const std::vector<MenuEntry>& m) {
    std::vector<std::string> out;
    for (const auto& e : m) out.push_back(e.surface);
    return out;
}

// Components of the contracted set as label sets, with the classifier verdict of each.
std::map<std::set<std::string>, SingularityType> classified_components(const Scenario& s) {
    std::map<std::set<std::string>, SingularityType> out;
    DualGraph g = contracted_graph(s.spec);
    for (const auto& comp : g.components()) {
        DualGraph sub = g.induced(comp);
        std::set<std::string> ids;
        for (const auto& v : sub.vertices()) ids.insert(v.id);
        out[ids] = classify(sub);
    }
    return out;
}

}  // namespace

TEST(Catalog, NamesAndDefaults) {
    const auto& names = scenario_names();
    EXPECT_EQ(names, (std::vector<std::string>{"5.1", "5.2", "6.1a", "6.1b", "6.1c0", "6.1c0-fiber", "6.1c1", "6.1c2"}));
    EXPECT_EQ(default_params("5.1"), (Params{{"d", 2}, {"N", 5}}));
    EXPECT_TRUE(default_params("6.1a").empty());
    EXPECT_THROW(default_params("7.1"), UnknownScenario);
}

TEST(Catalog, SpecExamples) {
    auto a = build("6.1a");
    EXPECT_EQ(a.expected_volume, Rational(4, 3));
    EXPECT_EQ(a.expected_pg, 2);
    EXPECT_EQ(volume(a.spec).volume, Rational(4, 3));

    auto b = build("6.1b", {{"n", 5}});
    EXPECT_EQ(b.expected_volume, Rational(16, 3));
    EXPECT_EQ(b.expected_pg, 5);
    EXPECT_EQ(volume(b.spec).volume, Rational(16, 3));

    auto f = build("5.1", {{"d", 2}, {"N", 5}});
    EXPECT_EQ(f.expected_volume, Rational(25, 3));
    EXPECT_EQ(f.expected_pg, 6);
    EXPECT_EQ(volume(f.spec).volume, Rational(25, 3));
    EXPECT_EQ(f.spec.lattice.canonical_square(), Rational(8));
}

TEST(Catalog, AmbientCanonicalSquares) {
    EXPECT_EQ(build("5.2", {{"N", 4}}).spec.lattice.canonical_square(), Rational(-1));
    EXPECT_EQ(build("6.1a").spec.lattice.canonical_square(), Rational(0));
    EXPECT_EQ(build("6.1b", {{"n", 3}}).spec.lattice.canonical_square(), Rational(-1));
    EXPECT_EQ(build("6.1c0", {{"n", 3}}).spec.lattice.canonical_square(), Rational(0));
    EXPECT_EQ(build("6.1c2", {{"n", 5}}).spec.lattice.canonical_square(), Rational(-1));
    for (long N = 3; N <= 9; ++N) {
        auto s = build("5.1", {{"d", 0}, {"N", N % 2 == 1 ? N : N + 1}});
        EXPECT_EQ(s.spec.lattice.canonical_square(), Rational(2 * s.params.at("N") - 2));
    }
}

TEST(Catalog, Errors) {
    EXPECT_THROW(build("9.9"), UnknownScenario);
    EXPECT_THROW(build("6.1b", {{"n", 0}}), ParamOutOfRange);
    EXPECT_THROW(build("6.1c2", {{"n", 3}}), ParamOutOfRange);
    EXPECT_THROW(build("5.1", {{"d", 2}, {"N", 4}}), ParamOutOfRange);
    EXPECT_THROW(build("6.1a", {{"n", 4}}), ParamOutOfRange);
    EXPECT_THROW(build("6.1b", {{"q", 4}}), ParamOutOfRange);
}

TEST(Catalog, VolumesAndPatternsOverParameterGrid) {
    std::size_t built = 0;
    for (const auto& name : scenario_names()) {
        for (const auto& p : parameter_grid(name, 20)) {
            Scenario s = build(name, p);
            ++built;
            auto r = volume(s.spec);
            EXPECT_EQ(r.volume, s.expected_volume) << name;
            EXPECT_GT(r.volume, Rational(0)) << name;
            EXPECT_NO_THROW(s.spec.lattice.check_adjunction());
            for (const auto& [label, a] : s.expected_discrepancy) EXPECT_EQ(r.profile.at(label), a) << name << " " << label;
            auto comps = classified_components(s);
            for (const auto& exp : s.expected_singularities) {
                std::set<std::string> ids(exp.curves.begin(), exp.curves.end());
                ASSERT_EQ(comps.count(ids), 1u) << name;
                EXPECT_EQ(comps[ids].tag, exp.tag) << name;
                if (!exp.label.empty()) EXPECT_EQ(comps[ids].label, exp.label) << name;
            }
        }
    }
    EXPECT_GT(built, 60u);
}

TEST(Catalog, ElevenBHasEllipticAndOneThirdComponents) {
    for (long n = 1; n <= 20; ++n) {
        auto s = build("6.1b", {{"n", n}});
        auto r = volume(s.spec);
        EXPECT_EQ(r.profile.at("Zbar"), Rational(-1));
        EXPECT_EQ(r.profile.at("C0bar"), Rational(-1, 3));
        ASSERT_EQ(r.profile.components.size(), 2u);
        EXPECT_EQ(r.volume, Rational(n) + Rational(1, 3));
    }
}

TEST(Catalog, CrossModuleFormulas) {
    for (long n = 4; n <= 20; ++n) {
        EXPECT_EQ(volume(build("6.1c2", {{"n", n}}).spec).volume, V(n, 1)) << n;
        Rational c1 = volume(build("6.1c1", {{"n", n}}).spec).volume;
        Rational c2 = volume(build("6.1c2", {{"n", n}}).spec).volume;
        EXPECT_EQ(w2(n), min(c1, c2)) << n;
    }
    for (long n = 1; n <= 20; ++n) {
        EXPECT_EQ(volume(build("6.1c0", {{"n", n}}).spec).volume, w1(n)) << n;
        EXPECT_EQ(volume(build("6.1c0-fiber", {{"n", n}}).spec).volume, w1(n)) << n;
        EXPECT_EQ(volume(build("6.1c1", {{"n", n}}).spec).volume, w2_first(n)) << n;
    }
}

TEST(Catalog, SectionBlowupBelowRange) {
    // below n = 4 the section blowup still has the formula volume but fails positivity on the exceptional curve
    for (long n = 1; n <= 3; ++n) {
        auto spec = section_blowup_spec(n);
        EXPECT_EQ(volume(spec).volume, w2_second(n)) << n;
        EXPECT_FALSE(stability_necessary_checks(spec).passed()) << n;
    }
    for (long n = 4; n <= 20; ++n) EXPECT_TRUE(stability_necessary_checks(section_blowup_spec(n)).passed()) << n;
}

TEST(Catalog, JacobianSurface) {
    auto j = jacobian_surface(4, 0, true);
    EXPECT_EQ(j.pair("Z", "Z"), Rational(-6));
    EXPECT_EQ(j.canonical_square(), Rational(0));
    EXPECT_NO_THROW(j.check_adjunction());
    auto k = jacobian_surface(3, 1, false);
    EXPECT_EQ(k.pair("Z", "Z"), Rational(-3));
    EXPECT_NO_THROW(k.check_adjunction());
}

TEST(Catalog, ContractedGraphNeedsIntegralPairings) {
    auto s = build("6.1a");
    DualGraph g = contracted_graph(s.spec);
    EXPECT_EQ(g.size(), 2u);
    EXPECT_FALSE(g.is_connected());
    auto c1 = build("6.1c1", {{"n", 3}});
    DualGraph h = contracted_graph(c1.spec);
    EXPECT_TRUE(h.is_connected());
    EXPECT_EQ(classify(h).label, "1/9(1,2)");
}

TEST(Table1, Rows) {
    auto rows = table1_rows(12);
    ASSERT_GE(rows.size(), 4u + 10u);
    for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.branch;
    EXPECT_EQ(rows[0].branch, "6D0+12G");
    EXPECT_EQ(rows[0].value, Rational(0));
    auto s3 = std::find_if(rows.begin(), rows.end(), [](const Table1Row& r) { return r.branch == "6D0+16G"; });
    ASSERT_NE(s3, rows.end());
    EXPECT_EQ(s3->value, Rational(1));
    auto s4 = std::find_if(rows.begin(), rows.end(), [](const Table1Row& r) { return r.branch == "6D0+20G"; });
    ASSERT_NE(s4, rows.end());
    EXPECT_EQ(s4->value, Rational(0));
    for (long N = 3; N <= 12; ++N) {
        std::string b = "4D0+" + std::to_string(4 * N) + "G";
        auto it = std::find_if(rows.begin(), rows.end(), [&](const Table1Row& r) { return r.branch == b; });
        ASSERT_NE(it, rows.end());
        EXPECT_EQ(it->value, Rational(4));
    }
}

TEST(Table1, Deductions) {
    auto claims = table1_verify(12);
    EXPECT_EQ(claims.back().witness, "3,4,5");
    EXPECT_EQ(claims[claims.size() - 2].witness, "3");
    for (const auto& c : claims) EXPECT_TRUE(c.pass);
    EXPECT_NO_THROW(table1_verify(30));
}

TEST(Menu, Examples) {
    auto m2 = minimal_degree_menu(2);
    ASSERT_EQ(m2.size(), 1u);
    EXPECT_EQ(m2[0].surface, "P2");
    EXPECT_EQ(m2[0].canonical_square, Rational(2));

    auto m3 = minimal_degree_menu(3);
    EXPECT_EQ(surfaces(m3), (std::vector<std::string>{"Sigma_0", "Cone"}));

    auto m5 = minimal_degree_menu(5);
    EXPECT_EQ(surfaces(m5), (std::vector<std::string>{"Veronese", "Sigma_0", "Sigma_2", "Cone"}));
    for (const auto& e : m5) EXPECT_EQ(e.canonical_square, Rational(8));
    EXPECT_THROW(minimal_degree_menu(1), ParamOutOfRange);
}

TEST(Menu, ParityRule) {
    for (long N = 3; N <= 20; ++N) {
        for (const auto& e : minimal_degree_menu(N)) {
            EXPECT_EQ(e.canonical_square, Rational(2 * N - 2));
            if (e.surface.rfind("Sigma_", 0) == 0) {
                EXPECT_GE(N - e.d - 3, 0);
                EXPECT_EQ((N - e.d - 3) % 2, 0);
            }
        }
    }
}

TEST(Moduli, Examples) {
    EXPECT_EQ(moduli_count(3), 37);
    EXPECT_EQ(moduli_count(5), 55);
    EXPECT_EQ(moduli_count(10), 100);
    for (long N = 3; N <= 40; ++N) EXPECT_EQ(moduli_count(N), 9 * (N + 1) + 1);
    EXPECT_THROW(moduli_count(2), ParamOutOfRange);
}

TEST(BranchMenu, Cases) {
    auto menu = theorem54_branch_menu();
    ASSERT_EQ(menu.size(), 4u);
    EXPECT_EQ(menu[0].letter, 'a');
    EXPECT_EQ(menu[0].surface, "P2");
    EXPECT_EQ(menu[0].image, "line");
    EXPECT_EQ(menu[0].branch, "8l");
    for (const auto& c : menu) {
        EXPECT_EQ(c.e_dot_k, Rational(1)) << c.letter;
        EXPECT_EQ(c.e_square, Rational(-3)) << c.letter;
    }
    auto c = branch_case('c', 2, 5);
    EXPECT_EQ(c.branch, "6D0+14G");
    auto b = branch_case('b', 1, 4);
    EXPECT_EQ(b.branch, "6D0+10G");
    EXPECT_THROW(branch_case('c', 2, 6), ParamOutOfRange);
    EXPECT_THROW(branch_case('z', 0, 0), ParamOutOfRange);
    for (long d = 0; d <= 6; ++d) {
        auto cd = branch_case('c', d, d + 3);
        EXPECT_EQ(cd.e_dot_k, Rational(1));
        EXPECT_EQ(cd.e_square, Rational(-3));
    }
}
