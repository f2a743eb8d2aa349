#include "ksba/classify.hpp"
#include "ksba/corpus.hpp"
#include "ksba/cycles.hpp"
#include "ksba/discrepancy.hpp"
#include "ksba/errors.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <optional>

using namespace ksba;
using testing_helpers::permuted;
using testing_helpers::random_perm;

namespace {

DualGraph cycle_of(const std::vector<int>& selfs) {
    DualGraph g;
    for (std::size_t i = 0; i < selfs.size(); ++i) g.add_curve("C" + std::to_string(i), selfs[i]);
    for (std::size_t i = 0; i < selfs.size(); ++i) {
        g.add_edge("C" + std::to_string(i), "C" + std::to_string((i + 1) % selfs.size()));
    }
    return g;
}

DualGraph d4() {
    DualGraph g;
    g.add_curve("c", -2);
    for (const char* id : {"a", "b", "d"}) {
        g.add_curve(id, -2);
        g.add_edge("c", id);
    }
    return g;
}

// Z.E_i straight from the matrix entries, without the library helpers.
bool admissible(const DualGraph& g, const std::vector<std::int64_t>& z) {
    auto m = intersection_matrix(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < g.size(); ++j) s += m(i, j) * Rational(z[j]);
        if (s.sign() > 0) return false;
    }
    return true;
}

// Plain recursive enumeration of every vector in 1..bound; keeps the admissible minimal ones.
std::optional<std::vector<std::int64_t>> smallest_admissible(const DualGraph& g, int bound) {
    const std::size_t n = g.size();
    auto m = intersection_matrix(g);
    std::vector<std::int64_t> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = m(i, j).to_int64();
    }
    std::vector<std::int64_t> z(n, 1);
    std::optional<std::vector<std::int64_t>> best;
    std::vector<std::vector<std::int64_t>> found;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            for (std::size_t r = 0; r < n; ++r) {
                std::int64_t s = 0;
                for (std::size_t c = 0; c < n; ++c) s += e[r * n + c] * z[c];
                if (s > 0) return;
            }
            found.push_back(z);
            return;
        }
        for (int c = 1; c <= bound; ++c) {
            z[i] = c;
            self(self, i + 1);
        }
        z[i] = 1;
    };
    rec(rec, 0);
    if (found.empty()) return best;
    // the minimal cycle must sit below every admissible one
    for (const auto& cand : found) {
        bool below_all = true;
        for (const auto& other : found) {
            for (std::size_t i = 0; i < cand.size() && below_all; ++i) below_all = cand[i] <= other[i];
            if (!below_all) break;
        }
        if (below_all) return cand;
    }
    return best;
}

std::int64_t total_weight(const DualGraph& g) {
    std::int64_t s = 0;
    for (const auto& v : g.vertices()) s += std::llabs(v.self_intersection);
    return s;
}

}  // namespace

TEST(FundamentalCycle, Examples) {
    DualGraph one;
    one.add_curve("E", -2);
    EXPECT_EQ(fundamental_cycle(one).coefficients, std::vector<std::int64_t>{1});

    auto cusp = fundamental_cycle(cycle_of({-2, -2, -3}));
    EXPECT_EQ(cusp.coefficients, (std::vector<std::int64_t>{1, 1, 1}));

    auto z = fundamental_cycle(d4());
    EXPECT_EQ(z.at("c"), 2);
    EXPECT_EQ(z.at("a"), 1);
    EXPECT_EQ(z.at("b"), 1);
    EXPECT_EQ(z.at("d"), 1);
    EXPECT_EQ(z.str(), "2c + a + b + d");
    EXPECT_THROW((void)z.at("x"), UnknownId);
}

TEST(FundamentalCycle, D4AgainstBruteForceToSix) {
    auto ref = smallest_admissible(d4(), 6);
    ASSERT_TRUE(ref.has_value());
    EXPECT_EQ(fundamental_cycle(d4()).coefficients, *ref);
}

TEST(FundamentalCycle, AdeStrings) {
    for (int k = 1; k <= 12; ++k) {
        auto z = fundamental_cycle(make_chain(std::vector<int>(static_cast<std::size_t>(k), -2)));
        for (auto c : z.coefficients) EXPECT_EQ(c, 1);
    }
    // E8: highest root coefficients along the long arm
    DualGraph e8;
    e8.add_curve("c", -2);
    std::vector<std::string> arm = {"c", "p1", "p2", "p3", "p4"};
    for (std::size_t i = 1; i < arm.size(); ++i) {
        e8.add_curve(arm[i], -2);
        e8.add_edge(arm[i - 1], arm[i]);
    }
    e8.add_curve("q1", -2);
    e8.add_edge("c", "q1");
    e8.add_curve("r1", -2);
    e8.add_curve("r2", -2);
    e8.add_edge("c", "r1");
    e8.add_edge("r1", "r2");
    auto z = fundamental_cycle(e8);
    EXPECT_EQ(z.at("c"), 6);
    EXPECT_EQ(z.at("p4"), 2);
    EXPECT_EQ(z.at("q1"), 3);
    EXPECT_EQ(z.at("r2"), 2);
    EXPECT_EQ(degree(e8, z), 2);
}

TEST(FundamentalCycle, Errors) {
    EXPECT_THROW(fundamental_cycle(cycle_of({-2, -2, -2})), NotContractible);
    DualGraph two;
    two.add_curve("a", -2);
    two.add_curve("b", -2);
    EXPECT_THROW(fundamental_cycle(two), Disconnected);
    EXPECT_THROW(fundamental_cycle(DualGraph{}), InvalidGraph);
    DualGraph pos;
    pos.add_curve("a", 1);
    EXPECT_THROW(fundamental_cycle(pos), NotContractible);
}

TEST(Degree, Examples) {
    auto g = cycle_of({-2, -2, -3});
    EXPECT_EQ(degree(g, fundamental_cycle(g)), 1);
    auto h = cycle_of({-3, -3, -3});
    EXPECT_EQ(degree(h, fundamental_cycle(h)), 3);
    DualGraph e;
    e.add_curve("E", -2, 1);
    EXPECT_EQ(degree(e, fundamental_cycle(e)), 2);
    EXPECT_THROW(degree(e, Cycle{{"a", "b"}, {1, 1}}), DimensionMismatch);
}

TEST(CanonicalCycle, Examples) {
    auto g = cycle_of({-2, -2, -3});
    EXPECT_EQ(canonical_cycle(g), fundamental_cycle(g));
    DualGraph e;
    e.add_curve("E", -4, 1);
    EXPECT_EQ(canonical_cycle(e).coefficients, std::vector<std::int64_t>{1});
    EXPECT_THROW(canonical_cycle(make_chain({-2, -2})), NotEllipticGorenstein);
    EXPECT_THROW(canonical_cycle(make_chain({-3})), NotEllipticGorenstein);
}

TEST(CanonicalCycle, EqualsFundamentalCycleOnEllipticCorpus) {
    std::size_t seen = 0;
    for (const auto& ng : taxonomy_corpus()) {
        auto t = classify(ng.graph);
        if (t.tag != SingularityTag::SimpleElliptic && t.tag != SingularityTag::Cusp) continue;
        ++seen;
        auto z = fundamental_cycle(ng.graph);
        EXPECT_EQ(canonical_cycle(ng.graph), z) << ng.name;
        ASSERT_TRUE(t.degree.has_value()) << ng.name;
        EXPECT_EQ(degree(ng.graph, z), *t.degree) << ng.name;
        EXPECT_GE(degree(ng.graph, z), 1) << ng.name;
    }
    EXPECT_GE(seen, 10u);
}

TEST(FundamentalCycle, ContractAndIterationBoundOnCorpus) {
    for (const auto& ng : taxonomy_corpus()) {
        auto t = laufer(ng.graph);
        EXPECT_TRUE(admissible(ng.graph, t.cycle.coefficients)) << ng.name;
        for (auto c : t.cycle.coefficients) EXPECT_GE(c, 1) << ng.name;
        EXPECT_LT(static_cast<std::int64_t>(t.iterations), 10 * total_weight(ng.graph)) << ng.name;
        EXPECT_EQ(t.cycle.ids.size(), ng.graph.size());
    }
}

TEST(FundamentalCycle, IndependentOfVertexOrder) {
    std::mt19937 rng(23);
    for (const auto& ng : taxonomy_corpus()) {
        auto z = fundamental_cycle(ng.graph).coefficients;
        auto perm = random_perm(ng.graph.size(), rng);
        auto zp = fundamental_cycle(permuted(ng.graph, perm)).coefficients;
        for (std::size_t k = 0; k < perm.size(); ++k) EXPECT_EQ(zp[k], z[perm[k]]) << ng.name;
    }
}

// <= 4 vertices, weights >= -4: the recursive oracle covers the whole box 1..8.
TEST(FundamentalCycle, MinimalAgainstRecursiveOracle) {
    std::size_t checked = 0;
    for (const auto& g : small_weighted_graphs(4, -4)) {
        auto z = fundamental_cycle(g).coefficients;
        bool in_box = true;
        for (auto c : z) in_box = in_box && c <= 8;
        if (!in_box) continue;
        auto ref = smallest_admissible(g, 8);
        ASSERT_TRUE(ref.has_value());
        EXPECT_EQ(z, *ref) << serialize_graph(g);
        ++checked;
    }
    EXPECT_GT(checked, 100u);
}

// Five vertices through the library search, which the recursive oracle checks on the small cases.
TEST(FundamentalCycle, MinimalAgainstLibraryBruteForceFiveVertices) {
    std::size_t checked = 0;
    for (const auto& g : small_weighted_graphs(5, -4)) {
        if (g.size() != 5) continue;
        auto z = fundamental_cycle(g).coefficients;
        auto ref = brute_force_minimal_cycle(g, z);
        ASSERT_TRUE(ref.has_value());
        EXPECT_EQ(z, *ref);
        ++checked;
    }
    EXPECT_GT(checked, 1000u);
}

TEST(FundamentalCycle, LibraryBruteForceMatchesRecursiveOracle) {
    for (const auto& g : small_weighted_graphs(3, -4)) {
        EXPECT_EQ(brute_force_minimal_cycle(g, 6), smallest_admissible(g, 6)) << serialize_graph(g);
    }
}

TEST(BaseLocus, Lookup) {
    auto s = base_locus_lower_bound(BaseLocusKind::SmoothPoint);
    EXPECT_TRUE(s.ideal_contains_minus_z);
    EXPECT_FALSE(s.extra_base_point);
    EXPECT_NE(s.description.find("(-1)-curve"), std::string::npos);
    auto e2 = base_locus_lower_bound(BaseLocusKind::EllipticDegreeAtLeast2);
    EXPECT_NE(e2.description.find("O_Y(-Z)"), std::string::npos);
    EXPECT_FALSE(e2.extra_base_point);
    EXPECT_FALSE(base_locus_lower_bound(BaseLocusKind::ADE).extra_base_point);
    auto e1 = base_locus_lower_bound(BaseLocusKind::EllipticDegree1);
    EXPECT_TRUE(e1.extra_base_point);
    EXPECT_NE(e1.description.find("base point"), std::string::npos);
}
