#include "ksba/corpus.hpp"
#include "ksba/discrepancy.hpp"
#include "ksba/errors.hpp"
#include "ksba/graph.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

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

}  // namespace

TEST(DualGraph, RejectsInvalidInput) {
    DualGraph g;
    g.add_curve("A", -2);
    EXPECT_THROW(g.add_curve("A", -3), DuplicateId);
    EXPECT_THROW(g.add_curve("", -3), InvalidGraph);
    EXPECT_THROW(g.add_curve("B", -3, -1), InvalidGraph);
    g.add_curve("B", -3);
    EXPECT_THROW(g.add_edge("A", "A"), InvalidGraph);
    EXPECT_THROW(g.add_edge("A", "Z"), UnknownId);
    EXPECT_THROW(g.add_edge("A", "B", 0), InvalidGraph);
    g.add_edge("A", "B");
    EXPECT_THROW(g.add_edge("B", "A"), InvalidGraph);
}

TEST(DualGraph, IntersectionMatrixExamples) {
    EXPECT_EQ(intersection_matrix(make_chain({-2, -2})), SymMatrix::from_rows({{-2, 1}, {1, -2}}));
    EXPECT_EQ(intersection_matrix(make_chain({-3})), SymMatrix::from_rows({{-3}}));
    EXPECT_EQ(intersection_matrix(cycle_of({-2, -2, -2})), SymMatrix::from_rows({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));
}

TEST(DualGraph, ComponentsAndInduced) {
    DualGraph g = make_chain({-2, -3});
    g.add_curve("X", -4);
    EXPECT_FALSE(g.is_connected());
    auto comps = g.components();
    ASSERT_EQ(comps.size(), 2u);
    DualGraph sub = g.induced(comps[0]);
    EXPECT_EQ(sub.size(), 2u);
    EXPECT_EQ(sub.multiplicity(0, 1), 1);
    EXPECT_EQ(g.valence(0), 1);
}

TEST(Shape, Examples) {
    EXPECT_EQ(shape(make_chain({-2, -3, -2, -5})).kind, ShapeKind::String);
    EXPECT_EQ(shape(cycle_of({-2, -3, -2, -2, -4})).kind, ShapeKind::Cycle);
    DualGraph fork;
    fork.add_curve("c", -2);
    for (const char* leg : {"a", "b", "d"}) {
        fork.add_curve(leg, -2);
        fork.add_edge("c", leg);
    }
    auto d = shape(fork);
    EXPECT_EQ(d.kind, ShapeKind::SingleFork);
    EXPECT_EQ(d.centers, std::vector<std::size_t>{0});
    EXPECT_EQ(d.branches.size(), 3u);

    DualGraph two;
    two.add_curve("x", -3);
    two.add_curve("y", -3);
    two.add_edge("x", "y", 2);
    EXPECT_EQ(shape(two).kind, ShapeKind::Cycle);
}

TEST(Shape, StringPathIsEndToEnd) {
    DualGraph g;
    g.add_curve("m", -3);
    g.add_curve("a", -2);
    g.add_curve("z", -4);
    g.add_edge("m", "a");
    g.add_edge("m", "z");
    auto d = shape(g);
    ASSERT_EQ(d.path.size(), 3u);
    EXPECT_EQ(d.path[1], 0u);
    EXPECT_EQ(weights_of(g, d.path).size(), 3u);
}

TEST(Shape, DoubleForkAndStar) {
    DualGraph g;
    for (const char* id : {"f1", "f2", "a", "b", "c", "d"}) g.add_curve(id, -2);
    g.add_edge("f1", "f2");
    g.add_edge("f1", "a");
    g.add_edge("f1", "b");
    g.add_edge("f2", "c");
    g.add_edge("f2", "d");
    auto d = shape(g);
    EXPECT_EQ(d.kind, ShapeKind::DoubleFork);
    EXPECT_EQ(d.path.size(), 2u);
    EXPECT_EQ(d.branches.size(), 4u);

    DualGraph star;
    star.add_curve("c", -3);
    for (const char* id : {"a", "b", "x", "y"}) {
        star.add_curve(id, -2);
        star.add_edge("c", id);
    }
    auto s = shape(star);
    EXPECT_EQ(s.kind, ShapeKind::DoubleFork);
    ASSERT_EQ(s.centers.size(), 2u);
    EXPECT_EQ(s.centers[0], s.centers[1]);
}

TEST(Shape, OtherAndErrors) {
    DualGraph g = cycle_of({-3, -3, -3});
    g.add_curve("t", -2);
    g.add_edge("C0", "t");
    EXPECT_EQ(shape(g).kind, ShapeKind::Other);
    EXPECT_THROW(shape(DualGraph{}), InvalidGraph);
    DualGraph two;
    two.add_curve("a", -2);
    two.add_curve("b", -2);
    EXPECT_THROW(shape(two), Disconnected);
}

TEST(Shape, SignatureInvariantUnderRelabelling) {
    std::mt19937 rng(3);
    for (const auto& ng : taxonomy_corpus()) {
        const auto sig = shape(ng.graph).signature(ng.graph);
        for (int t = 0; t < 5; ++t) {
            DualGraph p = permuted(ng.graph, random_perm(ng.graph.size(), rng));
            EXPECT_EQ(shape(p).signature(p), sig) << ng.name;
            EXPECT_EQ(shape(p).kind, shape(ng.graph).kind) << ng.name;
        }
    }
}

TEST(Shape, SignatureSeparatesDifferentWeights) {
    EXPECT_NE(shape(make_chain({-2, -3})).signature(make_chain({-2, -3})),
              shape(make_chain({-2, -4})).signature(make_chain({-2, -4})));
    EXPECT_EQ(shape(make_chain({-2, -3})).signature(make_chain({-2, -3})),
              shape(make_chain({-3, -2})).signature(make_chain({-3, -2})));
}

TEST(GraphJson, ParseExamples) {
    DualGraph g = parse_graph(R"({"curves":[{"id":"E0","self":-3,"genus":0}],"edges":[]})");
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.vertex(0).self_intersection, -3);

    // Figure chain with l = 2: (-2), (-3) and a pendant (-2)
    DualGraph f = parse_graph(R"({"curves":[{"id":"E1","self":-2},{"id":"E2","self":-3},{"id":"E3","self":-2}],
                                 "edges":[["E1","E2"],["E2","E3",1]]})");
    EXPECT_EQ(shape(f).kind, ShapeKind::String);
    EXPECT_EQ(discrepancies(f).at("E2"), Rational(-1, 2));

    DualGraph m = parse_graph(R"({"curves":[{"id":"a","self":-3},{"id":"b","self":-3}],"edges":[["a","b",2]]})");
    EXPECT_EQ(m.multiplicity(0, 1), 2);
}

TEST(GraphJson, GenusDefaultsToZero) {
    DualGraph g = parse_graph(R"({"curves":[{"id":"E","self":-2}]})");
    EXPECT_EQ(g.vertex(0).genus, 0);
}

TEST(GraphJson, Errors) {
    EXPECT_THROW(parse_graph(R"({"curves":[{"id":"E0","self":-3}],"edges":[["E0","E9"]]})"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"curves":[{"id":"E0","self":-3},{"id":"E0","self":-2}]})"), DuplicateId);
    EXPECT_THROW(parse_graph(R"({"curves":[{"id":"E0"}]})"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"curves":[{"id":"E0","self":"x"}]})"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"curves":[{"id":"E0","self":-2,"colour":1}]})"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"curves":[],"extra":1})"), SchemaError);
    EXPECT_THROW(parse_graph(R"({"curves":[{"id":"a","self":-2}],"edges":[["a","a"]]})"), SchemaError);
    try {
        parse_graph("{\n  \"curves\": [\n    {\"id\": \"E0\" \"self\": -3}\n  ]\n}");
        FAIL() << "expected a parse error";
    } catch (const SchemaError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    try {
        parse_graph(R"({"curves":[{"id":"a","self":-2},{"id":"b","self":-2.5}]})");
        FAIL() << "expected a schema error";
    } catch (const SchemaError& e) {
        EXPECT_NE(std::string(e.what()).find("curves[1].self"), std::string::npos) << e.what();
    }
    EXPECT_THROW(load_graph("/nonexistent/graph.json"), SchemaError);
}

TEST(GraphJson, RoundTripOnCorpus) {
    auto corpus = taxonomy_corpus();
    ASSERT_GE(corpus.size(), 50u);
    for (std::size_t i = 0; i < 50; ++i) {
        const auto& g = corpus[i].graph;
        std::string text = serialize_graph(g);
        DualGraph back = parse_graph(text);
        EXPECT_EQ(back, g) << corpus[i].name;
        EXPECT_EQ(serialize_graph(back), text) << corpus[i].name;
    }
}

TEST(GraphJson, FileOrderFixesMatrixOrder) {
    DualGraph g = parse_graph(R"({"curves":[{"id":"z","self":-5},{"id":"a","self":-2}],"edges":[["a","z"]]})");
    auto m = intersection_matrix(g);
    EXPECT_EQ(m(0, 0), Rational(-5));
    EXPECT_EQ(m(1, 1), Rational(-2));
}

TEST(GraphJson, MatrixSymmetricOnEnumeratedGraphs) {
    for (const auto& g : small_weighted_graphs(4, -3)) {
        auto m = intersection_matrix(g);
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) ASSERT_EQ(m(i, j), m(j, i));
        }
    }
}
