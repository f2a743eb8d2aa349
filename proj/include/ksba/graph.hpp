#pragma once

#include "ksba/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ksba {

struct CurveVertex {
    std::string id;
    int self_intersection = 0;
    int genus = 0;

    friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

/// Weighted dual graph of a configuration of exceptional curves.
/// Vertex order is insertion order and fixes the row order of the intersection matrix.
class DualGraph {
public:
    std::size_t add_curve(const std::string& id, int self_intersection, int genus = 0);
    void add_edge(const std::string& a, const std::string& b, int multiplicity = 1);

    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] bool empty() const { return vertices_.empty(); }
    [[nodiscard]] const CurveVertex& vertex(std::size_t i) const { return vertices_.at(i); }
    [[nodiscard]] const std::vector<CurveVertex>& vertices() const { return vertices_; }
    [[nodiscard]] std::optional<std::size_t> find(const std::string& id) const;
    [[nodiscard]] std::size_t index_of(const std::string& id) const;

    /// Edges keyed by (i, j) with i < j.
    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, int>& edges() const { return edges_; }
    [[nodiscard]] int multiplicity(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t i) const;
    /// Degree counted with edge multiplicity.
    [[nodiscard]] int valence(std::size_t i) const;

    [[nodiscard]] std::vector<std::vector<std::size_t>> components() const;
    [[nodiscard]] bool is_connected() const;
    [[nodiscard]] DualGraph induced(const std::vector<std::size_t>& idx) const;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;

private:
    std::vector<CurveVertex> vertices_;
    std::map<std::string, std::size_t> index_;
    std::map<std::pair<std::size_t, std::size_t>, int> edges_;
};

/// M[i][i] = self-intersection, M[i][j] = edge multiplicity.
SymMatrix intersection_matrix(const DualGraph& g);

enum class ShapeKind { String, Cycle, SingleFork, DoubleFork, Other };

const char* to_string(ShapeKind k);

/// Combinatorial shape. Weights are the positive numbers -E^2.
///  String:     `path` lists the chain end to end.
///  Cycle:      `path` lists the cycle in cyclic order.
///  SingleFork: `centers` = {fork}; `branches` are three chains read outward from the fork.
///  DoubleFork: `centers` = {f1, f2} (equal for the four-legged star); `path` is the core
///              from f1 to f2 inclusive; `branches` are the four legs, two per fork, f1's first.
struct ShapeDescriptor {
    ShapeKind kind = ShapeKind::Other;
    std::vector<std::size_t> centers;
    std::vector<std::size_t> path;
    std::vector<std::vector<std::size_t>> branches;

    /// Vertex-label-free summary, invariant under relabelling.
    [[nodiscard]] std::string signature(const DualGraph& g) const;
};

/// Throws Disconnected or InvalidGraph (empty).
ShapeDescriptor shape(const DualGraph& g);

/// Weights (−E²) along a vertex list.
std::vector<std::int64_t> weights_of(const DualGraph& g, const std::vector<std::size_t>& idx);

/// JSON: {"curves":[{"id":..,"self":..,"genus":..}],"edges":[[a,b,mult]]}.
DualGraph parse_graph(const std::string& text);
std::string serialize_graph(const DualGraph& g);
DualGraph load_graph(const std::string& path);

}  // namespace ksba
