#include "ksba/cycles.hpp"

#include "ksba/classify.hpp"
#include "ksba/discrepancy.hpp"
#include "ksba/errors.hpp"

namespace ksba {

std::int64_t Cycle::at(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) return coefficients[i];
    }
    throw UnknownId(id);
}

std::string Cycle::str() const {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += " + ";
        if (coefficients[i] != 1) s += std::to_string(coefficients[i]);
        s += ids[i];
    }
    return s;
}

std::vector<std::int64_t> intersections_with_curves(const DualGraph& g, const std::vector<std::int64_t>& z) {
    std::vector<std::int64_t> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = z[i] * g.vertex(i).self_intersection;
    for (const auto& [key, m] : g.edges()) {
        out[key.first] += m * z[key.second];
        out[key.second] += m * z[key.first];
    }
    return out;
}

std::int64_t self_intersection(const DualGraph& g, const std::vector<std::int64_t>& z) {
    auto ze = intersections_with_curves(g, z);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * ze[i];
    return s;
}

LauferTrace laufer(const DualGraph& g) {
    if (g.empty()) throw InvalidGraph("empty graph");
    if (!g.is_connected()) throw Disconnected("fundamental cycle needs a connected graph");
    if (!is_negative_definite(intersection_matrix(g))) throw NotContractible("intersection matrix not negative definite");

    LauferTrace t;
    std::vector<std::int64_t> z(g.size(), 1);
    auto ze = intersections_with_curves(g, z);
    for (;;) {
        std::size_t pick = g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (ze[i] > 0) {
                pick = i;
                break;
            }
        }
        if (pick == g.size()) break;
        ++z[pick];
        ++t.iterations;
        // Z·E_j changes by E_pick·E_j
        ze[pick] += g.vertex(pick).self_intersection;
        for (std::size_t w : g.neighbours(pick)) ze[w] += g.multiplicity(pick, w);
        if (t.iterations > 100000000) throw InternalError("Laufer iteration did not terminate");
    }
    for (const auto& v : g.vertices()) t.cycle.ids.push_back(v.id);
    t.cycle.coefficients = std::move(z);
    return t;
}

Cycle fundamental_cycle(const DualGraph& g) { return laufer(g).cycle; }

std::int64_t degree(const DualGraph& g, const Cycle& z) {
    if (z.coefficients.size() != g.size()) throw DimensionMismatch("cycle does not match graph");
    return -self_intersection(g, z.coefficients);
}

Cycle canonical_cycle(const DualGraph& g) {
    SingularityType t = classify(g);
    if (t.tag != SingularityTag::SimpleElliptic && t.tag != SingularityTag::Cusp) {
        throw NotEllipticGorenstein(t.describe());
    }
    DiscrepancyProfile p = discrepancies(g);
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        if (p.a[i] != Rational(-1)) throw InternalError("a(" + p.ids[i] + ") = " + p.a[i].str() + ", expected -1");
    }
    Cycle c;
    c.ids = p.ids;
    c.coefficients.assign(g.size(), 1);
    return c;
}

BaseLocusBound base_locus_lower_bound(BaseLocusKind kind) {
    switch (kind) {
        case BaseLocusKind::SmoothPoint:
            return {kind, true, false, "Z is the exceptional (-1)-curve of the blowup; m_x O_Y = O_Y(-Z); G >= Z"};
        case BaseLocusKind::ADE:
            return {kind, true, false, "Z has full exceptional support; m_x O_Y = O_Y(-Z); G >= Z"};
        case BaseLocusKind::EllipticDegreeAtLeast2:
            return {kind, true, false, "Z = Z_K, degree -Z^2 >= 2; m_x O_Y = O_Y(-Z); G >= Z"};
        case BaseLocusKind::EllipticDegree1:
            return {kind, true, true,
                    "Z = Z_K, degree 1; m_x O_Y = m_p O_Y(-Z) for a smooth point p on Z; G >= Z plus a base point on Z"};
    }
    return {kind, false, false, ""};
}

}  // namespace ksba
