#include "ksba/classify.hpp"

#include "ksba/discrepancy.hpp"
#include "ksba/errors.hpp"

#include <algorithm>
#include <map>

namespace ksba {

const char* to_string(SingularityTag t) {
    switch (t) {
        case SingularityTag::Smooth: return "Smooth";
        case SingularityTag::ADE: return "ADE";
        case SingularityTag::CyclicQuotient: return "CyclicQuotient";
        case SingularityTag::DihedralQuotient: return "DihedralQuotient";
        case SingularityTag::Tetrahedral: return "Tetrahedral";
        case SingularityTag::Octahedral: return "Octahedral";
        case SingularityTag::Icosahedral: return "Icosahedral";
        case SingularityTag::SimpleElliptic: return "SimpleElliptic";
        case SingularityTag::Cusp: return "Cusp";
        case SingularityTag::Z2QuotientOfCuspOrElliptic: return "Z2QuotientOfCuspOrElliptic";
        case SingularityTag::Z3Quotient: return "Z3Quotient";
        case SingularityTag::Z4Quotient: return "Z4Quotient";
        case SingularityTag::Z6Quotient: return "Z6Quotient";
        case SingularityTag::EllipticGorenstein: return "EllipticGorenstein";
        case SingularityTag::NotInTaxonomy: return "NotInTaxonomy";
    }
    return "NotInTaxonomy";
}

bool SingularityType::log_canonical() const { return tag != SingularityTag::NotInTaxonomy; }

bool SingularityType::log_terminal() const {
    switch (tag) {
        case SingularityTag::Smooth:
        case SingularityTag::ADE:
        case SingularityTag::CyclicQuotient:
        case SingularityTag::DihedralQuotient:
        case SingularityTag::Tetrahedral:
        case SingularityTag::Octahedral:
        case SingularityTag::Icosahedral:
            return true;
        default:
            return false;
    }
}

bool SingularityType::elliptic_gorenstein() const {
    return tag == SingularityTag::SimpleElliptic || tag == SingularityTag::Cusp ||
           tag == SingularityTag::EllipticGorenstein;
}

std::string SingularityType::describe() const {
    std::string s = to_string(tag);
    if (!label.empty()) s += " " + label;
    if (!branch_dets.empty()) {
        s += " branches(";
        for (std::size_t i = 0; i < branch_dets.size(); ++i) s += (i ? "," : "") + std::to_string(branch_dets[i]);
        s += ")";
    }
    if (degree) s += " degree " + std::to_string(*degree);
    if (!note.empty()) s += " [" + note + "]";
    return s;
}

namespace {

SingularityType make(SingularityTag t, std::string label = {}) {
    SingularityType s;
    s.tag = t;
    s.label = std::move(label);
    return s;
}

SingularityType outside(std::string note) {
    SingularityType s;
    s.note = std::move(note);
    return s;
}

bool all_two(const std::vector<std::int64_t>& w) {
    return std::all_of(w.begin(), w.end(), [](std::int64_t c) { return c == 2; });
}

SingularityType classify_string(const DualGraph& g, const ShapeDescriptor& d) {
    auto w = weights_of(g, d.path);
    if (all_two(w)) return make(SingularityTag::ADE, "A" + std::to_string(w.size()));
    std::int64_t n = branch_determinant(w);
    // reading the chain from the other end gives the inverse of q mod n; report the smaller
    std::int64_t q = 1;
    if (w.size() > 1) {
        q = std::min(branch_determinant(std::vector<std::int64_t>(w.begin() + 1, w.end())),
                     branch_determinant(std::vector<std::int64_t>(w.begin(), w.end() - 1)));
    }
    auto s = make(SingularityTag::CyclicQuotient, "1/" + std::to_string(n) + "(1," + std::to_string(q) + ")");
    s.branch_dets = {n};
    return s;
}

SingularityType classify_fork(const DualGraph& g, const ShapeDescriptor& d) {
    std::vector<std::vector<std::int64_t>> legs;
    for (const auto& b : d.branches) legs.push_back(weights_of(g, b));
    std::vector<std::int64_t> dets;
    for (const auto& l : legs) dets.push_back(branch_determinant(l));
    std::sort(dets.begin(), dets.end());

    bool minus_two = all_two(weights_of(g, d.centers));
    for (const auto& l : legs) minus_two = minus_two && all_two(l);

    int single_twos = 0;
    for (const auto& l : legs) single_twos += (l.size() == 1 && l[0] == 2) ? 1 : 0;
    if (single_twos >= 2) {
        if (minus_two) return make(SingularityTag::ADE, "D" + std::to_string(g.size()));
        auto s = make(SingularityTag::DihedralQuotient);
        s.branch_dets = dets;
        return s;
    }

    static const std::map<std::vector<std::int64_t>, SingularityTag> table{
        {{2, 3, 3}, SingularityTag::Tetrahedral}, {{2, 3, 4}, SingularityTag::Octahedral},
        {{2, 3, 5}, SingularityTag::Icosahedral}, {{3, 3, 3}, SingularityTag::Z3Quotient},
        {{2, 4, 4}, SingularityTag::Z4Quotient},  {{2, 3, 6}, SingularityTag::Z6Quotient},
    };
    auto it = table.find(dets);
    if (it == table.end()) {
        auto s = outside("fork with branch determinants outside the lc list");
        s.branch_dets = dets;
        return s;
    }
    if (minus_two && it->second != SingularityTag::Z3Quotient && it->second != SingularityTag::Z4Quotient &&
        it->second != SingularityTag::Z6Quotient) {
        return make(SingularityTag::ADE, "E" + std::to_string(g.size()));
    }
    auto s = make(it->second);
    s.branch_dets = dets;
    return s;
}

SingularityType classify_double_fork(const DualGraph& g, const ShapeDescriptor& d) {
    for (const auto& b : d.branches) {
        auto w = weights_of(g, b);
        if (w.size() != 1 || w[0] != 2) return outside("double fork with a leg other than a single (-2)-curve");
    }
    auto core = weights_of(g, d.path);
    if (!std::all_of(core.begin(), core.end(), [](std::int64_t c) { return c >= 2; })) {
        return outside("double fork core weight below 2");
    }
    return make(SingularityTag::Z2QuotientOfCuspOrElliptic);
}

}  // namespace

SingularityType classify(const DualGraph& g) {
    if (g.empty()) throw InvalidGraph("empty graph");
    if (!g.is_connected()) throw Disconnected("graph has " + std::to_string(g.components().size()) + " components");

    if (g.size() == 1 && g.vertex(0).genus == 1) {
        int self = g.vertex(0).self_intersection;
        if (self > -1) return outside("elliptic curve with non-negative self-intersection");
        auto s = make(SingularityTag::SimpleElliptic);
        s.degree = -self;
        return s;
    }
    for (const auto& v : g.vertices()) {
        if (v.genus != 0) throw NonRationalVertexOutsideEllipticCase("curve " + v.id + " has genus " + std::to_string(v.genus));
    }
    if (g.size() == 1 && g.vertex(0).self_intersection == -1) return make(SingularityTag::Smooth);
    for (const auto& v : g.vertices()) {
        if (v.self_intersection > -2) return outside("not minimal: curve " + v.id + " has self-intersection >= -1");
    }
    if (!is_negative_definite(intersection_matrix(g))) return outside("intersection matrix not negative definite");

    ShapeDescriptor d = shape(g);
    switch (d.kind) {
        case ShapeKind::Cycle: {
            auto w = weights_of(g, d.path);
            std::int64_t deg = 0;
            for (auto c : w) deg += c - 2;
            if (deg <= 0) return outside("cycle of (-2)-curves");
            auto s = make(SingularityTag::Cusp);
            s.degree = deg;
            return s;
        }
        case ShapeKind::String: return classify_string(g, d);
        case ShapeKind::SingleFork: return classify_fork(g, d);
        case ShapeKind::DoubleFork: return classify_double_fork(g, d);
        case ShapeKind::Other: break;
    }
    return outside("shape outside the lc list");
}

bool is_lc(const DualGraph& g) {
    if (!is_negative_definite(intersection_matrix(g))) throw NotContractible("intersection matrix not negative definite");
    return discrepancies(g).log_canonical();
}

SingularityType branch_curve_singularity_kind(BranchPointKind kind) {
    switch (kind) {
        case BranchPointKind::Simple: return make(SingularityTag::ADE);
        case BranchPointKind::Triple33: {
            auto s = make(SingularityTag::EllipticGorenstein);
            s.degree = 1;
            return s;
        }
        case BranchPointKind::Quadruple: {
            auto s = make(SingularityTag::EllipticGorenstein);
            s.degree = 2;
            return s;
        }
    }
    return make(SingularityTag::NotInTaxonomy);
}

}  // namespace ksba
