#include "ksba/discrepancy.hpp"

#include "ksba/errors.hpp"

#include <algorithm>

namespace ksba {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::SmoothPointBlowdown: return "SmoothPointBlowdown";
        case Verdict::Canonical: return "Canonical";
        case Verdict::LogTerminal: return "LogTerminal";
        case Verdict::LcNotLt: return "LcNotLt";
        case Verdict::NotLc: return "NotLc";
    }
    return "NotLc";
}

const Rational& DiscrepancyProfile::at(const std::string& id) const {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw UnknownId(id);
    return a[static_cast<std::size_t>(it - ids.begin())];
}

Rational DiscrepancyProfile::minimum() const {
    if (a.empty()) return 0;
    return *std::min_element(a.begin(), a.end());
}

bool DiscrepancyProfile::log_canonical() const { return minimum() >= Rational(-1); }

namespace {

Verdict judge(const std::vector<Rational>& a, const std::vector<std::size_t>& members) {
    const Rational minus_one(-1);
    bool positive = false;
    bool all_zero = true;
    Rational lo = a[members.front()];
    for (std::size_t i : members) {
        lo = min(lo, a[i]);
        if (a[i].sign() > 0) positive = true;
        if (!a[i].is_zero()) all_zero = false;
    }
    if (lo < minus_one) return Verdict::NotLc;
    if (positive) return Verdict::SmoothPointBlowdown;
    if (lo == minus_one) return Verdict::LcNotLt;
    if (all_zero) return Verdict::Canonical;
    return Verdict::LogTerminal;
}

}  // namespace

DiscrepancyProfile solve_discrepancies(const SymMatrix& m, const std::vector<Rational>& k_dot_e,
                                       const std::vector<std::string>& ids) {
    if (ids.size() != m.size() || k_dot_e.size() != m.size()) throw DimensionMismatch("discrepancy system");
    DiscrepancyProfile p;
    p.ids = ids;
    p.a = solve(m, k_dot_e);
    if (m.apply(p.a) != k_dot_e) throw InternalError("(K - Σ a E)·E != 0 after solve");

    // connected components of the support graph
    std::vector<int> comp(m.size(), -1);
    for (std::size_t s = 0; s < m.size(); ++s) {
        if (comp[s] >= 0) continue;
        ComponentVerdict cv;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(p.components.size());
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            cv.members.push_back(v);
            for (std::size_t w = 0; w < m.size(); ++w) {
                if (w != v && comp[w] < 0 && !m(v, w).is_zero()) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
            }
        }
        std::sort(cv.members.begin(), cv.members.end());
        cv.verdict = judge(p.a, cv.members);
        p.components.push_back(std::move(cv));
    }
    return p;
}

DiscrepancyProfile discrepancies(const DualGraph& g) {
    std::vector<Rational> k(g.size());
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertex(i);
        k[i] = Rational(2L * v.genus - 2 - v.self_intersection);
        ids.push_back(v.id);
    }
    return solve_discrepancies(intersection_matrix(g), k, ids);
}

DualGraph make_chain(const std::vector<int>& selfs, const std::string& prefix) {
    DualGraph g;
    for (std::size_t i = 0; i < selfs.size(); ++i) g.add_curve(prefix + std::to_string(i + 1), selfs[i]);
    for (std::size_t i = 1; i < selfs.size(); ++i) {
        g.add_edge(prefix + std::to_string(i), prefix + std::to_string(i + 1));
    }
    return g;
}

DualGraph end_chain(int ell) {
    if (ell < 1) throw ParamOutOfRange("chain length must be positive");
    std::vector<int> selfs(static_cast<std::size_t>(ell - 1), -2);
    selfs.push_back(-3);
    return make_chain(selfs);
}

Rational end_chain_bound(int ell) { return -discrepancies(end_chain(ell)).a.front(); }

bool proportionality_check(const DualGraph& g) {
    if (g.empty()) throw NotAChain("empty graph");
    ShapeDescriptor s = shape(g);
    if (s.kind != ShapeKind::String) throw NotAChain(std::string("shape is ") + to_string(s.kind));
    for (std::size_t k = 0; k < s.path.size(); ++k) {
        const auto& v = g.vertex(s.path[k]);
        if (v.genus != 0) throw NotAChain("curve " + v.id + " is not rational");
        if (k > 0 && k + 1 < s.path.size() && v.self_intersection != -2) {
            throw NotAChain("inner curve " + v.id + " is not a (-2)-curve");
        }
    }
    DiscrepancyProfile p = discrepancies(g);
    auto holds = [&](std::vector<std::size_t> order) {
        const Rational& a1 = p.a[order.front()];
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (p.a[order[k]] != Rational(static_cast<long>(k + 1)) * a1) return false;
        }
        return true;
    };
    std::vector<std::size_t> rev(s.path.rbegin(), s.path.rend());
    return holds(s.path) || holds(rev);
}

}  // namespace ksba
