#include "ksba/scenarios.hpp"

#include "ksba/errors.hpp"

#include <algorithm>

namespace ksba {

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

DivisorClass C(const std::string& label, const Rational& c = 1) { return DivisorClass::of(label, c); }

std::vector<std::string> numbered(const std::string& prefix, long count) {
    std::vector<std::string> out;
    for (long i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// (1/2) f*X − (1/2) Σ A_i: reduced preimage of a branch component through the A₁ points.
DivisorClass half_preimage(const std::string& base, const std::vector<std::string>& a1) {
    DivisorClass d = C(base, R(1, 2));
    for (const auto& a : a1) d -= C(a, R(1, 2));
    return d;
}

long param(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw ParamOutOfRange("missing parameter " + key);
    return it->second;
}

Params merged(const std::string& name, const Params& given) {
    Params p = default_params(name);
    for (const auto& [k, v] : given) {
        if (p.count(k) == 0) throw ParamOutOfRange("scenario " + name + " takes no parameter " + k);
        p[k] = v;
    }
    return p;
}

bool hirzebruch_admissible(long d, long N) {
    return d >= 0 && N >= 3 && N - d - 3 >= 0 && (N - d - 3) % 2 == 0 && N >= 2 * d - 3;
}

// Σ_d double cover branched over a fibre Γ0 plus B0, six A₁ points resolved.
ContractionSpec fibre_branch_spec(long d, long N) {
    IntersectionLattice s = hirzebruch(static_cast<int>(d));
    s.add_class("G0", C("G"));
    IntersectionLattice x = double_cover(s, DivisorClass{{"D0", 3}, {"G", R(N + 3 + 3 * d, 2)}});
    auto a1 = numbered("A", 6);
    x = resolve_a1(x, a1);
    x.add_curve("Dbar", half_preimage("G0", a1), 0);
    x.flag_curve("G", 2);  // general fibre: double cover of P1 branched in 6 points
    return {x, {"Dbar"}};
}

// Σ_{N−1} double cover branched over Γ0 + B0 ∈ |4Δ₀+4NΓ|, four A₁ points resolved,
// then Z ∩ D blown up.
ContractionSpec cone_branch_spec(long N) {
    IntersectionLattice s = hirzebruch(static_cast<int>(N - 1));
    s.add_class("G0", C("G"));
    IntersectionLattice x = double_cover(s, DivisorClass{{"D0", 2}, {"G", 2 * N}});
    auto a1 = numbered("A", 4);
    x = resolve_a1(x, a1);
    x = blowup(x, "Ecal");
    x.add_curve("Zbar", strict_transform("D0", "Ecal", 1), 1);
    x.add_curve("Dbar", half_preimage("G0", a1) - C("Ecal"), 0);
    x.flag_curve("G", 1);  // general fibre: double cover of P1 branched in 4 points
    return {x, {"Zbar", "Dbar"}};
}

ContractionSpec genus2_fibration_spec() {
    IntersectionLattice s = hirzebruch(2);
    s.add_class("B1", DivisorClass{{"D0", 1}, {"G", 2}});
    IntersectionLattice x = double_cover(s, DivisorClass{{"D0", 3}, {"G", 5}});
    auto a1 = numbered("A", 8);  // over B1 ∩ B2, B2 ∈ |4Δ₀+8Γ|
    x = resolve_a1(x, a1);
    x.add_curve("E0", C("D0", R(1, 2)), 0);
    x.add_curve("E1", half_preimage("B1", a1), 0);
    x.flag_curve("G", 2);
    return {x, {"E0", "E1"}};
}

}  // namespace

IntersectionLattice jacobian_surface(long n, int base_genus, bool reducible_fibre) {
    const long chi = n + 2 - 2L * base_genus;
    IntersectionLattice lat;
    if (reducible_fibre) {
        lat = IntersectionLattice({"Z", "C0", "C1"}, SymMatrix::from_rows({{-chi, 1, 0}, {1, -2, 2}, {0, 2, -2}}));
        lat.add_class("F", C("C0") + C("C1"));
        lat.flag_curve("C0", 0);
        lat.flag_curve("C1", 0);
    } else {
        lat = IntersectionLattice({"Z", "F"}, SymMatrix::from_rows({{-chi, 1}, {1, 0}}));
    }
    lat.flag_curve("Z", base_genus);
    lat.flag_curve("F", 1);
    lat.add_class("K", C("F", R(n)));
    lat.set_canonical("K");
    return lat;
}

ContractionSpec section_blowup_spec(long n) {
    IntersectionLattice y = jacobian_surface(n, 0, true);
    IntersectionLattice x = blowup(y, "Ecal");
    x.unflag_curve("Z");
    x.unflag_curve("C0");
    x.add_curve("E0bar", strict_transform("Z", "Ecal", 1), 0);
    x.add_curve("C0bar", strict_transform("C0", "Ecal", 1), 0);
    return {x, {"E0bar", "C0bar"}};
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{"5.1", "5.2", "6.1a", "6.1b", "6.1c0", "6.1c0-fiber", "6.1c1", "6.1c2"};
    return names;
}

Params default_params(const std::string& name) {
    if (name == "5.1") return {{"d", 2}, {"N", 5}};
    if (name == "5.2") return {{"N", 3}};
    if (name == "6.1a") return {};
    if (name == "6.1b" || name == "6.1c0" || name == "6.1c0-fiber" || name == "6.1c1" || name == "6.1c2") {
        return {{"n", 4}};
    }
    throw UnknownScenario(name);
}

std::vector<Params> parameter_grid(const std::string& name, long limit) {
    std::vector<Params> grid;
    if (name == "5.1") {
        for (long N = 3; N <= limit; ++N) {
            for (long d = 0; d <= N; ++d) {
                if (hirzebruch_admissible(d, N)) grid.push_back({{"d", d}, {"N", N}});
            }
        }
    } else if (name == "5.2") {
        for (long N = 3; N <= limit; ++N) grid.push_back({{"N", N}});
    } else if (name == "6.1a") {
        grid.push_back({});
    } else {
        default_params(name);
        long lo = name == "6.1c2" ? 4 : 1;
        for (long n = lo; n <= limit; ++n) grid.push_back({{"n", n}});
    }
    return grid;
}

Scenario build(const std::string& name, const Params& given) {
    Scenario s;
    s.name = name;
    s.params = merged(name, given);
    const auto& p = s.params;

    if (name == "5.1") {
        long d = param(p, "d");
        long N = param(p, "N");
        if (!hirzebruch_admissible(d, N)) {
            throw ParamOutOfRange("need N >= 3, N-d-3 even and >= 0, N >= 2d-3 (d=" + std::to_string(d) +
                                  ", N=" + std::to_string(N) + ")");
        }
        s.title = "double cover of a Hirzebruch surface branched along a fibre plus a nodal curve";
        s.spec = fibre_branch_spec(d, N);
        s.expected_pg = N + 1;
        s.expected_volume = R(2 * s.expected_pg - 4) + R(1, 3);
        s.expected_discrepancy = {{"Dbar", R(-1, 3)}};
        s.expected_singularities = {{{"Dbar"}, SingularityTag::CyclicQuotient, "1/3(1,1)"}};
    } else if (name == "5.2") {
        long N = param(p, "N");
        if (N < 3) throw ParamOutOfRange("need N >= 3");
        s.title = "double cover of the cone resolution with an elliptic curve over the vertex";
        s.spec = cone_branch_spec(N);
        s.expected_pg = N + 1;
        s.expected_volume = R(2 * s.expected_pg - 4) + R(1, 3);
        s.expected_discrepancy = {{"Zbar", R(-1)}, {"Dbar", R(-1, 3)}};
        s.expected_singularities = {{{"Zbar"}, SingularityTag::SimpleElliptic, ""},
                                    {{"Dbar"}, SingularityTag::CyclicQuotient, "1/3(1,1)"}};
    } else if (name == "6.1a") {
        s.title = "genus 2 fibration with a (-1)-section and a (-3)-section";
        s.spec = genus2_fibration_spec();
        s.expected_pg = 2;
        s.expected_volume = R(1) + R(1, 3);
        s.expected_discrepancy = {{"E0", R(1)}, {"E1", R(-1, 3)}};
        s.expected_singularities = {{{"E0"}, SingularityTag::Smooth, ""},
                                    {{"E1"}, SingularityTag::CyclicQuotient, "1/3(1,1)"}};
    } else if (name == "6.1b") {
        long n = param(p, "n");
        if (n < 1) throw ParamOutOfRange("need n >= 1");
        s.title = "Jacobian elliptic surface over an elliptic curve, section and fibre component blown apart";
        IntersectionLattice y = jacobian_surface(n, 1, true);
        IntersectionLattice x = blowup(y, "Ecal");
        x.unflag_curve("Z");
        x.unflag_curve("C0");
        x.add_curve("Zbar", strict_transform("Z", "Ecal", 1), 1);
        x.add_curve("C0bar", strict_transform("C0", "Ecal", 1), 0);
        s.spec = {x, {"Zbar", "C0bar"}};
        s.expected_pg = n;
        s.expected_volume = R(n) + R(1, 3);
        s.expected_discrepancy = {{"Zbar", R(-1)}, {"C0bar", R(-1, 3)}};
        s.expected_singularities = {{{"Zbar"}, SingularityTag::SimpleElliptic, ""},
                                    {{"C0bar"}, SingularityTag::CyclicQuotient, "1/3(1,1)"}};
    } else if (name == "6.1c0" || name == "6.1c0-fiber") {
        long n = param(p, "n");
        if (n < 1) throw ParamOutOfRange("need n >= 1");
        bool fibre = name == "6.1c0-fiber";
        s.title = fibre ? "rational Jacobian surface, zero section and a disjoint (-2)-curve contracted"
                        : "rational Jacobian surface, zero section contracted";
        s.spec = {jacobian_surface(n, 0, fibre), {"Z"}};
        if (fibre) s.spec.contracted.push_back("C1");
        s.expected_pg = n + 1;
        s.expected_volume = w1(n);
        s.expected_discrepancy = {{"Z", R(-n, n + 2)}};
        s.expected_singularities = {{{"Z"}, SingularityTag::CyclicQuotient, "1/" + std::to_string(n + 2) + "(1,1)"}};
        if (fibre) {
            s.expected_discrepancy["C1"] = R(0);
            s.expected_singularities.push_back({{"C1"}, SingularityTag::ADE, "A1"});
        }
    } else if (name == "6.1c1") {
        long n = param(p, "n");
        if (n < 1) throw ParamOutOfRange("need n >= 1");
        s.title = "rational Jacobian surface, zero section and the adjacent fibre component contracted";
        s.spec = {jacobian_surface(n, 0, true), {"Z", "C0"}};
        s.expected_pg = n + 1;
        s.expected_volume = w2_first(n);
        s.expected_discrepancy = {{"Z", R(-2 * n, 2 * n + 3)}, {"C0", R(-n, 2 * n + 3)}};
        s.expected_singularities = {
            {{"Z", "C0"}, SingularityTag::CyclicQuotient, "1/" + std::to_string(2 * n + 3) + "(1,2)"}};
    } else if (name == "6.1c2") {
        long n = param(p, "n");
        if (n < 4) throw ParamOutOfRange("need n >= 4");
        s.title = "rational Jacobian surface blown up at section meets fibre component";
        s.spec = section_blowup_spec(n);
        s.expected_pg = n + 1;
        s.expected_volume = w2_second(n);
        s.expected_discrepancy = {{"E0bar", R(-(n + 1), n + 3)}, {"C0bar", R(-1, 3)}};
        s.expected_singularities = {
            {{"E0bar"}, SingularityTag::CyclicQuotient, "1/" + std::to_string(n + 3) + "(1,1)"},
            {{"C0bar"}, SingularityTag::CyclicQuotient, "1/3(1,1)"}};
    } else {
        throw UnknownScenario(name);
    }
    s.spec.lattice.check_adjunction();
    return s;
}

DualGraph contracted_graph(const ContractionSpec& spec) {
    const auto& lat = spec.lattice;
    DualGraph g;
    auto integral = [](const Rational& r, const std::string& what) {
        if (!r.is_integer()) throw NotContractible(what + " is not integral: " + r.str());
        return static_cast<int>(r.to_int64());
    };
    for (const auto& e : spec.contracted) {
        if (!lat.is_curve(e)) throw NotACurve(e);
        g.add_curve(e, integral(lat.pair(e, e), e + "^2"), lat.curves().at(e));
    }
    for (std::size_t i = 0; i < spec.contracted.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.contracted.size(); ++j) {
            const auto& a = spec.contracted[i];
            const auto& b = spec.contracted[j];
            int m = integral(lat.pair(a, b), a + "." + b);
            if (m < 0) throw NotContractible(a + "." + b + " is negative");
            if (m > 0) g.add_edge(a, b, m);
        }
    }
    return g;
}

std::vector<Table1Row> table1_rows(long n_max) {
    std::vector<Table1Row> rows;
    auto on = [](long N, const DivisorClass& b) { return hirzebruch(static_cast<int>(N - 1)).pair(b, C("D0")); };
    auto add = [&](long N, std::string branch, bool contains, std::string relation, const Rational& v,
                   const Rational& expected) {
        rows.push_back({N, std::move(branch), contains, std::move(relation), v, expected, v == expected});
    };
    add(3, "6D0+12G", false, "B.D0", on(3, DivisorClass{{"D0", 6}, {"G", 12}}), 0);
    add(3, "6D0+12G", true, "(B-D0).D0", on(3, DivisorClass{{"D0", 5}, {"G", 12}}), 2);
    add(4, "6D0+16G", true, "(B-D0).D0", on(4, DivisorClass{{"D0", 5}, {"G", 16}}), 1);
    add(5, "6D0+20G", true, "(B-D0).D0", on(5, DivisorClass{{"D0", 5}, {"G", 20}}), 0);
    for (long N = 3; N <= n_max; ++N) {
        add(N, "4D0+" + std::to_string(4 * N) + "G", false, "B.D0", on(N, DivisorClass{{"D0", 4}, {"G", 4 * N}}), 4);
    }
    return rows;
}

std::vector<Claim> table1_verify(long n_max) {
    std::vector<Claim> out;
    for (const auto& r : table1_rows(n_max)) {
        std::string what = "Sigma_" + std::to_string(r.N - 1) + " B=" + r.branch + ": " + r.relation + " = " + r.expected.str();
        if (!r.pass) throw ClaimFailed(what + " but got " + r.value.str());
        out.push_back({what, true, r.value.str()});
    }
    // B ∈ |6Δ₀+4NΓ|: Δ₀ ⊄ B forces Δ₀·B = 6 − 2N... ≥ 0, i.e. N = 3
    std::vector<long> not_contained;
    std::vector<long> contained;
    for (long N = 3; N <= n_max; ++N) {
        Rational db = hirzebruch(static_cast<int>(N - 1)).pair(DivisorClass{{"D0", 6}, {"G", 4 * N}}, C("D0"));
        if (db != Rational(-6 * (N - 1) + 4 * N)) throw ClaimFailed("D0.B formula at N=" + std::to_string(N));
        if (db.sign() >= 0) not_contained.push_back(N);
        Rational db0 = hirzebruch(static_cast<int>(N - 1)).pair(DivisorClass{{"D0", 5}, {"G", 4 * N}}, C("D0"));
        if (db0 != Rational(5 - N)) throw ClaimFailed("D0.B0 formula at N=" + std::to_string(N));
        if (db0.sign() >= 0) contained.push_back(N);
    }
    if (not_contained != std::vector<long>{3}) throw ClaimFailed("D0.B >= 0 does not single out N = 3");
    std::vector<long> expect{3, 4, 5};
    if (n_max < 5) expect.resize(static_cast<std::size_t>(std::max(0L, n_max - 2)));
    if (contained != expect) throw ClaimFailed("D0.B0 >= 0 does not give N in {3,4,5}");
    out.push_back({"D0.B = -6(N-1)+4N >= 0 only for N = 3", true, "3"});
    out.push_back({"D0.B0 = 5-N >= 0 only for N in {3,4,5}", true, "3,4,5"});
    return out;
}

std::vector<MenuEntry> minimal_degree_menu(long N) {
    if (N < 2) throw ParamOutOfRange("need N >= 2");
    std::vector<MenuEntry> out;
    if (N == 2) {
        auto x = double_cover(projective_plane(), C("l", 4));
        out.push_back({"P2", -1, "8l", x.canonical_square()});
    }
    if (N == 5) {
        auto x = double_cover(projective_plane(), C("l", 5));
        out.push_back({"Veronese", -1, "10l", x.canonical_square()});
    }
    if (N >= 3) {
        for (long d = 0; d <= N - 3; ++d) {
            if (!hirzebruch_admissible(d, N)) continue;
            auto x = double_cover(hirzebruch(static_cast<int>(d)), DivisorClass{{"D0", 3}, {"G", R(N + 3 + 3 * d, 2)}});
            out.push_back({"Sigma_" + std::to_string(d), d, "6D0+" + std::to_string(N + 3 + 3 * d) + "G",
                           x.canonical_square()});
        }
        // cone: Σ_{N−1} cover with the elliptic curve over the vertex contracted
        auto x = double_cover(hirzebruch(static_cast<int>(N - 1)), DivisorClass{{"D0", 2}, {"G", 2 * N}});
        x.flag_curve("D0", 1);
        Rational k2 = volume({x, {"D0"}}).volume;
        out.push_back({"Cone", N - 1, "4D0+" + std::to_string(4 * N) + "G", k2});
    }
    for (const auto& e : out) {
        if (e.canonical_square != Rational(2 * N - 2)) {
            throw InternalError(e.surface + ": K^2 = " + e.canonical_square.str() + ", expected 2N-2");
        }
    }
    return out;
}

long moduli_count(long N) {
    if (N < 3) throw ParamOutOfRange("need N >= 3");
    long dim_b = h0_hirzebruch(static_cast<int>(N - 1), 4, static_cast<int>(4 * N)) - 1;
    long aut = (N - 1) + 5;
    long m = dim_b - aut;
    if (m != 9 * N + 10) throw FormulaMismatch("moduli count " + std::to_string(m) + " at N=" + std::to_string(N));
    return m;
}

BranchCase branch_case(char letter, long d, long N) {
    BranchCase b;
    b.letter = letter;
    ContractionSpec spec;
    std::string e = "E";
    switch (letter) {
        case 'a': {
            b.surface = "P2";
            b.image = "line";
            b.branch = "8l";
            b.N = 2;
            IntersectionLattice s = projective_plane();
            s.add_class("l0", C("l"));
            auto x = double_cover(s, C("l", 4));
            auto a1 = numbered("A", 7);  // l0 ∩ B0, B0 ∈ |7l|
            x = resolve_a1(x, a1);
            x.add_curve(e, half_preimage("l0", a1), 0);
            spec = {x, {e}};
            break;
        }
        case 'b': {
            if (!hirzebruch_admissible(d, N)) throw ParamOutOfRange("case b needs N-d-3 even >= 0 and N >= 2d-3");
            b.surface = "Sigma_" + std::to_string(d);
            b.image = "fibre";
            b.branch = "6D0+" + std::to_string(N + 3 * d + 3) + "G";
            b.d = d;
            b.N = N;
            spec = fibre_branch_spec(d, N);
            e = "Dbar";
            break;
        }
        case 'c': {
            if (N == 0) N = d + 3;
            if (N != d + 3 || d < 0 || d > 6) throw ParamOutOfRange("case c needs N = d+3 and 0 <= d <= 6");
            b.surface = "Sigma_" + std::to_string(d);
            b.image = "zero section";
            b.branch = "6D0+" + std::to_string(4 * d + 6) + "G";
            b.d = d;
            b.N = N;
            IntersectionLattice s = hirzebruch(static_cast<int>(d));
            auto x = double_cover(s, DivisorClass{{"D0", 3}, {"G", R(4 * d + 6, 2)}});
            auto a1 = numbered("A", 6 - d);  // Δ₀ ∩ B0, B0 ∈ |5Δ₀+(4d+6)Γ|
            x = resolve_a1(x, a1);
            x.add_curve(e, half_preimage("D0", a1), 0);
            spec = {x, {e}};
            break;
        }
        case 'd': {
            if (N < 3) throw ParamOutOfRange("case d needs N >= 3");
            b.surface = "Cone_" + std::to_string(N - 1);
            b.image = "line through the vertex";
            b.branch = "4D0+" + std::to_string(4 * N) + "G";
            b.d = N - 1;
            b.N = N;
            spec = cone_branch_spec(N);
            e = "Dbar";
            break;
        }
        default:
            throw ParamOutOfRange(std::string("unknown case ") + letter);
    }
    spec.lattice.check_adjunction();
    b.e_dot_k = spec.lattice.pair(spec.lattice.canonical(), e);
    b.e_square = spec.lattice.pair(e, e);
    return b;
}

std::vector<BranchCase> theorem54_branch_menu() {
    return {branch_case('a', -1, 2), branch_case('b', 1, 4), branch_case('c', 2, 5), branch_case('d', -1, 3)};
}

}  // namespace ksba
