#include "ksba/bounds.hpp"

#include "ksba/errors.hpp"

#include <algorithm>

namespace ksba {

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

std::string args(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
std::string args(long a, long b, long c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require(long v, long lo, const char* what) {
    if (v < lo) throw ParamOutOfRange(std::string(what) + " must be >= " + std::to_string(lo));
}

}  // namespace

bool FormulaReport::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Rational& FormulaReport::value(const std::string& key) const {
    for (const auto& [k, v] : values) {
        if (k == key) return v;
    }
    throw UnknownLabel(name + " has no value '" + key + "'");
}

void SweepResult::fail(std::string what) {
    if (pass) counterexample = std::move(what);
    pass = false;
}

Rational V(long n, long l) {
    require(n, 1, "n");
    require(l, 1, "l");
    return R(n) - R(3, 2) + R(15 * l - n + 6, (4 * l + 2) * (l + n + 2));
}

Rational W(long n, long l) {
    require(n, 1, "n");
    require(l, 1, "l");
    return R(n) - R(4, 3) + R(4 * (8 * l - n + 4), 3 * (3 * l + 2) * (n + l + 2));
}

mpz_class delta_V_numerator(long n, long l) {
    mpz_class N(n), L(l);
    return 15 * L * L + L * (27 - 2 * N) - N * N - 5 * N + 6;
}

Rational delta_V_closed(long n, long l) {
    mpz_class N(n), L(l);
    return Rational(delta_V_numerator(n, l), (2 * L + 1) * (2 * L + 3) * (L + N + 2) * (L + N + 3));
}

Rational delta_V(long n, long l) {
    Rational d = V(n, l) - V(n, l + 1);
    if (d != delta_V_closed(n, l)) throw FormulaMismatch("delta V" + args(n, l) + " = " + d.str());
    return d;
}

mpz_class delta_W_numerator(long n, long l) {
    mpz_class N(n), L(l);
    return 4 * (8 * L * L + L * (16 - 2 * N) - N * N - 5 * N + 4);
}

Rational delta_W_closed(long n, long l) {
    mpz_class N(n), L(l);
    return Rational(delta_W_numerator(n, l), (3 * L + 2) * (3 * L + 5) * (N + L + 2) * (N + L + 3));
}

Rational delta_W(long n, long l) {
    Rational d = W(n, l) - W(n, l + 1);
    if (d != delta_W_closed(n, l)) throw FormulaMismatch("delta W" + args(n, l) + " = " + d.str());
    return d;
}

Rational w1(long n) { return R(n * n, n + 2); }
Rational w2_first(long n) { return R(2 * n * n, 2 * n + 3); }
Rational w2_second(long n) { return R(3 * n * n + 4 * n - 3, 3 * (n + 3)); }
Rational w2(long n) { return min(w2_first(n), w2_second(n)); }
Rational gap_first(long n) { return R(n * n, (n + 2) * (2 * n + 3)); }
Rational gap_second(long n) { return R((n - 1) * (n + 6), 3 * (n + 2) * (n + 3)); }
Rational gap(long n) { return min(gap_first(n), gap_second(n)); }
Rational w1_noncomposed(long n) { return R(2 * (n - 1)); }
Rational w2_noncomposed(long n) { return R(2 * (n - 1)) + R(1, 3); }

bool min_V_claim(long n) {
    require(n, 4, "n");
    const Rational v1 = V(n, 1);
    if (n <= 20) {
        for (long l = 1; 3 * l < n; ++l) {
            if (V(n, l) < v1) return false;
        }
        return true;
    }
    for (long l = 1; l <= 10 * n; ++l) {
        if (V(n, l) < v1) return false;
    }
    // beyond 10n the correction term 15ℓ − n + 6 is positive, so V(n,ℓ) > n − 3/2
    const Rational band = R(n) - R(3, 2);
    return 15 * (10 * n + 1) - n + 6 > 0 && band >= v1;
}

bool min_W_claim(long n) {
    require(n, 4, "n");
    Rational m = W(n, 1);
    for (long l = 2; l < n + 2; ++l) m = min(m, W(n, l));
    return m == min(W(n, 1), W(n, n + 1));
}

Rational k3_bound(long n) { return R(n) - R(2) + R(4, n + 5) + R(1); }

Rational k2_excess(long n, long l1, long l2) {
    return R(4, n + 2 + l1 + l2) + R(l1, 2 * l1 + 1) + R(l2, 2 * l2 + 1) - R(4, n + 3) - R(1, 3);
}

mpz_class k2_numerator(long l1, long l2) {
    mpz_class a(l1), b(l2);
    return b * b * (4 * a - 4) + b * (4 * a * a + 116 * a + 15) - 4 * a * a + 15 * a - 11;
}

mpz_class k2_n4_polynomial(long l1, long l2) {
    mpz_class a(l1), b(l2);
    return b * b * (8 * a - 17) + b * (8 * a * a + 350 * a + 47) - 17 * a * a + 47 * a - 30;
}

namespace {

// n-free lower bound used for 5 ≤ n ≤ 20
Rational k2_mid_bound(long l1, long l2) {
    return R(l1, 2 * l1 + 1) + R(l2, 2 * l2 + 1) - R(1, 3) - R(4 * (l1 + l2 - 1), 8 * (l1 + l2 + 7));
}

Rational k2_mid_closed(long l1, long l2) {
    return Rational(k2_numerator(l1, l2), mpz_class(6 * (2 * l1 + 1) * (2 * l2 + 1) * (l1 + l2 + 7)));
}

Rational k2_n4_closed(long l1, long l2) {
    return Rational(k2_n4_polynomial(l1, l2), mpz_class(21 * (2 * l1 + 1) * (2 * l2 + 1) * (l1 + l2 + 6)));
}

Claim claim(std::string what, bool ok, const Rational& witness) { return {std::move(what), ok, witness.str()}; }

}  // namespace

FormulaReport minima_and_gap(long n) {
    require(n, 1, "n");
    FormulaReport r;
    r.name = "minima";
    r.parameters = {{"n", n}};
    r.values = {{"w1", w1(n)},
                {"w2", w2(n)},
                {"w2_first", w2_first(n)},
                {"w2_second", w2_second(n)},
                {"gap", w2(n) - w1(n)},
                {"gap_first", gap_first(n)},
                {"gap_second", gap_second(n)},
                {"w1_noncomposed", w1_noncomposed(n)},
                {"w2_noncomposed", w2_noncomposed(n)},
                {"gap_noncomposed", w2_noncomposed(n) - w1_noncomposed(n)}};
    if (n == 1) r.values.emplace_back("gap_genus2_fibration", R(4, 3) - R(1));
    r.claims.push_back(claim("w2_first - w1 == n^2/((n+2)(2n+3))", w2_first(n) - w1(n) == gap_first(n), w2_first(n) - w1(n)));
    r.claims.push_back(claim("w2_second - w1 == (n-1)(n+6)/(3(n+2)(n+3))", w2_second(n) - w1(n) == gap_second(n),
                             w2_second(n) - w1(n)));
    r.claims.push_back(claim("w2 - w1 == min of gap branches", w2(n) - w1(n) == gap(n), w2(n) - w1(n)));
    r.claims.push_back(claim("w2_noncomposed - w1_noncomposed == 1/3", w2_noncomposed(n) - w1_noncomposed(n) == R(1, 3),
                             w2_noncomposed(n) - w1_noncomposed(n)));
    return r;
}

FormulaReport case_analysis_checks(long n, long l1, long l2) {
    require(n, 4, "n");
    require(l1, 1, "l1");
    require(l2, 1, "l2");
    FormulaReport r;
    r.name = "cases";
    r.parameters = {{"n", n}, {"l1", l1}, {"l2", l2}};
    const Rational v1 = V(n, 1);
    r.values = {{"V(n,1)", v1}, {"k3_bound", k3_bound(n)}, {"k2_excess", k2_excess(n, l1, l2)}};
    r.claims.push_back(claim("k>=3: n-2+4/(n+5)+1 > V(n,1)", k3_bound(n) > v1, k3_bound(n) - v1));
    if (n == 4) {
        Rational p(k2_n4_polynomial(l1, l2));
        r.values.emplace_back("k2_n4_polynomial", p);
        if (l2 <= l1 && l1 < l2 + 6) {
            r.claims.push_back(claim("k=2,n=4: polynomial > 0", p.sign() > 0, p));
            r.claims.push_back(claim("k=2,n=4: excess == polynomial/(21(2l1+1)(2l2+1)(l1+l2+6))",
                                     k2_excess(4, l1, l2) == k2_n4_closed(l1, l2), k2_excess(4, l1, l2)));
        }
    } else if (n <= 20) {
        Rational p(k2_numerator(l1, l2));
        r.values.emplace_back("k2_numerator", p);
        r.claims.push_back(claim("k=2: numerator >= 135*l1 > 0", p >= R(135 * l1) && p.sign() > 0, p));
        r.claims.push_back(claim("k=2: bound == numerator/(6(2l1+1)(2l2+1)(l1+l2+7))",
                                 k2_mid_bound(l1, l2) == k2_mid_closed(l1, l2), k2_mid_bound(l1, l2)));
        r.claims.push_back(claim("k=2: excess >= n-free bound > 0",
                                 k2_excess(n, l1, l2) >= k2_mid_bound(l1, l2) && k2_mid_bound(l1, l2).sign() > 0,
                                 k2_excess(n, l1, l2)));
    }
    return r;
}

FormulaReport theorem_constants(long pg) {
    require(pg, 2, "p_g");
    const long n = pg - 1;
    FormulaReport r;
    r.name = "constants";
    r.parameters = {{"p_g", pg}, {"n", n}};
    const Rational pencil_min = R((pg - 1) * (pg - 1), pg + 1);
    const Rational next_first = R((2 * pg - 2) * (pg - 1), 2 * pg + 1);
    const Rational next_second = R((3 * pg - 2) * pg - 4, 3 * (pg + 2));
    r.values = {{"noncomposed_min", R(2 * pg - 4)},
                {"noncomposed_next", R(2 * pg - 4) + R(1, 3)},
                {"genus2_min", R(1)},
                {"genus2_next", R(4, 3)},
                {"elliptic_min", R(pg)},
                {"elliptic_next", R(pg) + R(1, 3)},
                {"pencil_min", pencil_min},
                {"pencil_next_first", next_first},
                {"pencil_next_second", next_second},
                {"pencil_next", min(next_first, next_second)}};
    r.claims.push_back(claim("(p_g-1)^2/(p_g+1) == n^2/(n+2)", pencil_min == w1(n), pencil_min));
    r.claims.push_back(claim("((3p_g-2)p_g-4)/(3(p_g+2)) == (3n^2+4n-3)/(3(n+3))", next_second == w2_second(n), next_second));
    r.claims.push_back(claim("(2p_g-2)(p_g-1)/(2p_g+1) == 2n^2/(2n+3)", next_first == w2_first(n), next_first));
    r.claims.push_back(claim("2p_g-4 == 2(n-1)", R(2 * pg - 4) == w1_noncomposed(n), R(2 * pg - 4)));
    r.claims.push_back(claim("2p_g-4+1/3 == 2(n-1)+1/3", R(2 * pg - 4) + R(1, 3) == w2_noncomposed(n), w2_noncomposed(n)));
    return r;
}

FormulaReport v_report(long n, long l) {
    FormulaReport r;
    r.name = "V";
    r.parameters = {{"n", n}, {"l", l}};
    Rational lit = V(n, l) - V(n, l + 1);
    r.values = {{"V", V(n, l)}, {"V(n,l+1)", V(n, l + 1)}, {"delta", lit}, {"delta_closed", delta_V_closed(n, l)},
                {"limit", R(n) - R(3, 2)}};
    r.claims.push_back(claim("V(n,l)-V(n,l+1) == closed form", lit == delta_V_closed(n, l), lit));
    return r;
}

FormulaReport w_report(long n, long l) {
    FormulaReport r;
    r.name = "W";
    r.parameters = {{"n", n}, {"l", l}};
    Rational lit = W(n, l) - W(n, l + 1);
    r.values = {{"W", W(n, l)}, {"W(n,l+1)", W(n, l + 1)}, {"delta", lit}, {"delta_closed", delta_W_closed(n, l)}};
    r.claims.push_back(claim("W(n,l)-W(n,l+1) == closed form", lit == delta_W_closed(n, l), lit));
    return r;
}

SweepResult sweep_delta_identities(long n_max, long l_factor) {
    SweepResult s;
    for (long n = 1; n <= n_max; ++n) {
        for (long l = 1; l <= l_factor * n; ++l) {
            ++s.instances;
            Rational d = V(n, l) - V(n, l + 1);
            if (d != delta_V_closed(n, l)) s.fail("delta V" + args(n, l) + " literal " + d.str());
            if (n >= 4) {
                ++s.instances;
                Rational e = W(n, l) - W(n, l + 1);
                if (e != delta_W_closed(n, l)) s.fail("delta W" + args(n, l) + " literal " + e.str());
            }
        }
    }
    return s;
}

SweepResult sweep_delta_V_at_one(long n_max) {
    SweepResult s;
    for (long n = 5; n <= n_max; ++n) {
        ++s.instances;
        Rational d = delta_V(n, 1);
        Rational display = -R(n * n + 7 * n - 48, 15 * (n + 3) * (n + 4));
        if (d != display || d.sign() >= 0) s.fail("delta V(" + std::to_string(n) + ",1) = " + d.str());
    }
    return s;
}

SweepResult sweep_W_minus_V(long n_max) {
    SweepResult s;
    for (long n = 4; n <= n_max; ++n) {
        ++s.instances;
        Rational d = W(n, n + 1) - V(n, 1);
        Rational display = R(6 * n * n * n - 7 * n * n - 24 * n + 9, 3 * (n + 3) * (2 * n + 3) * (3 * n + 5));
        if (d != display || d.sign() <= 0) s.fail("W(n,n+1)-V(n,1) at n=" + std::to_string(n) + ": " + d.str());
        if (W(n, 1) <= V(n, 1)) s.fail("W(n,1) <= V(n,1) at n=" + std::to_string(n));
    }
    return s;
}

SweepResult sweep_numerator_sign(long n_max, long l_factor) {
    SweepResult s;
    for (long n = 1; n <= n_max; ++n) {
        int last = -2;
        int changes_w = 0;
        int last_w = 0;
        for (long l = 1; l <= l_factor * n; ++l) {
            ++s.instances;
            int sg = sgn(delta_V_numerator(n, l));
            if (sg < last) s.fail("delta V numerator sign drops at " + args(n, l));
            last = sg;
            if (n >= 4) {
                int sw = sgn(delta_W_numerator(n, l));
                if (sw != 0 && last_w != 0 && sw != last_w) ++changes_w;
                if (sw != 0) last_w = sw;
            }
        }
        if (changes_w > 1) s.fail("delta W sign changes " + std::to_string(changes_w) + " times at n=" + std::to_string(n));
    }
    return s;
}

SweepResult sweep_min_V(long n_max) {
    SweepResult s;
    for (long n = 4; n <= n_max; ++n) {
        ++s.instances;
        if (!min_V_claim(n)) s.fail("V(n,1) not minimal at n=" + std::to_string(n));
        if (n >= 21 && R(n) - R(3, 2) < V(n, 1)) s.fail("n-3/2 < V(n,1) at n=" + std::to_string(n));
    }
    return s;
}

SweepResult sweep_min_W(long n_max) {
    SweepResult s;
    for (long n = 4; n <= n_max; ++n) {
        ++s.instances;
        if (!min_W_claim(n)) s.fail("min W not at l in {1,n+1} for n=" + std::to_string(n));
    }
    return s;
}

SweepResult sweep_k2_n4(long l_max) {
    SweepResult s;
    for (long l2 = 1; l2 <= l_max; ++l2) {
        for (long l1 = l2; l1 < l2 + 6; ++l1) {
            ++s.instances;
            mpz_class p = k2_n4_polynomial(l1, l2);
            if (p <= 0) s.fail("n=4 polynomial at " + args(l1, l2) + " = " + p.get_str());
            if (k2_excess(4, l1, l2) != k2_n4_closed(l1, l2)) s.fail("n=4 identity at " + args(l1, l2));
        }
    }
    return s;
}

SweepResult sweep_k2_mid(long l_max) {
    SweepResult s;
    for (long l1 = 1; l1 <= l_max; ++l1) {
        for (long l2 = 1; l2 <= l_max; ++l2) {
            mpz_class p = k2_numerator(l1, l2);
            if (p < 135 * l1 || p <= 0) s.fail("numerator at " + args(l1, l2) + " = " + p.get_str());
            Rational bound = k2_mid_bound(l1, l2);
            if (bound != k2_mid_closed(l1, l2)) s.fail("numerator identity at " + args(l1, l2));
            for (long n = 5; n <= 20; ++n) {
                ++s.instances;
                Rational e = k2_excess(n, l1, l2);
                if (e < bound || e.sign() <= 0) s.fail("k=2 excess at " + args(n, l1, l2) + " = " + e.str());
            }
        }
    }
    return s;
}

SweepResult sweep_k3(long n_max) {
    SweepResult s;
    for (long n = 4; n <= n_max; ++n) {
        ++s.instances;
        if (k3_bound(n) <= V(n, 1)) s.fail("k>=3 bound at n=" + std::to_string(n));
    }
    return s;
}

SweepResult sweep_gap(long n_max) {
    SweepResult s;
    for (long n = 1; n <= n_max; ++n) {
        ++s.instances;
        if (w2_first(n) - w1(n) != gap_first(n)) s.fail("first gap branch at n=" + std::to_string(n));
        if (w2_second(n) - w1(n) != gap_second(n)) s.fail("second gap branch at n=" + std::to_string(n));
        if (w2(n) - w1(n) != gap(n)) s.fail("gap at n=" + std::to_string(n));
        if (w2_noncomposed(n) - w1_noncomposed(n) != R(1, 3)) s.fail("noncomposed gap at n=" + std::to_string(n));
    }
    return s;
}

SweepResult sweep_theorem_constants(long pg_max) {
    SweepResult s;
    for (long pg = 2; pg <= pg_max; ++pg) {
        ++s.instances;
        FormulaReport r = theorem_constants(pg);
        for (const auto& c : r.claims) {
            if (!c.pass) s.fail("p_g=" + std::to_string(pg) + ": " + c.description);
        }
    }
    return s;
}

}  // namespace ksba
