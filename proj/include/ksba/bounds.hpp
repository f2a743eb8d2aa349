#pragma once

#include "ksba/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ksba {

struct Claim {
    std::string description;
    bool pass = false;
    std::string witness;
};

struct FormulaReport {
    std::string name;
    std::vector<std::pair<std::string, long>> parameters;
    std::vector<std::pair<std::string, Rational>> values;
    std::vector<Claim> claims;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const Rational& value(const std::string& key) const;
};

/// Result of an exhaustive sweep: the first counterexample, if any.
struct SweepResult {
    bool pass = true;
    std::size_t instances = 0;
    std::string counterexample;

    void fail(std::string what);
};

// Volume candidates in the pencil case, n = p_g − 1.
Rational V(long n, long l);
Rational W(long n, long l);

/// V(n,ℓ) − V(n,ℓ+1), checked against the closed form. Throws FormulaMismatch.
Rational delta_V(long n, long l);
Rational delta_V_closed(long n, long l);
mpz_class delta_V_numerator(long n, long l);
Rational delta_W(long n, long l);
Rational delta_W_closed(long n, long l);
mpz_class delta_W_numerator(long n, long l);

Rational w1(long n);
Rational w2_first(long n);   // 2n²/(2n+3)
Rational w2_second(long n);  // (3n²+4n−3)/(3(n+3))
Rational w2(long n);
Rational gap_first(long n);  // n²/((n+2)(2n+3))
Rational gap_second(long n); // (n−1)(n+6)/(3(n+2)(n+3))
Rational gap(long n);
Rational w1_noncomposed(long n);  // 2(n−1)
Rational w2_noncomposed(long n);  // 2(n−1) + 1/3

/// Enumerative minimality of V(n,1): ℓ < n/3 for n ≤ 20, ℓ ≤ 10n plus the limit band beyond.
bool min_V_claim(long n);
/// min over 1 ≤ ℓ < n+2 of W(n,ℓ) is attained at ℓ = 1 or ℓ = n+1.
bool min_W_claim(long n);

// Case analysis bounds.
Rational k3_bound(long n);                       // n − 2 + 4/(n+5) + 1
Rational k2_excess(long n, long l1, long l2);    // lower bound for K² − V(n,1), k = 2
mpz_class k2_numerator(long l1, long l2);        // the 5 ≤ n ≤ 20 numerator
mpz_class k2_n4_polynomial(long l1, long l2);    // the n = 4 numerator

FormulaReport minima_and_gap(long n);
FormulaReport case_analysis_checks(long n, long l1, long l2);
FormulaReport theorem_constants(long pg);
FormulaReport v_report(long n, long l);
FormulaReport w_report(long n, long l);

// Sweeps over the verified ranges.
SweepResult sweep_delta_identities(long n_max, long l_factor);
SweepResult sweep_delta_V_at_one(long n_max);
SweepResult sweep_W_minus_V(long n_max);
SweepResult sweep_numerator_sign(long n_max, long l_factor);
SweepResult sweep_min_V(long n_max);
SweepResult sweep_min_W(long n_max);
SweepResult sweep_k2_n4(long l_max);
SweepResult sweep_k2_mid(long l_max);
SweepResult sweep_k3(long n_max);
SweepResult sweep_gap(long n_max);
SweepResult sweep_theorem_constants(long pg_max);

}  // namespace ksba
