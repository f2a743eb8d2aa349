#pragma once

#include "ksba/bounds.hpp"
#include "ksba/classify.hpp"
#include "ksba/volume.hpp"

#include <map>
#include <string>
#include <vector>

namespace ksba {

using Params = std::map<std::string, long>;

struct ExpectedSingularity {
    std::vector<std::string> curves;  // contracted labels forming one component
    SingularityTag tag;
    std::string label;                // classifier label, empty if none expected
};

struct Scenario {
    std::string name;
    std::string title;
    Params params;
    ContractionSpec spec;
    Rational expected_volume;
    long expected_pg = 0;
    std::map<std::string, Rational> expected_discrepancy;
    std::vector<ExpectedSingularity> expected_singularities;
};

/// Catalog names in fixed order.
const std::vector<std::string>& scenario_names();

/// Default parameters of a scenario.
Params default_params(const std::string& name);

/// Parameter sets used by the sweeps: n (or N, d) up to `limit` within range.
std::vector<Params> parameter_grid(const std::string& name, long limit);

/// Throws UnknownScenario, ParamOutOfRange.
Scenario build(const std::string& name, const Params& params = {});

/// Dual graph of the contracted curves (integral pairings only).
DualGraph contracted_graph(const ContractionSpec& spec);

/// Jacobian elliptic surface with K ≡ nF over a base of genus b; optional I₂ fibre C0 + C1
/// with C0 meeting the zero section Z.
IntersectionLattice jacobian_surface(long n, int base_genus, bool reducible_fibre);

/// Scenario "6.1c2" lattice and contraction without its n ≥ 4 range check.
ContractionSpec section_blowup_spec(long n);

// Curve-configuration numerology for stable surfaces with K² = 2p_g − 4.

struct Table1Row {
    long N;
    std::string branch;
    bool contains_zero_section;
    std::string relation;
    Rational value;
    Rational expected;
    bool pass;
};

std::vector<Table1Row> table1_rows(long n_max = 12);
/// Throws ClaimFailed naming the first failing row.
std::vector<Claim> table1_verify(long n_max = 12);

struct MenuEntry {
    std::string surface;  // "P2", "Veronese", "Sigma_d", "Cone"
    long d = -1;
    std::string branch;
    Rational canonical_square;  // computed on the double cover
};

std::vector<MenuEntry> minimal_degree_menu(long N);

/// dim|4Δ₀+4NΓ| on Σ_{N−1} minus dim Aut. Throws FormulaMismatch unless it is 9N+10.
long moduli_count(long N);

struct BranchCase {
    char letter;
    std::string surface;
    std::string image;
    std::string branch;
    long d = -1;
    long N = 0;
    Rational e_dot_k;   // E·K on the resolved double cover, must be 1
    Rational e_square;  // E², must be −3
};

/// The four cases with representative parameters, each validated on a lattice.
std::vector<BranchCase> theorem54_branch_menu();
/// One case instantiated. Throws ParamOutOfRange.
BranchCase branch_case(char letter, long d, long N);

}  // namespace ksba
