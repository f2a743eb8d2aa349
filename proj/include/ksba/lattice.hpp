#pragma once

#include "ksba/linalg.hpp"
#include "ksba/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ksba {

/// Formal Q-linear combination of lattice labels.
class DivisorClass {
public:
    DivisorClass() = default;
    DivisorClass(std::initializer_list<std::pair<const std::string, Rational>> terms);
    static DivisorClass of(const std::string& label, const Rational& c = 1);

    [[nodiscard]] const std::map<std::string, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::string str() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& c);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }

private:
    void prune();
    std::map<std::string, Rational> terms_;
};

/// Labelled divisor classes with their Gram matrix, a canonical class and flagged curves.
/// Listed classes may be linearly dependent.
class IntersectionLattice {
public:
    IntersectionLattice() = default;
    IntersectionLattice(std::vector<std::string> labels, SymMatrix pairing);

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const SymMatrix& pairing() const { return gram_; }
    [[nodiscard]] bool has(const std::string& label) const;
    [[nodiscard]] std::size_t index_of(const std::string& label) const;

    [[nodiscard]] Rational pair(const DivisorClass& a, const DivisorClass& b) const;
    [[nodiscard]] Rational pair(const std::string& a, const std::string& b) const;
    [[nodiscard]] Rational square(const DivisorClass& a) const { return pair(a, a); }

    /// Appends `label` representing `expr`. Throws DuplicateLabel, UnknownLabel.
    void add_class(const std::string& label, const DivisorClass& expr);
    /// Redefines an existing label as `expr` (evaluated before the change).
    void replace_class(const std::string& label, const DivisorClass& expr);

    void set_canonical(const std::string& label);
    [[nodiscard]] const std::string& canonical() const { return canonical_; }
    [[nodiscard]] DivisorClass K() const { return DivisorClass::of(canonical_); }
    [[nodiscard]] Rational canonical_square() const { return pair(canonical_, canonical_); }

    /// Marks a listed class as an irreducible curve of given genus.
    void flag_curve(const std::string& label, int genus);
    void unflag_curve(const std::string& label);
    void add_curve(const std::string& label, const DivisorClass& expr, int genus);
    [[nodiscard]] const std::map<std::string, int>& curves() const { return curves_; }
    [[nodiscard]] bool is_curve(const std::string& label) const { return curves_.count(label) != 0; }

    /// K·C = 2g − 2 − C² for every flagged curve. Throws AdjunctionMismatch.
    void check_adjunction() const;

    friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

private:
    std::vector<Rational> row_of(const DivisorClass& expr) const;

    std::vector<std::string> labels_;
    SymMatrix gram_;
    std::string canonical_;
    std::map<std::string, int> curves_;
};

/// Σ_d with Δ₀² = −d, Γ² = 0, Δ₀·Γ = 1, K = −2Δ₀ − (d+2)Γ. Labels "D0", "G", "K".
IntersectionLattice hirzebruch(int d);

/// ℙ² with line class "l" and K = −3l.
IntersectionLattice projective_plane();

/// Blowup at a point: adds `exceptional` (E² = −1, orthogonal to old classes, genus 0),
/// and K becomes K + E. Old classes become total transforms.
IntersectionLattice blowup(const IntersectionLattice& lat, const std::string& exceptional);

/// C − mE for a blowup with exceptional class E.
DivisorClass strict_transform(const std::string& curve, const std::string& exceptional, int multiplicity);

/// Minimal resolution of A₁ points away from the flagged data: each label is a new (−2)-curve
/// orthogonal to every listed class, with K unchanged.
IntersectionLattice resolve_a1(const IntersectionLattice& lat, const std::vector<std::string>& labels);

/// Double cover branched over 2L: labels keep their names as pullbacks, pairings double,
/// K becomes f*(K + L). Flagged curves are dropped.
IntersectionLattice double_cover(const IntersectionLattice& lat, const DivisorClass& half_branch);

/// h⁰(Σ_d, aΔ₀ + bΓ) = Σ_{k=0..a} max(0, b − kd + 1); 0 for a < 0.
std::int64_t h0_hirzebruch(int d, int a, int b);

/// {"classes":[..],"pairing":[["p/q",..],..],"canonical":"K","curves":{"C":{"genus":0}}}
IntersectionLattice parse_lattice(const std::string& text);
std::string serialize_lattice(const IntersectionLattice& lat);
IntersectionLattice load_lattice(const std::string& path);

}  // namespace ksba
