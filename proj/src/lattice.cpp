#include "ksba/lattice.hpp"

#include "ksba/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ksba {

using nlohmann::json;

DivisorClass::DivisorClass(std::initializer_list<std::pair<const std::string, Rational>> terms) : terms_(terms) {
    prune();
}

DivisorClass DivisorClass::of(const std::string& label, const Rational& c) {
    DivisorClass d;
    d.terms_[label] = c;
    d.prune();
    return d;
}

void DivisorClass::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    for (const auto& [k, v] : o.terms_) terms_[k] += v;
    prune();
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    for (const auto& [k, v] : o.terms_) terms_[k] -= v;
    prune();
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
    for (auto& [k, v] : terms_) v *= c;
    prune();
    return *this;
}

std::string DivisorClass::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        Rational c = v;
        if (!first) {
            s += c.sign() < 0 ? " - " : " + ";
            c = abs(c);
        } else if (c.sign() < 0) {
            s += "-";
            c = abs(c);
        }
        if (c != Rational(1)) s += c.str() + "*";
        s += k;
        first = false;
    }
    return s;
}

IntersectionLattice::IntersectionLattice(std::vector<std::string> labels, SymMatrix pairing)
    : labels_(std::move(labels)), gram_(std::move(pairing)) {
    if (labels_.size() != gram_.size()) throw DimensionMismatch("labels vs pairing");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw UnknownLabel("empty label");
        if (!seen.insert(l).second) throw DuplicateLabel(l);
    }
}

bool IntersectionLattice::has(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t IntersectionLattice::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw UnknownLabel(label);
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Rational> IntersectionLattice::row_of(const DivisorClass& expr) const {
    std::vector<Rational> row(size());
    for (const auto& [label, c] : expr.terms()) {
        std::size_t i = index_of(label);
        for (std::size_t j = 0; j < size(); ++j) row[j] += c * gram_(i, j);
    }
    return row;
}

Rational IntersectionLattice::pair(const DivisorClass& a, const DivisorClass& b) const {
    auto row = row_of(a);
    Rational s;
    for (const auto& [label, c] : b.terms()) s += c * row[index_of(label)];
    return s;
}

Rational IntersectionLattice::pair(const std::string& a, const std::string& b) const {
    return gram_(index_of(a), index_of(b));
}

void IntersectionLattice::add_class(const std::string& label, const DivisorClass& expr) {
    if (has(label)) throw DuplicateLabel(label);
    if (label.empty()) throw UnknownLabel("empty label");
    auto row = row_of(expr);
    Rational self = pair(expr, expr);
    SymMatrix g(size() + 1);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i; j < size(); ++j) g.set(i, j, gram_(i, j));
        g.set(i, size(), row[i]);
    }
    g.set(size(), size(), self);
    labels_.push_back(label);
    gram_ = std::move(g);
}

void IntersectionLattice::replace_class(const std::string& label, const DivisorClass& expr) {
    std::size_t k = index_of(label);
    auto row = row_of(expr);
    Rational self = pair(expr, expr);
    for (std::size_t j = 0; j < size(); ++j) {
        if (j != k) gram_.set(k, j, row[j]);
    }
    gram_.set(k, k, self);
}

void IntersectionLattice::set_canonical(const std::string& label) {
    (void)index_of(label);
    canonical_ = label;
}

void IntersectionLattice::flag_curve(const std::string& label, int genus) {
    (void)index_of(label);
    if (genus < 0) throw NotACurve(label + " has negative genus");
    curves_[label] = genus;
}

void IntersectionLattice::unflag_curve(const std::string& label) { curves_.erase(label); }

void IntersectionLattice::add_curve(const std::string& label, const DivisorClass& expr, int genus) {
    add_class(label, expr);
    flag_curve(label, genus);
}

void IntersectionLattice::check_adjunction() const {
    if (canonical_.empty()) throw UnknownLabel("no canonical class");
    for (const auto& [label, g] : curves_) {
        Rational kc = pair(canonical_, label);
        Rational expect = Rational(2L * g - 2) - pair(label, label);
        if (kc != expect) {
            throw AdjunctionMismatch(label + ": K.C = " + kc.str() + " but 2g-2-C^2 = " + expect.str());
        }
    }
}

IntersectionLattice hirzebruch(int d) {
    if (d < 0) throw ParamOutOfRange("Hirzebruch index must be >= 0");
    IntersectionLattice lat({"D0", "G"}, SymMatrix::from_rows({{-static_cast<long>(d), 1}, {1, 0}}));
    lat.add_class("K", DivisorClass{{"D0", -2}, {"G", -(d + 2)}});
    lat.set_canonical("K");
    lat.flag_curve("D0", 0);
    lat.flag_curve("G", 0);
    return lat;
}

IntersectionLattice projective_plane() {
    IntersectionLattice lat({"l"}, SymMatrix::from_rows({{1}}));
    lat.add_class("K", DivisorClass::of("l", -3));
    lat.set_canonical("K");
    lat.flag_curve("l", 0);
    return lat;
}

IntersectionLattice blowup(const IntersectionLattice& lat, const std::string& exceptional) {
    if (lat.has(exceptional)) throw DuplicateLabel(exceptional);
    const std::size_t n = lat.size();
    SymMatrix g(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) g.set(i, j, lat.pairing()(i, j));
    }
    g.set(n, n, -1);
    std::vector<std::string> labels = lat.labels();
    labels.push_back(exceptional);
    IntersectionLattice out(std::move(labels), std::move(g));
    for (const auto& [label, genus] : lat.curves()) out.flag_curve(label, genus);
    out.flag_curve(exceptional, 0);
    out.set_canonical(lat.canonical());
    out.replace_class(lat.canonical(), lat.K() + DivisorClass::of(exceptional));
    return out;
}

DivisorClass strict_transform(const std::string& curve, const std::string& exceptional, int multiplicity) {
    return DivisorClass::of(curve) - DivisorClass::of(exceptional, multiplicity);
}

IntersectionLattice resolve_a1(const IntersectionLattice& lat, const std::vector<std::string>& labels) {
    const std::size_t n = lat.size();
    SymMatrix g(n + labels.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) g.set(i, j, lat.pairing()(i, j));
    }
    for (std::size_t k = 0; k < labels.size(); ++k) g.set(n + k, n + k, -2);
    std::vector<std::string> all = lat.labels();
    all.insert(all.end(), labels.begin(), labels.end());
    IntersectionLattice out(std::move(all), std::move(g));
    for (const auto& [label, genus] : lat.curves()) out.flag_curve(label, genus);
    for (const auto& l : labels) out.flag_curve(l, 0);
    out.set_canonical(lat.canonical());
    return out;
}

IntersectionLattice double_cover(const IntersectionLattice& lat, const DivisorClass& half_branch) {
    const std::size_t n = lat.size();
    SymMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) g.set(i, j, Rational(2) * lat.pairing()(i, j));
    }
    // f*(K + L): its pairing with f*C is 2 (K + L)·C
    DivisorClass k_plus_l = lat.K() + half_branch;
    std::size_t kk = lat.index_of(lat.canonical());
    for (std::size_t j = 0; j < n; ++j) {
        if (j != kk) g.set(kk, j, Rational(2) * lat.pair(k_plus_l, DivisorClass::of(lat.labels()[j])));
    }
    g.set(kk, kk, Rational(2) * lat.square(k_plus_l));
    IntersectionLattice out(lat.labels(), std::move(g));
    out.set_canonical(lat.canonical());
    return out;
}

std::int64_t h0_hirzebruch(int d, int a, int b) {
    if (d < 0) throw ParamOutOfRange("Hirzebruch index must be >= 0");
    std::int64_t s = 0;
    for (int k = 0; k <= a; ++k) s += std::max<std::int64_t>(0, static_cast<std::int64_t>(b) - static_cast<std::int64_t>(k) * d + 1);
    return s;
}

namespace {

Rational rational_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ParseError&) {
            throw SchemaError(where + ": expected \"p/q\"");
        }
    }
    throw SchemaError(where + ": expected integer or \"p/q\" string");
}

}  // namespace

IntersectionLattice parse_lattice(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("byte " + std::to_string(e.byte) + ": malformed JSON");
    }
    if (!doc.is_object()) throw SchemaError("document: expected an object");
    if (!doc.contains("classes") || !doc["classes"].is_array()) throw SchemaError("classes: expected an array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < doc["classes"].size(); ++i) {
        const auto& c = doc["classes"][i];
        if (!c.is_string()) throw SchemaError("classes[" + std::to_string(i) + "]: expected string");
        labels.push_back(c.get<std::string>());
    }
    if (!doc.contains("pairing") || !doc["pairing"].is_array() || doc["pairing"].size() != labels.size()) {
        throw SchemaError("pairing: expected a square array matching classes");
    }
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& r = doc["pairing"][i];
        if (!r.is_array() || r.size() != labels.size()) throw SchemaError("pairing[" + std::to_string(i) + "]: wrong length");
        std::vector<Rational> row;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            row.push_back(rational_field(r[j], "pairing[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        }
        rows.push_back(std::move(row));
    }
    SymMatrix m;
    try {
        m = SymMatrix::from_rows(rows);
    } catch (const NotSymmetric& e) {
        throw SchemaError(std::string("pairing: ") + e.what());
    }
    IntersectionLattice lat(labels, m);
    if (!doc.contains("canonical") || !doc["canonical"].is_string()) throw SchemaError("canonical: expected label");
    try {
        lat.set_canonical(doc["canonical"].get<std::string>());
    } catch (const UnknownLabel&) {
        throw SchemaError("canonical: unknown label '" + doc["canonical"].get<std::string>() + "'");
    }
    if (doc.contains("curves")) {
        const auto& cs = doc["curves"];
        if (!cs.is_object()) throw SchemaError("curves: expected an object");
        for (const auto& [label, info] : cs.items()) {
            std::string where = "curves." + label;
            if (!lat.has(label)) throw SchemaError(where + ": unknown label");
            int genus = 0;
            if (info.is_object() && info.contains("genus")) {
                if (!info["genus"].is_number_integer() || info["genus"].get<long long>() < 0) {
                    throw SchemaError(where + ".genus: expected non-negative integer");
                }
                genus = static_cast<int>(info["genus"].get<long long>());
            } else if (!info.is_object()) {
                throw SchemaError(where + ": expected {\"genus\": g}");
            }
            lat.flag_curve(label, genus);
        }
    }
    return lat;
}

std::string serialize_lattice(const IntersectionLattice& lat) {
    json doc;
    doc["classes"] = lat.labels();
    json rows = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < lat.size(); ++j) row.push_back(lat.pairing()(i, j).str());
        rows.push_back(row);
    }
    doc["pairing"] = rows;
    doc["canonical"] = lat.canonical();
    json curves = json::object();
    for (const auto& [label, g] : lat.curves()) curves[label] = {{"genus", g}};
    doc["curves"] = curves;
    return doc.dump(1);
}

IntersectionLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_lattice(ss.str());
}

}  // namespace ksba
