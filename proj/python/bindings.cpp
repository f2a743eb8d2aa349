// Thin Python layer over the C++ library. Rationals cross the boundary as "p/q" strings;
// the ksba package turns them into fractions.Fraction.

#include "ksba/bounds.hpp"
#include "ksba/classify.hpp"
#include "ksba/cycles.hpp"
#include "ksba/discrepancy.hpp"
#include "ksba/errors.hpp"
#include "ksba/scenarios.hpp"
#include "ksba/verify.hpp"
#include "ksba/volume.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ksba;

namespace {

py::dict profile_dict(const DiscrepancyProfile& p) {
    py::dict a;
    for (std::size_t i = 0; i < p.ids.size(); ++i) a[py::str(p.ids[i])] = p.a[i].str();
    py::list comps;
    for (const auto& c : p.components) {
        py::list members;
        for (auto m : c.members) members.append(p.ids[m]);
        comps.append(py::make_tuple(members, to_string(c.verdict)));
    }
    py::dict out;
    out["a"] = a;
    out["components"] = comps;
    out["log_canonical"] = p.log_canonical();
    return out;
}

py::dict classify_dict(const std::string& graph_json) {
    DualGraph g = parse_graph(graph_json);
    SingularityType t = classify(g);
    py::dict out;
    out["tag"] = to_string(t.tag);
    out["label"] = t.label;
    out["branch_dets"] = t.branch_dets;
    out["degree"] = t.degree ? py::object(py::int_(*t.degree)) : py::object(py::none());
    out["log_canonical"] = t.log_canonical();
    out["log_terminal"] = t.log_terminal();
    out["description"] = t.describe();
    return out;
}

py::dict cycle_dict(const std::string& graph_json) {
    DualGraph g = parse_graph(graph_json);
    LauferTrace t = laufer(g);
    py::dict coeffs;
    for (std::size_t i = 0; i < t.cycle.ids.size(); ++i) coeffs[py::str(t.cycle.ids[i])] = t.cycle.coefficients[i];
    py::dict out;
    out["coefficients"] = coeffs;
    out["self_intersection"] = -degree(g, t.cycle);
    out["iterations"] = t.iterations;
    return out;
}

py::dict example_dict(const std::string& name, const std::map<std::string, long>& params) {
    Scenario s = build(name, params);
    VolumeResult r = volume(s.spec);
    py::dict out;
    out["name"] = s.name;
    out["params"] = s.params;
    out["contracted"] = s.spec.contracted;
    out["ambient_k2"] = r.ambient_k2.str();
    out["volume"] = r.volume.str();
    out["expected_volume"] = s.expected_volume.str();
    out["p_g"] = s.expected_pg;
    out["profile"] = profile_dict(r.profile);
    out["stable_on_listed_curves"] = stability_necessary_checks(s.spec).passed();
    return out;
}

py::dict report_dict(const FormulaReport& r) {
    py::dict values;
    for (const auto& [k, v] : r.values) values[py::str(k)] = v.str();
    py::list claims;
    for (const auto& c : r.claims) claims.append(py::make_tuple(c.description, c.pass, c.witness));
    py::dict out;
    out["values"] = values;
    out["claims"] = claims;
    out["passed"] = r.passed();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact volumes and discrepancies for log canonical surface singularities";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "KsbaError");

    m.def("classify", &classify_dict, py::arg("graph_json"));
    m.def("discrepancies", [](const std::string& g) { return profile_dict(discrepancies(parse_graph(g))); },
          py::arg("graph_json"));
    m.def("fundamental_cycle", &cycle_dict, py::arg("graph_json"));

    m.def("V", [](long n, long l) { return V(n, l).str(); }, py::arg("n"), py::arg("l"));
    m.def("W", [](long n, long l) { return W(n, l).str(); }, py::arg("n"), py::arg("l"));
    m.def("w1", [](long n) { return w1(n).str(); }, py::arg("n"));
    m.def("w2", [](long n) { return w2(n).str(); }, py::arg("n"));
    m.def("gap", [](long n) { return gap(n).str(); }, py::arg("n"));
    m.def("minima_and_gap", [](long n) { return report_dict(minima_and_gap(n)); }, py::arg("n"));
    m.def("theorem_constants", [](long pg) { return report_dict(theorem_constants(pg)); }, py::arg("p_g"));

    m.def("scenario_names", &scenario_names);
    m.def("example", &example_dict, py::arg("name"), py::arg("params") = std::map<std::string, long>{});
    m.def("moduli_count", &moduli_count, py::arg("N"));

    m.def(
        "verify_paper",
        [](long n_max) {
            VerifyOptions o;
            o.n_max = n_max;
            VerifyOutcome r;
            {
                py::gil_scoped_release release;
                r = verify_paper(o);
            }
            return py::make_tuple(r.passed(), r.report());
        },
        py::arg("n_max") = 100);
}
