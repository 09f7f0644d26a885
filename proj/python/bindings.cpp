#include "k3cert/certificate_io.hpp"
#include "k3cert/dh.hpp"
#include "k3cert/embeddings.hpp"
#include "k3cert/int_matrix.hpp"
#include "k3cert/lattice.hpp"
#include "k3cert/planner.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace k3cert;

namespace {

// Python ints are arbitrary precision; route them through decimal strings.
Int to_int(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::object from_int(const Int& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

IntMatrix to_matrix(const py::sequence& rows) {
    const int r = static_cast<int>(py::len(rows));
    if (r == 0) throw std::invalid_argument("matrix: no rows");
    const int c = static_cast<int>(py::len(rows[0]));
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        py::sequence row = rows[i].cast<py::sequence>();
        if (static_cast<int>(py::len(row)) != c) throw std::invalid_argument("matrix: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = to_int(row[j]);
    }
    return m;
}

py::list from_matrix(const IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(from_int(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

AmbientVector to_vector(const py::sequence& seq) {
    AmbientVector v(static_cast<int>(py::len(seq)));
    for (int i = 0; i < v.size(); ++i) {
        py::handle h = seq[i];
        if (py::isinstance<py::str>(h))
            v[i] = Rat::parse(h.cast<std::string>());
        else
            v[i] = Rat(to_int(h));
    }
    return v;
}

py::dict report_dict(const VerificationReport& rep) {
    py::dict d;
    d["pass"] = rep.pass();
    d["note"] = rep.note;
    py::list warnings;
    for (const auto& w : rep.warnings) warnings.append(w);
    d["warnings"] = warnings;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["pass"] = c.pass;
        cd["anchor"] = c.anchor;
        cd["witness"] = c.witness;
        checks.append(cd);
    }
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact lattice arithmetic and construction certificates";

    m.def(
        "plan_certificate",
        [](long long k, std::optional<std::vector<long long>> parts,
           std::optional<long long> n) {
            ConstructionPlan plan = make_plan(k, parts, n);
            return emit_certificate(build_certificate(plan));
        },
        py::arg("k"), py::arg("parts") = std::nullopt, py::arg("N") = std::nullopt,
        "Build the certificate for k fixed-point pairs and return its JSON.");

    m.def(
        "verify_certificate",
        [](const std::string& text) { return report_dict(verify_certificate(parse_certificate(text))); },
        py::arg("certificate_json"),
        "Parse and verify a certificate; returns {pass, note, warnings, checks}.");

    m.def("theorem2_profile", []() { return emit_profile(theorem2_profile()); },
          "The period-10 reference profile as JSON.");

    m.def(
        "prop61_profile",
        [](int k, long long a, long long b, const std::string& width) {
            return emit_profile(prop61_profile(k, make_int(a), make_int(b), Rat::parse(width)));
        },
        py::arg("k"), py::arg("A"), py::arg("B"), py::arg("width") = "1/2",
        "Interval profile with k fixed points on each of the two walls, as JSON.");

    m.def(
        "roots_data",
        [](int k, long long a, long long b) {
            RootsData rd = roots_construct(k, make_int(a), make_int(b));
            auto primal = rd.primal_vectors();
            auto dual = rd.dual_vectors();
            PrimitivityCertificate prim = is_primitive_span(k3_lattice(), primal, &dual);
            return emit_roots(rd, prim);
        },
        py::arg("k"), py::arg("A"), py::arg("B"),
        "Explicit vectors with prescribed pairings plus their primitivity certificate, as JSON.");

    m.def(
        "smith_normal_form",
        [](const py::sequence& rows) {
            SmithResult r = smith_normal_form(to_matrix(rows));
            return py::make_tuple(from_matrix(r.U), from_matrix(r.D), from_matrix(r.V));
        },
        py::arg("matrix"), "U, D, V with U*M*V = D in Smith normal form.");

    m.def(
        "determinant", [](const py::sequence& rows) { return from_int(determinant(to_matrix(rows))); },
        py::arg("matrix"));

    m.def(
        "signature",
        [](const py::sequence& rows) {
            Inertia in = signature(to_matrix(rows));
            return py::make_tuple(in.n_plus, in.n_minus, in.n_zero);
        },
        py::arg("matrix"), "Inertia (n_plus, n_minus, n_zero) of a symmetric matrix.");

    m.def(
        "gram", [](const std::string& name) { return from_matrix(standard_lattice(name).gram); },
        py::arg("name"), "Gram matrix of H, E8, minusE8 or K3.");

    m.def(
        "k3_pair",
        [](const py::sequence& v, const py::sequence& w) {
            return pair_value(k3_lattice(), to_vector(v), to_vector(w)).str();
        },
        py::arg("v"), py::arg("w"),
        "Pairing of two vectors in the fixed 22-entry K3 basis; entries may be ints or 'p/q'.");

    m.attr("__version__") = "0.1.0";
}
