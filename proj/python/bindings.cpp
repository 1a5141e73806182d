#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "avgroups/abgroup.hpp"
#include "avgroups/classify.hpp"
#include "avgroups/error.hpp"
#include "avgroups/lattice.hpp"
#include "avgroups/oracle.hpp"
#include "avgroups/polygon.hpp"

namespace py = pybind11;
using namespace avgroups;

namespace {

mpz_class to_mpz(const py::handle& h) { return mpz_class(py::str(h).cast<std::string>(), 10); }

py::int_ to_py(const mpz_class& n) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(n.get_str().c_str(), nullptr, 10))); }

// Polynomials arrive as text ("t^2-2*t+9" or "9,-2,1") or ascending int lists.
IntPoly to_poly(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_poly(obj.cast<std::string>());
    std::vector<mpz_class> c;
    for (auto x : obj) c.push_back(to_mpz(x));
    return IntPoly(std::move(c));
}

std::vector<py::int_> coeffs(const IntPoly& f) {
    std::vector<py::int_> out;
    for (const auto& c : f.coeffs()) out.push_back(to_py(c));
    return out;
}

std::vector<std::pair<std::int64_t, std::string>> vertices(const ConvexPolygon& p) {
    std::vector<std::pair<std::int64_t, std::string>> out;
    for (const auto& v : p.vertices()) out.emplace_back(v.x, v.y.get_str());
    return out;
}

std::vector<std::string> labels(const std::vector<LocalGroupType>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(group_label(g));
    return out;
}

std::vector<std::string> labels(const std::vector<GroupType>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(group_label(g));
    return out;
}

IntMatrix to_matrix(const std::vector<std::vector<py::object>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = to_mpz(rows[i][j]);
    }
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Groups of rational points in isogeny classes of abelian varieties";

    // Owned by the module for its whole lifetime.
    static PyObject* error_type = PyErr_NewException("avgroups._core.AvgroupsError", PyExc_ValueError, nullptr);
    m.attr("AvgroupsError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object instance = py::handle(error_type)(e.what());
            instance.attr("code") = error_code_name(e.code());
            PyErr_SetObject(error_type, instance.ptr());
        }
    });

    m.def("substitute_one_minus_t", [](const py::object& f) { return coeffs(substitute_one_minus_t(to_poly(f))); });
    m.def("parse_poly", [](const std::string& s) { return coeffs(parse_poly(s)); });
    m.def("to_human", [](const py::object& f) { return to_human(to_poly(f)); });

    m.def("validate_weil", [](const py::object& f, const py::object& q) {
        WeilReport r = q.is_none() ? validate_weil(to_poly(f)) : validate_weil(to_poly(f), to_mpz(q));
        py::dict d;
        d["accepted"] = r.accepted;
        d["reason"] = r.reason;
        d["q"] = to_py(r.q);
        d["g"] = r.g;
        d["squarefree"] = r.squarefree;
        d["order"] = to_py(r.order_n);
        return d;
    }, py::arg("f"), py::arg("q") = py::none());

    m.def("newton_polygon", [](const py::object& f, Prime ell) { return vertices(newton_polygon(to_poly(f), ell)); });
    m.def("hodge_polygon", [](const std::vector<int>& parts, int r) { return vertices(hodge_polygon(parts, r)); });

    m.def("realizable_local_groups", [](const py::object& f, Prime ell) { return labels(realizable_local_groups(to_poly(f), ell)); });
    m.def("is_realizable", [](const py::object& f, const std::string& group) {
        return is_realizable(to_poly(f), parse_group_label(group)).realizable();
    });
    m.def("classify", [](const py::object& f, const py::object& q, std::size_t limit) {
        ClassificationResult r = classify_all(to_poly(f), to_mpz(q));
        std::vector<std::string> groups;
        GroupEnumerator it = r.groups();
        while (groups.size() < limit) {
            auto g = it.next();
            if (!g) break;
            groups.push_back(group_label(*g));
        }
        return std::pair{to_py(r.total_count), groups};
    }, py::arg("f"), py::arg("q"), py::arg("limit") = 1000);
    m.def("elliptic_groups", [](const py::object& q, const py::object& b) { return labels(elliptic_groups(to_mpz(q), to_mpz(b)).groups); });
    m.def("conjecture_local_groups", [](const std::vector<py::object>& factors, Prime ell) {
        std::vector<IntPoly> fs;
        for (const auto& f : factors) fs.push_back(to_poly(f));
        return labels(conjecture_local_groups(fs, ell).groups);
    });

    m.def("witness_matrix", [](const py::object& f, const std::vector<int>& parts, Prime ell) {
        LocalMatrix w = witness_matrix(to_poly(f), parts, ell);
        std::vector<std::vector<std::string>> rows(w.dim());
        for (std::size_t i = 0; i < w.dim(); ++i)
            for (std::size_t j = 0; j < w.dim(); ++j) rows[i].push_back(w(i, j).get_str());
        return rows;
    });
    m.def("verify_witness", [](const py::object& f, const std::vector<int>& parts, Prime ell) {
        return verify_witness(to_poly(f), parts, ell);
    });
    m.def("cokernel", [](const std::vector<std::vector<py::object>>& rows) { return group_label(cokernel_integer(to_matrix(rows))); });
    m.def("achievable_groups_bruteforce", [](const py::object& f, Prime ell, int k) {
        return labels(achievable_groups_bruteforce(to_poly(f), ell, k));
    });
}
