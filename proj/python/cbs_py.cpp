#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbs/errors.hpp"
#include "cbs/eulerian.hpp"
#include "cbs/lehmer.hpp"
#include "cbs/polybernoulli.hpp"
#include "cbs/verify.hpp"

namespace py = pybind11;
using namespace cbs;

namespace {

// Exact values cross the boundary as "p" or "p/q" strings; the Python layer turns them into Fractions.
std::vector<std::string> coeffs(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

py::dict result_dict(const CheckResult& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["params"] = r.params;
    d["passed"] = r.passed;
    d["detail"] = r.detail;
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_cbs, m) {
    m.doc() = "Exact central binomial series, Eulerian and poly-Bernoulli computations";

    py::register_exception<SizeError>(m, "SizeError", PyExc_OverflowError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

    m.def("b", [](int n) { return b_rec(n).to_string(); }, py::arg("n"));
    m.def("a", [](int n) { return a_seq(n).to_string(); }, py::arg("n"));
    m.def("b_explicit", [](int n) { return b_explicit(n).to_string(); }, py::arg("n"));
    m.def("poly_bernoulli", [](int n, int k) { return shared_poly_bernoulli_table().get(n, k).to_string(); },
          py::arg("n"), py::arg("k"));
    m.def("alternating_sum", [](int n) { return alternating_sum(n).to_string(); }, py::arg("n"));
    m.def(
        "zeta",
        [](int k) {
            const ZetaValue z = zeta_cb_neg(k);
            return std::make_pair(z.rational_part.to_string(), z.pi_sqrt3_part.to_string());
        },
        py::arg("k"));
    m.def("p", [](int k) { return coeffs(pq_polys(k).p); }, py::arg("k"));
    m.def("q", [](int k) { return coeffs(pq_polys(k).q); }, py::arg("k"));
    m.def(
        "F",
        [](int n) {
            std::vector<std::vector<std::string>> rows;
            const BiPoly f = f_bipoly(n);
            for (const auto& r : f.rows()) rows.push_back(coeffs(r));
            return rows;
        },
        py::arg("n"));
    m.def("F_at_y", [](int n, const std::string& y) { return coeffs(f_at_y(n, Rat::parse(y))); }, py::arg("n"),
          py::arg("y"));
    m.def("s_eulerian", [](const std::vector<int>& bounds) { return coeffs(s_eulerian(bounds)); }, py::arg("bounds"));
    m.def("eulerian_number", [](int n, int k) { return eulerian_number(n, k).get_str(); }, py::arg("n"), py::arg("k"));

    m.def("series_partial_sum", &series_partial_sum, py::arg("k"), py::arg("x"), py::arg("terms"));
    m.def("closed_form_rhs", &closed_form_rhs, py::arg("k"), py::arg("x"));
    m.def("dirichlet_partial_sum", &dirichlet_partial_sum, py::arg("k"), py::arg("terms"));
    m.def("p_egf_closed", &p_egf_closed, py::arg("x"), py::arg("t"));
    m.def("q_egf_closed", &q_egf_closed, py::arg("x"), py::arg("t"));
    m.def("a_egf_closed", &a_egf_closed, py::arg("t"));
    m.def("p_egf_truncated", &p_egf_truncated, py::arg("x"), py::arg("t"), py::arg("terms"));
    m.def("q_egf_truncated", &q_egf_truncated, py::arg("x"), py::arg("t"), py::arg("terms"));
    m.def("a_egf_truncated", &a_egf_truncated, py::arg("t"), py::arg("terms"));

    m.def("suite_names", &suite_names);
    m.def(
        "verify",
        [](const std::string& suite, std::optional<int> max_n, std::uint64_t seed, double tolerance) {
            SuiteOptions o;
            o.max_n = max_n.value_or(default_max_n(suite));
            o.seed = seed;
            o.tolerance = tolerance;
            std::vector<CheckResult> results;
            {
                py::gil_scoped_release release;
                results = run_suite(suite, o);
            }
            py::list out;
            for (const auto& r : results) out.append(result_dict(r));
            return out;
        },
        py::arg("suite"), py::arg("max_n") = py::none(), py::arg("seed") = kDefaultSeed,
        py::arg("tolerance") = kDefaultTolerance);
}
