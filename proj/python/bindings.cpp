#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubesum/errors.hpp"
#include "cubesum/fixtures.hpp"
#include "cubesum/report.hpp"

namespace py = pybind11;
using namespace cubesum;

namespace {

using Series = std::vector<std::pair<int, std::string>>;

Series to_pairs(const LaurentSeries& s) {
    Series out;
    for (int e = s.val; e < s.order(); ++e) out.emplace_back(e, s.coeff(e).str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_cubesum, m) {
    m.doc() = "Sums of two rational cubes for primes p = 4, 7 mod 9";

    py::register_exception<BadInput>(m, "BadInput", PyExc_ValueError);
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_RuntimeError);

    m.def("split_prime", [](long p) {
        auto s = split_prime(p);
        return std::make_pair(s.pi.str(), s.pibar.str());
    });
    m.def("level", [](long p, int i) { return conductor_and_level(p, i).N; }, py::arg("p"), py::arg("i") = 1);
    m.def("check_solvable_prime", &check_solvable_prime);

    m.def("qexp", [](long p, int i, std::size_t terms, bool conj) {
        auto f = qexp_coefficients(p, i, terms, conj);
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t n = 1; n <= terms; ++n) out.emplace_back(f.a(n).a.get_str(), f.a(n).b.get_str());
        return out;
    }, py::arg("p"), py::arg("i") = 1, py::arg("terms") = 50, py::arg("conj") = false);

    m.def("y_series", [](long p, int i, int terms, bool conj) { return to_pairs(y_series(p, i, terms - 1, conj)); },
          py::arg("p"), py::arg("i") = 1, py::arg("terms") = 22, py::arg("conj") = false);
    m.def("f_series", [](long p, int i, int sign, int terms) {
        return to_pairs(f_plus_minus_series(p, i, sign, terms - 1).F);
    }, py::arg("p"), py::arg("i") = 1, py::arg("sign") = 1, py::arg("terms") = 22);

    // JSON text of the run report; the Python wrapper decodes it
    m.def("solve_json", [](long p, int i, unsigned bits, const std::string& eval, std::size_t max_terms) {
        SolveOptions opts;
        opts.bits = bits;
        opts.eval = eval;
        opts.max_terms = max_terms;
        SolveResult res;
        {
            py::gil_scoped_release nogil;
            res = solve(p, i, opts);
        }
        return to_json(make_report(res), false).dump();
    }, py::arg("p"), py::arg("i") = 1, py::arg("bits") = 192, py::arg("eval") = "auto",
       py::arg("max_terms") = 2000000);

    m.def("verify_examples", [](bool quick, bool strict) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (auto& r : verify_examples({quick, strict, 192})) out.emplace_back(r.name, r.status, r.detail);
        return out;
    }, py::arg("quick") = true, py::arg("strict") = false);
}
