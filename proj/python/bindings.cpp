// Python bindings for the chromalg core (module chromalg._core).
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromalg/conjecture.hpp"
#include "chromalg/factorization.hpp"
#include "chromalg/families.hpp"
#include "chromalg/galois.hpp"
#include "chromalg/graphs.hpp"
#include "chromalg/survey.hpp"

namespace py = pybind11;
using namespace chromalg;

namespace {

py::int_ to_pyint(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int from_pyint(const py::int_& o) { return Int(o.attr("__str__")().cast<std::string>()); }

py::list coeff_list(const IntPoly& p) {
  py::list out;
  for (int i = 0; i <= p.degree(); ++i) out.append(to_pyint(p.coeff(i)));
  return out;
}

IntPoly poly_from_object(const py::object& o) {
  if (py::isinstance<IntPoly>(o)) return o.cast<IntPoly>();
  if (py::isinstance<py::str>(o)) return parse_poly(o.cast<std::string>());
  std::vector<Int> coeffs;
  for (const auto& item : o.cast<py::sequence>())
    coeffs.push_back(from_pyint(py::int_(item)));
  return IntPoly(std::move(coeffs));
}

Graph graph_from(int n, const std::vector<std::pair<int, int>>& edges) {
  return make_graph(n, edges);
}

py::dict galois_dict(const GaloisResult& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["name"] = r.name;
  if (r.order != 0) d["order"] = to_pyint(r.order);
  d["method"] = r.method;
  d["samples"] = r.samples;
  d["ambiguous_with"] = r.ambiguous_with;
  return d;
}

py::dict realization_dict(const RealizationResult& r) {
  py::dict d;
  d["family"] = family_to_string(r.family);
  d["factor"] = format_poly(r.factor);
  d["shift"] = to_pyint(r.shift);
  d["vertices"] = r.vertex_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact chromatic polynomials, integer factorization, Galois groups, "
            "and chromatic-root realization search";

  py::class_<IntPoly>(m, "Poly")
      .def(py::init([](const py::object& o) { return poly_from_object(o); }))
      .def("degree", &IntPoly::degree)
      .def("is_monic", &IntPoly::is_monic)
      .def("coeffs", &coeff_list)
      .def("eval", [](const IntPoly& p, const py::int_& v) { return to_pyint(p.eval(from_pyint(v))); })
      .def("derivative", &IntPoly::derivative)
      .def("__add__", [](const IntPoly& a, const IntPoly& b) { return a + b; })
      .def("__sub__", [](const IntPoly& a, const IntPoly& b) { return a - b; })
      .def("__mul__", [](const IntPoly& a, const IntPoly& b) { return a * b; })
      .def("__neg__", [](const IntPoly& a) { return -a; })
      .def("__eq__", [](const IntPoly& a, const IntPoly& b) { return a == b; })
      .def("__str__", [](const IntPoly& p) { return format_poly(p); })
      .def("__repr__", [](const IntPoly& p) { return "Poly('" + format_poly(p) + "')"; });

  m.def("parse_poly", [](const std::string& s) { return parse_poly(s); });
  m.def("format_poly",
        [](const IntPoly& p, char var) { return format_poly(p, var); },
        py::arg("poly"), py::arg("var") = 'x');

  m.def("divrem", [](const py::object& f, const py::object& g, bool pseudo) {
          DivRem d = divrem(poly_from_object(f), poly_from_object(g),
                            pseudo ? DivMode::pseudo : DivMode::exact);
          return py::make_tuple(d.quotient, d.remainder, to_pyint(d.multiplier));
        },
        py::arg("f"), py::arg("g"), py::arg("pseudo") = false);
  m.def("shift", [](const py::object& f, const py::int_& a) {
    return shift(poly_from_object(f), from_pyint(a));
  });
  m.def("standardize", [](const py::object& f) {
    ShiftResult r = standardize(poly_from_object(f));
    return py::make_tuple(r.standard, to_pyint(r.shift));
  });
  m.def("discriminant",
        [](const py::object& f) { return to_pyint(discriminant(poly_from_object(f))); });
  m.def("sturm_count", [](const py::object& f, const py::object& lo, const py::object& hi,
                          bool lo_open, bool hi_open) {
          auto bound = [](const py::object& o, bool low) {
            if (o.is_none()) return low ? Bound::minus_infinity() : Bound::plus_infinity();
            return Bound::at(Rational::parse(o.attr("__str__")().cast<std::string>()));
          };
          return sturm_count(poly_from_object(f), bound(lo, true), bound(hi, false), lo_open,
                             hi_open);
        },
        py::arg("f"), py::arg("lo") = py::none(), py::arg("hi") = py::none(),
        py::arg("lo_open") = true, py::arg("hi_open") = false);
  m.def("cyclotomic", &cyclotomic);
  m.def("falling_factorial", &falling_factorial);
  m.def("stirling2", [](int mm, int k) { return to_pyint(stirling2(mm, k)); });
  m.def("numeric_roots",
        [](const py::object& f, double tol) { return numeric_roots(poly_from_object(f), tol); },
        py::arg("f"), py::arg("tol") = 1e-10);

  m.def("factor", [](const py::object& f) {
    Factorization fac = factor(poly_from_object(f));
    py::list factors;
    for (const auto& [g, mult] : fac.factors) factors.append(py::make_tuple(g, mult));
    return py::make_tuple(to_pyint(fac.content), factors);
  });
  m.def("is_irreducible",
        [](const py::object& f) { return is_irreducible(poly_from_object(f)); });
  m.def("classify",
        [](const py::object& f, int samples) {
          return galois_dict(classify(poly_from_object(f), samples));
        },
        py::arg("f"), py::arg("samples") = 2000);

  m.def("chromatic_polynomial",
        [](int n, const std::vector<std::pair<int, int>>& edges, int cap) {
          return chromatic_polynomial(graph_from(n, edges), cap);
        },
        py::arg("n"), py::arg("edges"), py::arg("cap") = 18);
  m.def("count_colourings",
        [](int n, const std::vector<std::pair<int, int>>& edges, int q) {
          return to_pyint(count_colourings(graph_from(n, edges), q));
        });

  m.def("ring_interesting_factor", &ring_interesting_factor);
  m.def("ring_quadratic", &ring_quadratic);
  m.def("ring_full", &ring_full);
  m.def("scaling_identity_check", &scaling_identity_check);
  m.def("cycle_interesting_factor", &cycle_interesting_factor);
  m.def("biclique_polynomial", [](int n, const std::vector<std::vector<int>>& sets) {
    BicliquePolys bp = biclique_polynomial(n, sets);
    return py::make_tuple(bp.full, bp.interesting);
  });
  m.def("complete_bipartite_F", &complete_bipartite_F);
  m.def("complete_bipartite_full", &complete_bipartite_full);
  m.def("theta_G", &theta_G);
  m.def("theta_full", &theta_full);
  m.def("theta_divides", &theta_divides);
  m.def("gen_theta_g", &gen_theta_g);
  m.def("gen_theta_f", &gen_theta_f);
  m.def("gen_theta_root_power_check", &gen_theta_root_power_check);
  m.def("gen_theta_chromatic", &gen_theta_chromatic);
  m.def("gen_theta_interesting", &gen_theta_interesting);

  m.def("exclusion_min_shift", [](const py::object& f, int max_shift) {
    ExclusionReport rep = exclusion_min_shift(AlgebraicTarget(poly_from_object(f)), max_shift);
    py::object candidate = rep.min_candidate ? py::cast(*rep.min_candidate) : py::none();
    return py::make_tuple(candidate, rep.excluded);
  });
  m.def("realize_quadratic", [](const py::object& f) {
    return realization_dict(realize_quadratic(AlgebraicTarget(poly_from_object(f))));
  });
  m.def("realize_quadratic_disc", [](const py::int_& d) {
    return realization_dict(realize_quadratic_disc(from_pyint(d)));
  });
  m.def("search_alpha_n",
        [](const py::object& f, int ring_max_entry, int biclique_max_n, int cycles_max_k,
           int max_shift) {
          SearchBounds bounds{ring_max_entry, biclique_max_n, cycles_max_k};
          py::list out;
          for (const auto& r :
               search_alpha_n(AlgebraicTarget(poly_from_object(f)), bounds, max_shift))
            out.append(realization_dict(r));
          return out;
        },
        py::arg("f"), py::arg("ring_max_entry") = 0, py::arg("biclique_max_n") = 0,
        py::arg("cycles_max_k") = 0, py::arg("max_shift") = 10);

  m.def("count_tuples", [](int n, int l) { return to_pyint(count_tuples(n, l)); });
  m.def("survey_run",
        [](int n, int l, int samples) {
          py::list records;
          SurveyTally tally =
              survey_run(n, l, std::nullopt,
                         [&records](const SurveyRecord& rec) {
                           py::dict d;
                           d["tuple"] = rec.tuple;
                           d["degree"] = rec.degree;
                           d["status"] = rec.irreducible ? "irreducible" : "reducible";
                           if (rec.group) d["group"] = rec.group->name;
                           d["factor"] = format_poly(rec.factor);
                           records.append(d);
                         },
                         {}, samples);
          py::dict t;
          t["n"] = tally.n;
          t["l"] = tally.l;
          t["total"] = tally.total;
          t["reducible"] = tally.reducible;
          t["counts"] = tally.counts;
          t["ambiguous"] = tally.ambiguous;
          return py::make_tuple(t, records);
        },
        py::arg("n"), py::arg("l"), py::arg("samples") = 2000);
}
