#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syz/binomial.hpp"
#include "syz/constructions.hpp"
#include "syz/criterion.hpp"
#include "syz/errors.hpp"
#include "syz/family_io.hpp"
#include "syz/inequalities.hpp"
#include "syz/report.hpp"

namespace py = pybind11;
using namespace syz;

namespace {

py::object big_int(const BigInt& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)); }

py::object fraction(const Rational& v) {
  static const auto Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_decimal(v));
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<int> exponents_of(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

MonomialFamily make_family(int N, int d, const std::vector<std::vector<int>>& members) {
  std::vector<Monomial> ms;
  for (const auto& e : members) ms.emplace_back(e);
  return MonomialFamily(N, d, std::move(ms));
}

std::pair<std::int64_t, std::int64_t> range_arg(const py::object& r) {
  if (py::isinstance<py::int_>(r)) {
    const auto v = r.cast<std::int64_t>();
    return {v, v};
  }
  return r.cast<std::pair<std::int64_t, std::int64_t>>();
}

}  // namespace

PYBIND11_MODULE(syzstab, m) {
  m.doc() = "Certified stable syzygy bundles of monomial families";

  static py::exception<Error> base(m, "SyzError");
  static py::exception<DimensionError> dim(m, "DimensionError", base.ptr());
  static py::exception<PreconditionError> pre(m, "PreconditionError", base.ptr());
  static py::exception<NoFamilyExists> nofam(m, "NoFamilyExists", base.ptr());
  static py::exception<RoutingError> route(m, "RoutingError", base.ptr());
  static py::exception<SearchExhausted> exhausted(m, "SearchExhausted", base.ptr());
  static py::exception<SizeError> size(m, "SizeError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<InternalConsistencyError> internal(m, "InternalConsistencyError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DimensionError& e) {
      dim(e.what());
    } catch (const PreconditionError& e) {
      pre(e.what());
    } catch (const NoFamilyExists& e) {
      nofam(e.what());
    } catch (const RoutingError& e) {
      route(e.what());
    } catch (const SearchExhausted& e) {
      exhausted(e.what());
    } catch (const SizeError& e) {
      size(e.what());
    } catch (const ParseError& e) {
      parse(e.what());
    } catch (const InternalConsistencyError& e) {
      internal(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::class_<Monomial>(m, "Monomial")
      .def(py::init<std::vector<int>>(), py::arg("exponents"))
      .def_property_readonly("exponents", &exponents_of)
      .def_property_readonly("degree", &Monomial::degree)
      .def_property_readonly("num_vars", &Monomial::num_vars)
      .def("missing_variables", &Monomial::missing_variables)
      .def("__mul__", &Monomial::operator*)
      .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
      .def("__hash__", [](const Monomial& a) { return py::hash(py::tuple(py::cast(exponents_of(a)))); })
      .def("__str__", &Monomial::to_string)
      .def("__repr__", [](const Monomial& a) { return "Monomial(" + a.to_string() + ")"; });

  m.def("gcd", [](const Monomial& a, const Monomial& b) { return syz::gcd(a, b); });
  m.def("lcm", [](const Monomial& a, const Monomial& b) { return syz::lcm(a, b); });
  m.def("divides", &divides, py::arg("g"), py::arg("m"));

  py::class_<MonomialFamily>(m, "MonomialFamily")
      .def(py::init<int, int, std::vector<Monomial>>(), py::arg("N"), py::arg("d"), py::arg("members"))
      .def(py::init(&make_family), py::arg("N"), py::arg("d"), py::arg("members"))
      .def_property_readonly("N", &MonomialFamily::N)
      .def_property_readonly("d", &MonomialFamily::d)
      .def_property_readonly("members",
                             [](const MonomialFamily& f) { return std::vector<Monomial>(f.begin(), f.end()); })
      .def("contains", &MonomialFamily::contains)
      .def("__len__", &MonomialFamily::size)
      .def("__eq__", [](const MonomialFamily& a, const MonomialFamily& b) { return a == b; })
      .def("__iter__", [](const MonomialFamily& f) { return py::make_iterator(f.begin(), f.end()); },
           py::keep_alive<0, 1>())
      .def("to_text", &format_family)
      .def("__repr__", [](const MonomialFamily& f) {
        return "MonomialFamily(N=" + std::to_string(f.N()) + ", d=" + std::to_string(f.d()) +
               ", n=" + std::to_string(f.size()) + ")";
      });
  m.def("parse_family", &parse_family, py::arg("text"));

  m.def("binomial", [](std::int64_t a, std::int64_t b) { return big_int(binomial(a, b)); });
  m.def("enumerate_monomials", &enumerate_monomials, py::arg("N"), py::arg("e"));
  m.def("faces_family", &faces_family, py::arg("N"), py::arg("d"));
  m.def("hypertetrahedron", &hypertetrahedron, py::arg("N"), py::arg("d"));

  py::enum_<Verdict>(m, "Verdict")
      .value("StableCertified", Verdict::StableCertified)
      .value("SemistableCertified", Verdict::SemistableCertified)
      .value("CriterionViolated", Verdict::CriterionViolated)
      .value("NotSemistable", Verdict::NotSemistable);

  py::class_<GcdWitness>(m, "GcdWitness")
      .def_readonly("g", &GcdWitness::g)
      .def_readonly("gcd_degree", &GcdWitness::gcd_degree)
      .def_readonly("k", &GcdWitness::k)
      .def_readonly("margin", &GcdWitness::margin);

  py::class_<StabilityCertificate>(m, "StabilityCertificate")
      .def_readonly("verdict", &StabilityCertificate::verdict)
      .def_readonly("N", &StabilityCertificate::N)
      .def_readonly("d", &StabilityCertificate::d)
      .def_readonly("n", &StabilityCertificate::n)
      .def_readonly("rank_one", &StabilityCertificate::rank_one)
      .def_readonly("method", &StabilityCertificate::method)
      .def_readonly("witnesses", &StabilityCertificate::witnesses)
      .def_readonly("worst", &StabilityCertificate::worst)
      .def_property_readonly("min_margin", &StabilityCertificate::min_margin)
      .def(
          "to_json",
          [](const StabilityCertificate& c, bool witnesses) {
            return json_to_py(certificate_json(c, std::nullopt, witnesses));
          },
          py::arg("witnesses") = false);

  m.def("is_m_primary", &is_m_primary);
  m.def("criterion_margin", &criterion_margin, py::arg("d"), py::arg("n"), py::arg("gcd_degree"), py::arg("k"));
  m.def("check_family", &check_family);
  m.def("brute_force_check", &brute_force_check, py::arg("family"), py::arg("max_size") = default_oracle_bound());
  m.def("splitting_type_p1", [](const MonomialFamily& f) { return splitting_type_p1(f).twists; });
  m.def("is_semistable_p1", &is_semistable_p1);
  m.def("strategy_x0_holds", &strategy_x0_holds);

  m.def(
      "dispatch",
      [](int N, int d, std::int64_t n) {
        auto c = dispatch(N, d, n);
        return py::make_tuple(c.route.describe(), std::move(c.family));
      },
      py::arg("N"), py::arg("d"), py::arg("n"));
  m.def("admissible_n", &admissible_n);
  m.def("decompose_faces_case", [](int N, int d, std::int64_t n) {
    const auto c = decompose_faces_case(N, d, n);
    return py::make_tuple(c.r, c.l, c.i);
  });
  m.def("gen_p1", &gen_p1, py::arg("d"), py::arg("n"));
  m.def("gen_case326", &gen_case326);
  m.def("gen_225_semistable", &gen_225_semistable);
  m.def("gen_prop_faces", &gen_prop_faces);
  m.def("gen_faces_and_dots", &gen_faces_and_dots);

  m.def("eval_T", [](std::int64_t N, std::int64_t d, std::int64_t dJ, std::int64_t r, std::int64_t l) {
    return fraction(eval_T(N, d, dJ, r, l));
  });
  m.def("eval_U", [](std::int64_t N, std::int64_t d, std::int64_t r, std::int64_t l) {
    return fraction(eval_U(N, d, r, l));
  });
  m.def("eval_V", [](std::int64_t d, std::int64_t dJ, std::int64_t N) { return fraction(eval_V(d, dJ, N)); });
  m.def("eval_Q", [](std::int64_t N, std::int64_t d, std::int64_t dJ, std::int64_t t) {
    return fraction(eval_Q(N, d, dJ, t));
  });
  m.def("eval_P", [](std::int64_t np, std::int64_t kp, std::int64_t N, std::int64_t d, std::int64_t dJ,
                     std::int64_t i) { return fraction(eval_P(np, kp, N, d, dJ, i)); });
  m.def("brenner2_gap", [](std::int64_t N, std::int64_t d) { return fraction(brenner2_gap(N, d)); });

  m.def(
      "audit",
      [](const std::string& function, const py::object& N, const py::object& d, std::size_t samples,
         std::uint64_t seed) {
        SweepRanges g;
        std::tie(g.N_min, g.N_max) = range_arg(N);
        std::tie(g.d_min, g.d_max) = range_arg(d);
        g.samples = samples;
        g.seed = seed;
        auto out = json_to_py(sweep_summary_json(sweep(inequality_from_string(function), g, false)));
        if (!out["min"].is_none()) out["min"] = py::module_::import("fractions").attr("Fraction")(out["min"]);
        return out;
      },
      py::arg("function"), py::arg("N") = py::make_tuple(3, 5), py::arg("d") = py::make_tuple(2, 10),
      py::arg("samples") = 10000, py::arg("seed") = 1);
}
