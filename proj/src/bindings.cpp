#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walpha/cubic.hpp"
#include "walpha/embeddings.hpp"
#include "walpha/fpp.hpp"
#include "walpha/models.hpp"
#include "walpha/projections.hpp"
#include "walpha/sampling.hpp"

namespace py = pybind11;
using namespace walpha;

namespace {

std::vector<PrimalVec> seeded_samples(const WAlphaSpace& s, long count,
                                      std::uint64_t seed) {
  return sample_members(s, count, seed);
}

}  // namespace

PYBIND11_MODULE(_walpha, m) {
  m.doc() = "Exact arithmetic for the l1-predual hyperplanes of c";

  py::register_exception<Error>(m, "WalphaError");

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const std::string& s) { return Rational::parse(s); }))
      .def(py::init<long>())
      .def(py::init<long, long>())
      .def("__str__", &Rational::str)
      .def("__repr__",
           [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
      .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
      .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
      .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
      .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
      .def("__truediv__",
           [](const Rational& a, const Rational& b) { return a / b; })
      .def("__neg__", [](const Rational& a) { return -a; })
      .def("__abs__", &Rational::abs)
      .def("__hash__",
           [](const Rational& r) { return py::hash(py::str(r.str())); });
  py::implicitly_convertible<std::string, Rational>();
  py::implicitly_convertible<long, Rational>();

  py::class_<DualVec>(m, "DualVec")
      .def(py::init(&parse_dual))
      .def_static("zero", &DualVec::zero)
      .def_static("basis", &DualVec::basis)
      .def("entry", &DualVec::entry)
      .def("l1_norm", &DualVec::l1_norm)
      .def("signed_tail_from", &DualVec::signed_tail_from)
      .def("abs_tail_from", &DualVec::abs_tail_from)
      .def("is_zero", &DualVec::is_zero)
      .def("finitely_supported", &DualVec::finitely_supported)
      .def("scaled", &DualVec::scaled)
      .def("shifted", &DualVec::shifted)
      .def("__add__", [](const DualVec& a, const DualVec& b) { return a + b; })
      .def("__sub__", [](const DualVec& a, const DualVec& b) { return a - b; })
      .def("__eq__", [](const DualVec& a, const DualVec& b) { return a == b; })
      .def("__str__", &DualVec::str)
      .def("__repr__",
           [](const DualVec& v) { return "DualVec('" + v.str() + "')"; });
  py::implicitly_convertible<std::string, DualVec>();

  py::class_<PrimalVec>(m, "PrimalVec")
      .def(py::init(&parse_primal))
      .def(py::init<std::vector<Rational>, Rational>())
      .def_static("constant", &PrimalVec::constant)
      .def_static("unit", &PrimalVec::unit)
      .def("entry", &PrimalVec::entry)
      .def("limit", &PrimalVec::limit)
      .def("sup_norm", &PrimalVec::sup_norm)
      .def("scaled", &PrimalVec::scaled)
      .def("__add__",
           [](const PrimalVec& a, const PrimalVec& b) { return a + b; })
      .def("__sub__",
           [](const PrimalVec& a, const PrimalVec& b) { return a - b; })
      .def("__eq__",
           [](const PrimalVec& a, const PrimalVec& b) { return a == b; })
      .def("__str__", &PrimalVec::str)
      .def("__repr__",
           [](const PrimalVec& v) { return "PrimalVec('" + v.str() + "')"; });
  py::implicitly_convertible<std::string, PrimalVec>();

  m.def("parse_dual", &parse_dual);
  m.def("parse_primal", &parse_primal);
  m.def("pairing", &pairing);
  m.def("c_pairing", &c_pairing);

  py::class_<WAlphaSpace>(m, "WAlphaSpace")
      .def(py::init<DualVec>())
      .def_property_readonly("alpha", &WAlphaSpace::alpha)
      .def("contains", &WAlphaSpace::contains)
      .def("rstar", &WAlphaSpace::rstar);

  py::enum_<TriBool>(m, "TriBool")
      .value("Yes", TriBool::Yes)
      .value("No", TriBool::No)
      .value("Undecided", TriBool::Undecided);

  py::class_<ClassReport>(m, "ClassReport")
      .def_readonly("in_C", &ClassReport::in_C)
      .def_readonly("in_C0", &ClassReport::in_C0)
      .def_readonly("in_A", &ClassReport::in_A)
      .def_readonly("in_A0", &ClassReport::in_A0)
      .def_readonly("in_M", &ClassReport::in_M)
      .def_readonly("in_G", &ClassReport::in_G)
      .def_readonly("notes", &ClassReport::notes);

  py::class_<FppVerdict>(m, "FppVerdict")
      .def_readonly("stable", &FppVerdict::stable)
      .def_readonly("almost_isometric_r", &FppVerdict::almost_isometric_r);

  m.def("classify", &classify);
  m.def("fpp_verdict", &fpp_verdict, py::arg("space"),
        py::arg("eps") = std::optional<Rational>());
  m.def("contains_c", &contains_c);
  m.def("bm_distance_c", &bm_distance_c);
  m.def("almost_isometric_r", &almost_isometric_r);
  m.def("projection_constant_bound", &projection_constant_bound);
  m.def("sample_members", &seeded_samples, py::arg("space"), py::arg("count"),
        py::arg("seed") = 0);

  py::class_<RepresentingMatrix>(m, "RepresentingMatrix")
      .def(py::init<DualVec>())
      .def("a", &RepresentingMatrix::a)
      .def("row_abs_sum", &RepresentingMatrix::row_abs_sum)
      .def("basis_vector", &RepresentingMatrix::basis_vector)
      .def("delta_direct", &RepresentingMatrix::delta_direct)
      .def("delta_recursive", &RepresentingMatrix::delta_recursive)
      .def("expand_in_basis", &RepresentingMatrix::expand_in_basis);

  py::class_<Embedding>(m, "Embedding")
      .def_readonly("source", &Embedding::source)
      .def_readonly("target", &Embedding::target)
      .def_readonly("r", &Embedding::r)
      .def_readonly("K", &Embedding::K)
      .def_readonly("s", &Embedding::s)
      .def_readonly("N", &Embedding::N)
      .def("apply",
           [](const Embedding& e, const PrimalVec& x) { return e.apply(x); });

  py::class_<EmbeddingReport>(m, "EmbeddingReport")
      .def_readonly("checked", &EmbeddingReport::checked)
      .def("all_passed", &EmbeddingReport::all_passed);

  m.def("embed_general", &embed_general);
  m.def("embed_finite_support", &embed_finite_support);
  m.def("verify_isometry", &verify_isometry);
  m.def("component_property_check", &component_property_check);

  py::class_<PrimalProjection>(m, "PrimalProjection")
      .def_readonly("r", &PrimalProjection::r)
      .def_readonly("stable_from", &PrimalProjection::stable_from)
      .def("apply", [](const PrimalProjection& p, const PrimalVec& x) {
        return p.apply(x);
      })
      .def("column", [](const PrimalProjection& p, long m_) {
        return p.column(m_);
      });

  py::class_<NormBound>(m, "NormBound")
      .def_readonly("bound", &NormBound::bound)
      .def_readonly("certified", &NormBound::certified);

  m.def("thm71_projection", &thm71_projection);
  m.def("operator_norm_upper", &operator_norm_upper);
  m.def("one_complemented_copy_available", &one_complemented_copy_available);

  py::class_<Omega2Functional>(m, "Omega2Functional")
      .def(py::init<DualVec, DualVec>())
      .def_readonly("row1", &Omega2Functional::row1)
      .def_readonly("row2", &Omega2Functional::row2)
      .def("l1_norm", &Omega2Functional::l1_norm);

  py::class_<Omega2Member>(m, "Omega2Member")
      .def(py::init<PrimalVec, PrimalVec>())
      .def_static("all_ones", &Omega2Member::all_ones)
      .def_static("zero", &Omega2Member::zero)
      .def_readonly("row1", &Omega2Member::row1)
      .def_readonly("row2", &Omega2Member::row2)
      .def("sup_norm", &Omega2Member::sup_norm);

  py::class_<Omega2Model>(m, "Omega2Model")
      .def_readonly("x1star", &Omega2Model::x1star)
      .def_readonly("x2star", &Omega2Model::x2star);

  m.def("build_model", &build_model);
  m.def("model_catalog", &model_catalog);
  m.def("model_membership", &model_membership);
  m.def("model_rstar", &model_rstar);
  m.def("condition_S_check", &condition_S_check);
  m.def("condition_P_witness_check", &condition_P_witness_check);

  py::class_<SPlusVec>(m, "SPlusVec")
      .def(py::init<DualVec>())
      .def_property_readonly("vec", &SPlusVec::vec);
  m.def("shift_splus", &shift_splus);

  py::class_<Remark52Report>(m, "Remark52Report")
      .def_readonly("norm_one", &Remark52Report::norm_one)
      .def_readonly("witness_supplied", &Remark52Report::witness_supplied)
      .def_readonly("attainment", &Remark52Report::attainment)
      .def_readonly("affine_class", &Remark52Report::affine_class);
  m.def("remark52_report", &remark52_report, py::arg("alpha"),
        py::arg("witness") = std::optional<PrimalVec>());
}
