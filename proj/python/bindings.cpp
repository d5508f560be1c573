#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "esf/combinatorics.hpp"
#include "esf/jordancalc.hpp"
#include "esf/oracle.hpp"
#include "esf/rs.hpp"
#include "esf/weyl.hpp"

namespace py = pybind11;
using namespace esf;

namespace {

std::vector<Rational> rationals(const std::vector<py::object>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) {
    Rational q(py::str(v).cast<std::string>());
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

LineCoeffs make_coeffs(const Bipartition& bp, const std::vector<py::object>& alpha, const std::vector<py::object>& beta) {
  const auto len = static_cast<std::size_t>(bp.lambda().length());
  if (alpha.size() > len || beta.size() > len) throw std::invalid_argument("more coefficients than rows of lambda");
  LineCoeffs c = zero_coeffs(bp);
  auto a = rationals(alpha), b = rationals(beta);
  std::copy(a.begin(), a.end(), c.alpha.begin());
  std::copy(b.begin(), b.end(), c.beta.begin());
  if (c.is_zero()) throw std::invalid_argument("all coefficients are zero");
  return c;
}

py::dict row_dict(const RSRow& r) {
  py::dict d;
  d["mu"] = r.bp.mu.to_string();
  d["nu"] = r.bp.nu.to_string();
  d["T"] = r.T;
  d["Tprime"] = r.Tprime;
  d["w"] = r.w;
  d["length"] = length(r.w);
  d["consensus"] = r.consensus;
  return d;
}

RSOptions rs_opts(int samples) {
  RSOptions o;
  o.samples = samples;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exotic nilpotent cone combinatorics, line calculus and the geometric exotic RS correspondence";

  py::register_exception<SamplerError>(m, "SamplerError", PyExc_RuntimeError);
  py::register_exception<ConsensusError>(m, "ConsensusError", PyExc_RuntimeError);
  py::register_exception<BijectionError>(m, "BijectionError", PyExc_RuntimeError);

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<int>>(), py::arg("parts") = std::vector<int>{})
      .def_static("parse", &Partition::parse)
      .def_property_readonly("parts", &Partition::parts)
      .def("size", &Partition::size)
      .def("__len__", &Partition::length)
      .def("__str__", &Partition::to_string)
      .def("__repr__", [](const Partition& p) { return "Partition(" + p.to_string() + ")"; })
      .def(py::self == py::self)
      .def("__hash__", [](const Partition& p) { return py::hash(py::tuple(py::cast(p.parts()))); });

  py::class_<Bipartition>(m, "Bipartition")
      .def(py::init([](const Partition& mu, const Partition& nu) { return Bipartition{mu, nu}; }),
           py::arg("mu"), py::arg("nu"))
      .def(py::init(&Bipartition::parse), py::arg("text"))
      .def_readonly("mu", &Bipartition::mu)
      .def_readonly("nu", &Bipartition::nu)
      .def("size", &Bipartition::size)
      .def("lambda_", &Bipartition::lambda)
      .def("__str__", &Bipartition::to_string)
      .def("__repr__", [](const Bipartition& b) { return "Bipartition('" + b.to_string() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const Bipartition& b) { return py::hash(py::str(b.to_string())); });

  py::class_<StandardBitableau>(m, "StandardBitableau")
      .def(py::init([](std::vector<std::vector<int>> left, std::vector<std::vector<int>> right) {
             StandardBitableau t{std::move(left), std::move(right)};
             t.validate();
             return t;
           }),
           py::arg("left"), py::arg("right"))
      .def_readonly("left", &StandardBitableau::left)
      .def_readonly("right", &StandardBitableau::right)
      .def("shape", &StandardBitableau::shape)
      .def("__str__", &StandardBitableau::display)
      .def("__repr__", [](const StandardBitableau& t) { return "StandardBitableau(" + t.display() + ")"; })
      .def(py::self == py::self);

  py::class_<SignedPerm>(m, "SignedPerm")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("parse", &SignedPerm::parse)
      .def_static("identity", &SignedPerm::identity)
      .def_property_readonly("images", &SignedPerm::images)
      .def("inverse", &SignedPerm::inverse)
      .def("display", &SignedPerm::display)
      .def("__mul__", &SignedPerm::operator*)
      .def("__call__", &SignedPerm::operator())
      .def("__str__", &SignedPerm::to_string)
      .def("__repr__", [](const SignedPerm& w) { return "SignedPerm('" + w.to_string() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const SignedPerm& w) { return py::hash(py::str(w.to_string())); });

  m.def("enumerate_partitions", &enumerate_partitions, py::arg("k"));
  m.def("enumerate_bipartitions", &enumerate_bipartitions, py::arg("n"));
  m.def("enumerate_syb", &enumerate_syb, py::arg("bp"));
  m.def("b_dim", &b_dim, py::arg("bp"));
  m.def("transpose", &transpose, py::arg("partition"));
  m.def("shape_after_step", &shape_after_step, py::arg("t"), py::arg("i"));
  m.def(
      "removable_boxes",
      [](const Bipartition& bp) {
        std::vector<std::tuple<Bipartition, std::string, int>> out;
        for (const auto& b : removable_boxes(bp)) out.emplace_back(b.smaller, to_string(b.side), b.row);
        return out;
      },
      py::arg("bp"));
  m.def("predict_bvariety_dim", &predict_bvariety_dim, py::arg("bp"), py::arg("removed"));
  m.def("dim2_shapes", &dim2_shapes, py::arg("n"));

  m.def("rho", &rho_of, py::arg("bp"));
  m.def(
      "predict_line",
      [](const Bipartition& bp, const std::vector<py::object>& alpha, const std::vector<py::object>& beta) {
        auto c = make_coeffs(bp, alpha, beta);
        auto k = predict_k(bp, c);
        py::dict d;
        d["quotient_lambda"] = predict_quotient_lambda(bp, c);
        d["in_cxv"] = k.in_cxv;
        d["k"] = k.k ? py::cast(*k.k) : py::none();
        d["l"] = predict_l(bp, c);
        d["etype_after"] = satisfies_perp(bp, c) ? py::cast(predict_etype_after_line(bp, c)) : py::none();
        return d;
      },
      py::arg("bp"), py::arg("alpha"), py::arg("beta") = std::vector<py::object>{},
      "Closed-form predictions for the line with the given coefficients (ints, Fractions or strings).");
  m.def(
      "measure_line",
      [](const Bipartition& bp, const std::vector<py::object>& alpha, const std::vector<py::object>& beta) {
        auto c = make_coeffs(bp, alpha, beta);
        auto p = build_normal_form(bp);
        auto meas = measure_line(p, Subspace::span({line_vector(bp, c)}, p.space.dim()));
        py::dict d;
        d["quotient_lambda"] = meas.quotient_lambda;
        d["in_cxv"] = meas.in_cxv;
        d["k"] = meas.k ? py::cast(*meas.k) : py::none();
        d["l"] = meas.l;
        d["etype_after"] = meas.etype_after;
        return d;
      },
      py::arg("bp"), py::arg("alpha"), py::arg("beta") = std::vector<py::object>{},
      "The same quantities computed by exact linear algebra on the normal form.");
  m.def(
      "sample_flag_tableau",
      [](const Bipartition& bp, const StandardBitableau& t, std::uint64_t seed) {
        Rng rng(seed);
        auto flag = sample_generic_flag(bp, t, rng);
        return *phi(build_normal_form(bp), flag).tableau;
      },
      py::arg("bp"), py::arg("t"), py::arg("seed"),
      "Samples a flag in the fibre over t and returns the bitableau read back from it.");

  m.def("enumerate_weyl", &enumerate_weyl, py::arg("n"));
  m.def("length", &length, py::arg("w"));
  m.def("embed_iota", &embed_iota, py::arg("w"));
  m.def("naive_rs", &naive_rs, py::arg("w"));
  m.def(
      "geometric_rs",
      [](const Bipartition& bp, const StandardBitableau& t, const StandardBitableau& tp, std::uint64_t seed,
         int samples) { return row_dict(geometric_rs(bp, t, tp, seed, rs_opts(samples))); },
      py::arg("bp"), py::arg("t"), py::arg("tprime"), py::arg("seed") = 0xE307C, py::arg("samples") = 8);
  m.def(
      "rs_table",
      [](int n, std::uint64_t seed, int samples) {
        py::list out;
        for (const auto& r : full_table(n, seed, rs_opts(samples))) out.append(row_dict(r));
        return out;
      },
      py::arg("n"), py::arg("seed") = 0xE307C, py::arg("samples") = 8);
  m.def(
      "naive_disagreements",
      [](int n, std::uint64_t seed, int samples) {
        std::vector<SignedPerm> out;
        for (const auto& d : compare_naive_geometric(n, seed, rs_opts(samples))) out.push_back(d.w);
        return out;
      },
      py::arg("n"), py::arg("seed") = 0xE307C, py::arg("samples") = 8);
}
