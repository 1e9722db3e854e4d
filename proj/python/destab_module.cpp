// Python bindings for the exact degeneration toolkit.
//
// The module mirrors the command-line surface: ideals and torus-character
// states go in, exact reports (plain dicts of strings and integers, rationals
// rendered as "p/q") come out.  All arithmetic is exact; nothing here rounds.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "destab/building.hpp"
#include "destab/errors.hpp"
#include "destab/ideal.hpp"
#include "destab/io.hpp"
#include "destab/kempf.hpp"
#include "destab/matrix.hpp"
#include "destab/state.hpp"
#include "destab/testconfig.hpp"
#include "destab/weights.hpp"

namespace py = pybind11;

namespace {

using namespace destab;

// Matrix rows accept integers or exact "p/q" strings.
using Scalar = std::variant<long long, std::string>;
using MatrixRows = std::vector<std::vector<Scalar>>;

Rational rat_of_scalar(const Scalar& s) {
  if (std::holds_alternative<long long>(s)) return rat_of(std::get<long long>(s));
  return rat_parse(std::get<std::string>(s));
}

ExactMatrix matrix_of(const MatrixRows& rows) {
  std::vector<RationalVec> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) {
    RationalVec r;
    r.reserve(row.size());
    for (const Scalar& v : row) r.push_back(rat_of_scalar(v));
    converted.push_back(std::move(r));
  }
  return ExactMatrix::from_rows(converted);
}

FramedOnePS framed(const WeightVector& weights, const std::optional<MatrixRows>& frame) {
  FramedOnePS lambda;
  lambda.weights = weights;
  lambda.frame = frame ? matrix_of(*frame) : ExactMatrix::identity(weights.size());
  return lambda;
}

// Exact JSON reports -> plain Python objects (dict/list/str/int/bool/None).
py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& v : j) out.append(json_to_py(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      throw InternalError("unexpected JSON node in a report");
  }
}

HomogeneousIdeal make_ideal(const std::vector<std::string>& variables,
                            const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const std::string& g : generators) gens.push_back(parse_polynomial(g, variables));
  return HomogeneousIdeal(variables, std::move(gens));
}

std::vector<std::string> generator_strings(const HomogeneousIdeal& I) {
  std::vector<std::string> out;
  out.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) out.push_back(polynomial_str(g, I.variables()));
  return out;
}

}  // namespace

PYBIND11_MODULE(destab, m) {
  m.doc() =
      "Exact rational toolkit for one-parameter degenerations: weight "
      "canonicalization, Hilbert data, flat limits, numerical invariants of "
      "test families, building points, and minimum-norm destabilizers.";

  // Error taxonomy: invalid input -> ValueError; failed verification oracles,
  // resource guards, and broken internal invariants -> RuntimeError.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Input) {
        PyErr_SetString(PyExc_ValueError, e.what());
      } else {
        PyErr_SetString(PyExc_RuntimeError, e.what());
      }
    }
  });

  // --- ideals -----------------------------------------------------------------

  py::class_<HomogeneousIdeal>(m, "Ideal",
                               "Homogeneous ideal in a named polynomial ring.")
      .def(py::init(&make_ideal), py::arg("variables"), py::arg("generators"))
      .def_property_readonly("variables",
                             [](const HomogeneousIdeal& I) { return I.variables(); })
      .def_property_readonly("generators", &generator_strings)
      .def("contains",
           [](const HomogeneousIdeal& I, const std::string& f) {
             return I.contains(parse_polynomial(f, I.variables()));
           },
           py::arg("polynomial"))
      .def("__repr__", [](const HomogeneousIdeal& I) {
        return ideal_json(I).dump();
      });

  m.def("load_ideal",
        [](const std::string& text_or_path) { return load_ideal(json_or_path_load(text_or_path)); },
        py::arg("text_or_path"),
        "Load an ideal from inline JSON or a JSON file path.");

  m.def("ideal_equal", &ideal_equal, py::arg("I"), py::arg("J"),
        "Exact equality of ideals (double inclusion via reduced bases).");

  m.def("hilbert_function", &hilbert_function, py::arg("I"), py::arg("k"),
        "dim of the degree-k graded piece of the coordinate ring.");

  m.def("hilbert_polynomial",
        [](const HomogeneousIdeal& I) {
          HilbertPolynomial hp = hilbert_polynomial(I);
          py::list coeffs;
          for (const Rational& c : hp.coeffs) coeffs.append(py::str(rat_str(c)));
          py::dict out;
          out["coeffs"] = coeffs;
          out["dim"] = hp.dim;
          out["window_start"] = hp.window_start;
          return out;
        },
        py::arg("I"),
        "Eventual polynomial of k -> hilbert_function(I, k); coeffs[j] multiplies k^j.");

  m.def("projective_dimension", &projective_dimension, py::arg("I"));

  m.def("initial_ideal",
        [](const HomogeneousIdeal& I, const WeightVector& a) { return initial_ideal(I, a); },
        py::arg("I"), py::arg("weights"),
        "Initial ideal under the minimal-weight convention (the t -> 0 limit).");

  m.def("veronese_embedding",
        [](const HomogeneousIdeal& I, int r) {
          VeroneseEmbedding emb = veronese_embedding(I, r);
          std::vector<std::string> labels;
          labels.reserve(emb.basis.size());
          for (const Monomial& mono : emb.basis)
            labels.push_back(monomial_str(mono, I.variables()));
          return py::make_tuple(labels, emb.ideal);
        },
        py::arg("I"), py::arg("r"),
        "Re-embedding by the degree-r standard monomials: (coordinate labels, ideal).");

  // --- weight vectors ----------------------------------------------------------

  m.def("canonicalize",
        [](const WeightVector& a) { return canonicalize(a).canonical; },
        py::arg("weights"),
        "Canonical representative of the ray-plus-shift class: min entry 0, gcd 1.");

  m.def("are_t_equivalent", &are_T_equivalent, py::arg("a"), py::arg("b"),
        "True iff the two weight vectors present the same degeneration ray.");

  m.def("is_central", &is_central, py::arg("weights"));

  m.def("sl_norm_squared",
        [](const WeightVector& a) { return rat_str(sl_norm_squared(a)); },
        py::arg("weights"),
        "Squared norm of the trace-free part, as an exact rational string.");

  m.def("lift_exponent",
        [](const WeightVector& a, std::size_t nvars, int r, int l) {
          return lift_exponent(a, nvars, r, l);
        },
        py::arg("weights"), py::arg("nvars"), py::arg("r"), py::arg("l"),
        "Weights induced on degree r*l monomial coordinates from degree-r ones.");

  // --- states and the Hilbert-Mumford weight ------------------------------------

  py::class_<StateSet>(m, "State",
                       "Finite set of integer torus characters.")
      .def(py::init([](std::vector<std::vector<long long>> characters,
                       std::vector<std::string> labels) {
             return make_state(std::move(characters), std::move(labels));
           }),
           py::arg("characters"), py::arg("labels") = std::vector<std::string>{})
      .def_readonly("characters", &StateSet::characters)
      .def_readonly("labels", &StateSet::labels)
      .def_property_readonly("ambient", &StateSet::ambient);

  m.def("state_of_hilbert_point", &state_of_hilbert_point, py::arg("I"), py::arg("d"),
        "Pluecker characters of the degree-d graded piece of I.");

  m.def("mu_report",
        [](const StateSet& S, const WeightVector& a) {
          return json_to_py(weight_report_json(mu_report(S, a), false));
        },
        py::arg("state"), py::arg("weights"),
        "Hilbert-Mumford weight mu, its normalization nu, and the argmax set.");

  m.def("mu_value",
        [](const StateSet& S, const std::vector<Scalar>& a) {
          RationalVec v;
          v.reserve(a.size());
          for (const Scalar& s : a) v.push_back(rat_of_scalar(s));
          return rat_str(mu_value(S, v));
        },
        py::arg("state"), py::arg("point"),
        "Piecewise-linear extension of mu to rational apartment points.");

  m.def("s_prime_membership", &s_prime_membership, py::arg("I"), py::arg("weights"),
        "True iff the minimal-weight coordinates already cut out the empty scheme.");

  // --- minimum-norm destabilizer -------------------------------------------------

  m.def("min_norm_point",
        [](const StateSet& S, long long degree) {
          return json_to_py(min_norm_json(min_norm_point(S, degree), false));
        },
        py::arg("state"), py::arg("degree"),
        "Minimum-norm point of the centered character hull with its certificate.");

  m.def("min_norm_point_oracle",
        [](const StateSet& S, long long degree) {
          return json_to_py(min_norm_json(min_norm_point_oracle(S, degree), false));
        },
        py::arg("state"), py::arg("degree"),
        "Independent face-enumeration cross-check for min_norm_point.");

  m.def("optimal_destabilizer",
        [](const StateSet& S, long long degree) {
          return json_to_py(destabilizer_json(optimal_destabilizer(S, degree), false));
        },
        py::arg("state"), py::arg("degree"),
        "Unique maximally destabilizing direction, or Stable when the hull "
        "contains the origin.");

  // --- degenerations and invariants ---------------------------------------------

  m.def("flat_limit",
        [](const HomogeneousIdeal& I, const WeightVector& a, int bound) {
          return flat_limit(I, a, bound);
        },
        py::arg("I"), py::arg("weights"), py::arg("flatness_check_bound") = 8,
        "Flat limit of V(I) under x_i -> t^{a_i} x_i as t -> 0, with the "
        "dimension-count agreement certificate.");

  m.def("df_invariant",
        [](const HomogeneousIdeal& I, const WeightVector& a) {
          return json_to_py(df_json(df_invariant(I, a), false));
        },
        py::arg("I"), py::arg("weights"),
        "Donaldson-Futaki invariant of the degeneration of V(I) along the weights.");

  m.def("almost_trivial_necessary",
        [](const HomogeneousIdeal& I, const WeightVector& a) {
          return json_to_py(almost_trivial_json(almost_trivial_necessary(I, a)));
        },
        py::arg("I"), py::arg("weights"),
        "Necessary condition for triviality away from codimension two.");

  m.def("k_stability_sweep",
        [](const HomogeneousIdeal& I, int r_max, int denominator_bound) {
          return json_to_py(sweep_json(k_stability_sweep(I, r_max, denominator_bound), false));
        },
        py::arg("I"), py::arg("r_max"), py::arg("denominator_bound"),
        "Exhaustive small-denominator stability sweep across embedding exponents.");

  // --- building points ------------------------------------------------------------

  m.def("building_point",
        [](const WeightVector& weights, const std::optional<MatrixRows>& frame) {
          return json_to_py(building_point_json(building_point_of(framed(weights, frame)), false));
        },
        py::arg("weights"), py::arg("frame") = py::none(),
        "Flag and gaps of the building point of a framed one-parameter subgroup.");

  m.def("same_building_point",
        [](const WeightVector& w1, const std::optional<MatrixRows>& f1, const WeightVector& w2,
           const std::optional<MatrixRows>& f2) {
          return same_building_point(building_point_of(framed(w1, f1)),
                                     building_point_of(framed(w2, f2)));
        },
        py::arg("weights1"), py::arg("frame1"), py::arg("weights2"), py::arg("frame2"));

  m.def("parabolic_contains",
        [](const WeightVector& weights, const std::optional<MatrixRows>& frame,
           const MatrixRows& g) {
          return parabolic_contains(framed(weights, frame), matrix_of(g));
        },
        py::arg("weights"), py::arg("frame"), py::arg("g"),
        "True iff conjugating g by the subgroup has a limit as t -> 0.");

  m.def("verify_frame_twist",
        [](const WeightVector& weights, const std::optional<MatrixRows>& frame,
           const MatrixRows& p) {
          return verify_frame_twist(framed(weights, frame), matrix_of(p));
        },
        py::arg("weights"), py::arg("frame"), py::arg("p"),
        "Certifies the gauge cocycle identity behind conjugation invariance.");
}
