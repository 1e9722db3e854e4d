// destab: exact stability calculator for embedded projective schemes.
//
// Every subcommand reads JSON (inline or by path), computes over exact
// rationals, and prints a JSON or table report.  --check reruns the result
// through an independent oracle and fails loudly on disagreement.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "destab/building.hpp"
#include "destab/errors.hpp"
#include "destab/ideal.hpp"
#include "destab/io.hpp"
#include "destab/kempf.hpp"
#include "destab/state.hpp"
#include "destab/testconfig.hpp"
#include "destab/weights.hpp"

namespace {

using namespace destab;

struct CommonFlags {
  bool check = false;
  bool approx = false;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& c) {
  cmd->add_flag("--check", c.check, "rerun the result through an independent oracle");
  cmd->add_flag("--approx", c.approx, "add non-authoritative decimal renderings");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_str("json");
}

void emit(const Json& j, const CommonFlags& c) { std::cout << render(j, c.format); }

WeightVector doubled(const WeightVector& a) {
  WeightVector b = a;
  for (auto& v : b) v *= 2;
  return b;
}

WeightVector shifted(const WeightVector& a, long long s) {
  WeightVector b = a;
  for (auto& v : b) v += s;
  return b;
}

RationalVec to_rational_vec(const WeightVector& a) {
  RationalVec out;
  out.reserve(a.size());
  for (long long v : a) out.push_back(rat_of(v));
  return out;
}

// Homogeneity of mu and invariance of nu under rescaling and central shifts.
void check_weight_report(const StateSet& S, const WeightVector& a, const WeightReport& rep) {
  const WeightReport twice = mu_report(S, doubled(a));
  if (twice.mu != rep.mu * 2)
    throw OracleMismatch("mu is not homogeneous under doubling the weights");
  if (rep.nu) {
    const WeightReport shift = mu_report(S, shifted(a, 1));
    if (!twice.nu || !shift.nu)
      throw OracleMismatch("nu vanished under an equivalence transformation");
    if (cmp_normalized(*twice.nu, *rep.nu) != 0)
      throw OracleMismatch("nu changed under doubling the weights");
    if (cmp_normalized(*shift.nu, *rep.nu) != 0)
      throw OracleMismatch("nu changed under a central shift");
  }
}

// Exhaustive-face oracle agreement for the minimum-norm point.
void check_kempf(const StateSet& S, long long degree, const DestabilizerReport& rep) {
  const MinNormResult oracle = min_norm_point_oracle(S, degree);
  if (oracle.normsq != rep.certificate.normsq)
    throw OracleMismatch("face-enumeration oracle found a different minimum norm");
  if (oracle.q != rep.certificate.q)
    throw OracleMismatch("face-enumeration oracle found a different minimizer");
}

// The flat limit must contain every generator's initial form and preserve
// the Hilbert polynomial.
void check_flat_limit(const HomogeneousIdeal& I, const WeightVector& a,
                      const HomogeneousIdeal& limit) {
  for (const Polynomial& g : I.generators()) {
    if (!limit.contains(initial_form(g, a)))
      throw OracleMismatch("flat limit is missing a generator's initial form");
  }
  const HilbertPolynomial before = hilbert_polynomial(I);
  const HilbertPolynomial after = hilbert_polynomial(limit);
  if (before.coeffs != after.coeffs)
    throw OracleMismatch("flat limit changed the Hilbert polynomial");
}

// Exact covariance of the invariant: df(2a) = 2 df(a), df(a + 1) = df(a).
void check_df(const HomogeneousIdeal& I, const WeightVector& a, const Rational& df) {
  if (df_invariant(I, doubled(a)).df != df * 2)
    throw OracleMismatch("df is not homogeneous under doubling the weights");
  if (df_invariant(I, shifted(a, 1)).df != df)
    throw OracleMismatch("df changed under a central shift");
}

// Decides emptiness of V(I + (x_j : a_j minimal)) along two independent
// routes: variable-power saturation of the leading terms versus the
// certified Hilbert polynomial being identically zero.
void check_min_locus_emptiness(const HomogeneousIdeal& I, const WeightVector& a) {
  if (a.size() != I.nvars())
    throw InputError("weight vector length must match the variable count");
  long long lo = a[0];
  for (long long v : a) lo = std::min(lo, v);
  std::vector<Polynomial> cut;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == lo) cut.push_back(Polynomial::variable(I.nvars(), i));
  const HomogeneousIdeal J = ideal_sum(I, std::move(cut));
  const bool by_powers = is_empty_projective(J);
  const bool by_polynomial = hilbert_polynomial(J).dim == -1;
  if (by_powers != by_polynomial)
    throw OracleMismatch("the two emptiness tests for the minimal-coordinate locus disagree");
}

int run(CLI::App& app, int argc, char** argv) {
  app.require_subcommand(1);

  // --- mu / nu ---------------------------------------------------------------
  struct {
    std::string state, weights;
    CommonFlags c;
  } mu_opts, nu_opts;
  CLI::App* mu_cmd = app.add_subcommand("mu", "Hilbert-Mumford weight of a state");
  mu_cmd->add_option("--state", mu_opts.state, "state JSON or path")->required();
  mu_cmd->add_option("--weights", mu_opts.weights, "integer weight JSON or path")->required();
  add_common(mu_cmd, mu_opts.c);

  CLI::App* nu_cmd = app.add_subcommand("nu", "normalized weight mu/|a| of a state");
  nu_cmd->add_option("--state", nu_opts.state, "state JSON or path")->required();
  nu_cmd->add_option("--weights", nu_opts.weights, "integer weight JSON or path")->required();
  add_common(nu_cmd, nu_opts.c);

  // --- kempf -----------------------------------------------------------------
  struct {
    std::string state, ideal;
    long long degree = 0;
    bool has_degree = false;
    CommonFlags c;
  } kempf_opts;
  CLI::App* kempf_cmd =
      app.add_subcommand("kempf", "unique maximally destabilizing direction of a state");
  kempf_cmd->add_option("--state", kempf_opts.state, "state JSON or path");
  kempf_cmd->add_option("--ideal", kempf_opts.ideal,
                        "ideal JSON or path (uses the degree-d Hilbert point state)");
  kempf_cmd->add_option("--degree", kempf_opts.degree, "graded piece for --ideal")
      ->each([&](const std::string&) { kempf_opts.has_degree = true; });
  add_common(kempf_cmd, kempf_opts.c);

  // --- flatlimit / df / almost-trivial / sprime -------------------------------
  struct IdealWeights {
    std::string ideal, weights;
    CommonFlags c;
  } fl_opts, df_opts, at_opts, sp_opts;
  CLI::App* fl_cmd = app.add_subcommand("flatlimit", "flat limit of V(I) along a degeneration");
  CLI::App* df_cmd = app.add_subcommand("df", "Donaldson-Futaki invariant of a degeneration");
  CLI::App* at_cmd = app.add_subcommand(
      "almost-trivial", "necessary condition for triviality away from codimension two");
  CLI::App* sp_cmd = app.add_subcommand(
      "sprime", "does the minimal-weight coordinate locus miss the scheme");
  for (auto [cmd, opts] : {std::pair{fl_cmd, &fl_opts},
                           {df_cmd, &df_opts},
                           {at_cmd, &at_opts},
                           {sp_cmd, &sp_opts}}) {
    cmd->add_option("--ideal", opts->ideal, "ideal JSON or path")->required();
    cmd->add_option("--weights", opts->weights, "integer weight JSON or path")->required();
    add_common(cmd, opts->c);
  }

  // --- building canonical ------------------------------------------------------
  struct {
    std::string weights, frame;
    CommonFlags c;
  } bc_opts;
  CLI::App* building_cmd =
      app.add_subcommand("building", "rational points of the spherical building");
  building_cmd->require_subcommand(1);
  CLI::App* bc_cmd = building_cmd->add_subcommand(
      "canonical", "flag-plus-gaps point of a framed one-parameter subgroup");
  bc_cmd->add_option("--weights", bc_opts.weights, "integer weight JSON or path")->required();
  bc_cmd->add_option("--frame", bc_opts.frame, "invertible frame matrix (default identity)");
  add_common(bc_cmd, bc_opts.c);

  // --- lift ---------------------------------------------------------------------
  struct {
    std::string ideal, weights;
    int exponent = 2;
    CommonFlags c;
  } lift_opts;
  CLI::App* lift_cmd = app.add_subcommand(
      "lift", "weights induced on the power-l re-embedding coordinates");
  lift_cmd->add_option("--ideal", lift_opts.ideal, "ideal JSON or path")->required();
  lift_cmd->add_option("--weights", lift_opts.weights, "weights on the current coordinates")
      ->required();
  lift_cmd->add_option("--exponent", lift_opts.exponent, "power l of the re-embedding")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(lift_cmd, lift_opts.c);

  // --- sweep ----------------------------------------------------------------------
  struct {
    std::string ideal;
    int exponent = 1;
    int denominator_bound = 1;
    CommonFlags c;
  } sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "exhaustive small-denominator stability sweep over degenerations");
  sweep_cmd->add_option("--ideal", sweep_opts.ideal, "ideal JSON or path")->required();
  sweep_cmd->add_option("--exponent", sweep_opts.exponent, "largest re-embedding exponent")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--denominator-bound", sweep_opts.denominator_bound,
                        "largest weight entry D; directions range over [0,D]^m")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(sweep_cmd, sweep_opts.c);

  // --- callbacks --------------------------------------------------------------
  mu_cmd->callback([&] {
    const StateInput si = load_state(json_or_path_load(mu_opts.state));
    const WeightVector a = load_weights(json_or_path_load(mu_opts.weights));
    const WeightReport rep = mu_report(si.state, a);
    if (mu_opts.c.check) check_weight_report(si.state, a, rep);
    emit(weight_report_json(rep, mu_opts.c.approx), mu_opts.c);
  });

  nu_cmd->callback([&] {
    const StateInput si = load_state(json_or_path_load(nu_opts.state));
    const WeightVector a = load_weights(json_or_path_load(nu_opts.weights));
    const WeightReport rep = mu_report(si.state, a);
    if (!rep.nu)
      throw CentralSubgroup("nu is undefined for central weights; use mu for the raw value");
    if (nu_opts.c.check) check_weight_report(si.state, a, rep);
    emit(normalized_json(*rep.nu, nu_opts.c.approx), nu_opts.c);
  });

  kempf_cmd->callback([&] {
    StateSet S;
    long long degree = 0;
    if (!kempf_opts.state.empty() && !kempf_opts.ideal.empty())
      throw InputError("pass --state or --ideal, not both");
    if (!kempf_opts.state.empty()) {
      const StateInput si = load_state(json_or_path_load(kempf_opts.state));
      S = si.state;
      degree = kempf_opts.has_degree ? kempf_opts.degree : si.degree;
    } else if (!kempf_opts.ideal.empty()) {
      if (!kempf_opts.has_degree) throw InputError("--ideal needs --degree");
      const HomogeneousIdeal I = load_ideal(json_or_path_load(kempf_opts.ideal));
      S = state_of_hilbert_point(I, static_cast<int>(kempf_opts.degree));
      degree = 0;
      for (long long v : S.characters.front()) degree += v;
    } else {
      throw InputError("kempf needs --state or --ideal");
    }
    const DestabilizerReport rep = optimal_destabilizer(S, degree);
    if (kempf_opts.c.check) check_kempf(S, degree, rep);
    emit(destabilizer_json(rep, kempf_opts.c.approx), kempf_opts.c);
  });

  fl_cmd->callback([&] {
    const HomogeneousIdeal I = load_ideal(json_or_path_load(fl_opts.ideal));
    const WeightVector a = load_weights(json_or_path_load(fl_opts.weights));
    const HomogeneousIdeal limit = flat_limit(I, a);
    if (fl_opts.c.check) check_flat_limit(I, a, limit);
    Json j;
    j["weights"] = a;
    j["flat_limit"] = ideal_json(limit);
    emit(j, fl_opts.c);
  });

  df_cmd->callback([&] {
    const HomogeneousIdeal I = load_ideal(json_or_path_load(df_opts.ideal));
    const WeightVector a = load_weights(json_or_path_load(df_opts.weights));
    const DFReport rep = df_invariant(I, a);
    if (df_opts.c.check) check_df(I, a, rep.df);
    emit(df_json(rep, df_opts.c.approx), df_opts.c);
  });

  at_cmd->callback([&] {
    const HomogeneousIdeal I = load_ideal(json_or_path_load(at_opts.ideal));
    const WeightVector a = load_weights(json_or_path_load(at_opts.weights));
    const AlmostTrivialReport rep = almost_trivial_necessary(I, a);
    if (at_opts.c.check) check_min_locus_emptiness(I, a);
    emit(almost_trivial_json(rep), at_opts.c);
  });

  sp_cmd->callback([&] {
    const HomogeneousIdeal I = load_ideal(json_or_path_load(sp_opts.ideal));
    const WeightVector a = load_weights(json_or_path_load(sp_opts.weights));
    const bool member = s_prime_membership(I, a);
    if (sp_opts.c.check) check_min_locus_emptiness(I, a);
    Json j;
    j["member"] = member;
    emit(j, sp_opts.c);
  });

  bc_cmd->callback([&] {
    const WeightVector a = load_weights(json_or_path_load(bc_opts.weights));
    ExactMatrix frame = ExactMatrix::identity(a.size());
    if (!bc_opts.frame.empty()) frame = load_matrix(json_or_path_load(bc_opts.frame));
    const FramedOnePS lambda{a, frame};
    const BuildingPoint point = building_point_of(lambda);
    const ApartmentPoint canon = canonicalize(a);
    if (bc_opts.c.check) {
      if (!same_building_point(point, building_point_of({doubled(a), frame})))
        throw OracleMismatch("building point changed under doubling the weights");
      if (!same_building_point(point, building_point_of({shifted(a, 1), frame})))
        throw OracleMismatch("building point changed under a central shift");
      if (!same_building_point(point, building_point_of({canon.canonical, frame})))
        throw OracleMismatch("building point changed under canonicalization");
    }
    Json j;
    j["canonical"] = canon.canonical;
    j["point"] = building_point_json(point, bc_opts.c.approx);
    emit(j, bc_opts.c);
  });

  lift_cmd->callback([&] {
    const HomogeneousIdeal I = load_ideal(json_or_path_load(lift_opts.ideal));
    const WeightVector a = load_weights(json_or_path_load(lift_opts.weights));
    const WeightVector lifted = lift_exponent(a, lift_opts.exponent, I);
    if (lift_opts.c.check) {
      int r = 0;
      for (int cand = 1; cand <= 64; ++cand) {
        if (monomial_count(I.nvars(), cand) == a.size()) {
          r = cand;
          break;
        }
      }
      if (r == 0) throw InputError("weight length matches no monomial basis of the ring");
      const WeightVector brute =
          lift_exponent_bruteforce(a, I.nvars(), r, lift_opts.exponent);
      if (brute != lifted)
        throw OracleMismatch("factorization-enumeration oracle disagrees with the lift");
    }
    Json j;
    j["lifted"] = lifted;
    emit(j, lift_opts.c);
  });

  sweep_cmd->callback([&] {
    const HomogeneousIdeal I = load_ideal(json_or_path_load(sweep_opts.ideal));
    const SweepReport rep =
        k_stability_sweep(I, sweep_opts.exponent, sweep_opts.denominator_bound);
    if (sweep_opts.c.check) {
      for (const SweepExponentReport& er : rep.exponents) {
        if (!er.min_df || !er.min_df_direction) continue;
        const HomogeneousIdeal embedded =
            er.exponent == 1 ? I : veronese_embedding(I, er.exponent).ideal;
        check_df(embedded, *er.min_df_direction, *er.min_df);
      }
    }
    emit(sweep_json(rep, sweep_opts.c.approx), sweep_opts.c);
  });

  app.parse(argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact one-parameter degeneration and stability calculator"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const destab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case destab::ErrorKind::Input:
        return 2;
      case destab::ErrorKind::Oracle:
        return 3;
      case destab::ErrorKind::Guard:
        return 4;
      case destab::ErrorKind::Internal:
        return 1;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
