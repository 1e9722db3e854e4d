#include "destab/kempf.hpp"

#include <algorithm>

#include "destab/errors.hpp"
#include "destab/matrix.hpp"

namespace destab {

namespace {

// Centered generating points p_i = chi_i - (degree/(N+1)) * (1,..,1).  Every
// character must sum to `degree`, so the p_i sum to zero coordinatewise.
std::vector<RationalVec> centered_points(const StateSet& S, long long degree) {
  if (S.characters.empty()) throw InputError("empty state");
  const std::size_t n = S.ambient();
  Rational shift = rat_of(degree) / static_cast<unsigned long>(n);
  std::vector<RationalVec> pts;
  pts.reserve(S.characters.size());
  for (const auto& chi : S.characters) {
    long long sum = 0;
    for (long long c : chi) sum += c;
    if (sum != degree)
      throw InputError("character coordinate sums must all equal the stated degree");
    RationalVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = rat_of(chi[i]) - shift;
    pts.push_back(std::move(p));
  }
  return pts;
}

MinNormResult package(const std::vector<std::size_t>& support, const RationalVec& lambda,
                      const std::vector<RationalVec>& pts, std::size_t n) {
  // Sort the support ascending, carrying the coefficients along.
  std::vector<std::size_t> order(support.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  MinNormResult out;
  out.q.assign(n, Rational(0));
  for (std::size_t k : order) {
    out.support.push_back(support[k]);
    out.combination.push_back(lambda[k]);
    for (std::size_t i = 0; i < n; ++i) out.q[i] += lambda[k] * pts[support[k]][i];
  }
  out.normsq = norm_squared(out.q);
  return out;
}

// The minimum-norm point q is unique, but many simplices of generating points
// carry it in their relative interior, so Wolfe's final corral and the
// oracle's winning face can disagree while both are correct.  Rewrite the
// certificate to the one determined by q alone: among the active points
// {p_i : <q, p_i> = <q, q>}, take the first subset — ordered by cardinality,
// then lexicographically by index tuple — that is affinely independent and
// expresses q with strictly positive coefficients.  Caratheodory guarantees a
// hit with at most n+1 points, because the incoming certificate's support is
// itself active.  If the search would exceed a subset budget (only possible
// far beyond the enumeration oracle's caps), the caller's valid certificate
// is kept.
void canonicalize_certificate(MinNormResult& r, const std::vector<RationalVec>& pts,
                              std::size_t n) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (dot(r.q, pts[i]) == r.normsq) active.push_back(i);
  }
  const std::size_t a = active.size();
  const std::size_t max_size = std::min(a, n + 1);
  unsigned long long examined = 0;
  constexpr unsigned long long kSubsetBudget = 50000;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (++examined > kSubsetBudget) return;
      std::vector<std::size_t> subset(k);
      for (std::size_t i = 0; i < k; ++i) subset[i] = active[pick[i]];

      RationalVec bary(k);
      bool carries_q = false;
      if (k == 1) {
        carries_q = (pts[subset[0]] == r.q);
        bary[0] = 1;
      } else {
        // q = p_0 + D xi with D the columns p_j - p_0.  The normal equations
        // are invertible exactly when the subset is affinely independent, and
        // an exact residual check certifies q lies in the affine hull.
        ExactMatrix D(n, k - 1);
        for (std::size_t c = 0; c + 1 < k; ++c)
          for (std::size_t i = 0; i < n; ++i)
            D.at(i, c) = pts[subset[c + 1]][i] - pts[subset[0]][i];
        ExactMatrix Dt = D.transposed();
        ExactMatrix DtD = Dt * D;
        RationalVec target(n);
        for (std::size_t i = 0; i < n; ++i) target[i] = r.q[i] - pts[subset[0]][i];
        auto xi = DtD.solve(Dt.apply(target));
        if (xi && D.apply(*xi) == target) {
          Rational first = 1;
          for (std::size_t c = 0; c + 1 < k; ++c) {
            bary[c + 1] = (*xi)[c];
            first -= (*xi)[c];
          }
          bary[0] = first;
          carries_q = std::all_of(bary.begin(), bary.end(),
                                  [](const Rational& v) { return v > 0; });
        }
      }
      if (carries_q) {
        MinNormResult canon = package(subset, bary, pts, n);
        if (!(canon.q == r.q) || canon.normsq != r.normsq)
          throw InternalError("canonical certificate must reproduce the minimum-norm point");
        r = std::move(canon);
        return;
      }
      // Next k-combination in lexicographic order.
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == a - k + (pos - 1)) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t i = pos; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  throw InternalError("no active subset carries the minimum-norm point");
}

void verify_certificate(const MinNormResult& result, const std::vector<RationalVec>& pts) {
  for (const RationalVec& p : pts) {
    if (dot(result.q, p) < result.normsq)
      throw InternalError("minimum-norm certificate inequality failed");
  }
  Rational total = 0;
  for (const Rational& c : result.combination) {
    if (c <= 0) throw InternalError("minimum-norm combination must be strictly positive");
    total += c;
  }
  if (total != 1) throw InternalError("minimum-norm combination must sum to one");
}

}  // namespace

MinNormResult min_norm_point(const StateSet& S, long long degree) {
  const std::vector<RationalVec> pts = centered_points(S, degree);
  const std::size_t n = S.ambient();
  const std::size_t m = pts.size();

  // Wolfe's algorithm.  The corral always consists of affinely independent
  // points whose affine minimum-norm point has strictly positive barycentric
  // coordinates; exact arithmetic makes every comparison sharp.
  std::vector<std::size_t> corral;
  RationalVec lambda;
  RationalVec x;
  {
    std::size_t best = 0;
    Rational bestsq = norm_squared(pts[0]);
    for (std::size_t j = 1; j < m; ++j) {
      Rational nsq = norm_squared(pts[j]);
      if (nsq < bestsq) {
        bestsq = nsq;
        best = j;
      }
    }
    corral = {best};
    lambda = {Rational(1)};
    x = pts[best];
  }

  unsigned long long iterations = 0;
  while (true) {
    guard_cells(++iterations, "minimum-norm major cycle");
    // Entering point: most violated inequality <x, p_j> >= <x, x>.
    Rational xx = norm_squared(x);
    std::size_t entering = m;
    Rational best_ip = xx;
    for (std::size_t j = 0; j < m; ++j) {
      Rational ip = dot(x, pts[j]);
      if (ip < best_ip) {
        best_ip = ip;
        entering = j;
      }
    }
    if (entering == m) break;  // optimal: no inequality violated
    corral.push_back(entering);
    lambda.push_back(Rational(0));

    // Minor cycle: pull x to the affine minimum-norm point of the corral,
    // dropping blocking points until the combination is interior.
    while (true) {
      guard_cells(++iterations, "minimum-norm minor cycle");
      const std::size_t k = corral.size();
      // KKT system for min |sum mu_i p_i|^2 subject to sum mu_i = 1.
      ExactMatrix kkt(k + 1, k + 1);
      RationalVec rhs(k + 1, Rational(0));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b)
          kkt.at(a, b) = dot(pts[corral[a]], pts[corral[b]]);
        kkt.at(a, k) = 1;
        kkt.at(k, a) = 1;
      }
      rhs[k] = 1;
      auto solved = kkt.solve(rhs);
      if (!solved)
        throw InternalError("corral lost affine independence");
      RationalVec mu(solved->begin(), solved->begin() + static_cast<long>(k));

      bool interior = std::all_of(mu.begin(), mu.end(), [](const Rational& v) { return v > 0; });
      if (interior) {
        lambda = mu;
        x.assign(n, Rational(0));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t i = 0; i < n; ++i) x[i] += mu[a] * pts[corral[a]][i];
        break;
      }
      // Line search x -> y: largest step keeping all coordinates nonnegative.
      Rational theta = 1;
      for (std::size_t a = 0; a < k; ++a) {
        if (mu[a] <= 0) {
          Rational t = lambda[a] / (lambda[a] - mu[a]);
          theta = std::min(theta, t);
        }
      }
      std::size_t drop = k;
      for (std::size_t a = 0; a < k; ++a) {
        lambda[a] = (1 - theta) * lambda[a] + theta * mu[a];
        if (lambda[a] == 0 && drop == k) drop = a;  // lowest index leaves
      }
      if (drop == k) throw InternalError("line search must zero a coordinate");
      corral.erase(corral.begin() + static_cast<long>(drop));
      lambda.erase(lambda.begin() + static_cast<long>(drop));
    }
  }

  MinNormResult out = package(corral, lambda, pts, n);
  canonicalize_certificate(out, pts, n);
  verify_certificate(out, pts);
  return out;
}

MinNormResult min_norm_point_oracle(const StateSet& S, long long degree) {
  const std::vector<RationalVec> pts = centered_points(S, degree);
  const std::size_t n = S.ambient();
  const std::size_t m = pts.size();
  if (m > 12) throw TooLarge("face-enumeration oracle handles at most 12 characters");
  if (n > 8) throw TooLarge("face-enumeration oracle handles ambient dimension at most 8");

  std::optional<MinNormResult> found;
  const std::size_t max_size = std::min(m, n + 1);
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (1ul << j)) subset.push_back(j);
    }
    if (subset.size() > max_size) continue;
    const std::size_t k = subset.size();

    RationalVec y;
    RationalVec bary(k);
    if (k == 1) {
      y = pts[subset[0]];
      bary[0] = 1;
    } else {
      // Columns of B are p_i - p_0; affine independence = full column rank.
      ExactMatrix B(n, k - 1);
      for (std::size_t c = 0; c + 1 < k; ++c)
        for (std::size_t i = 0; i < n; ++i)
          B.at(i, c) = pts[subset[c + 1]][i] - pts[subset[0]][i];
      if (B.rank() != k - 1) continue;
      // Project the origin onto the affine hull via normal equations:
      // y = p_0 + B xi with (B^T B) xi = -B^T p_0.
      ExactMatrix Bt = B.transposed();
      ExactMatrix BtB = Bt * B;
      RationalVec rhs = Bt.apply(pts[subset[0]]);
      for (Rational& v : rhs) v = -v;
      auto xi = BtB.solve(rhs);
      if (!xi) throw InternalError("normal equations of an independent set must be solvable");
      y = pts[subset[0]];
      RationalVec step = B.apply(*xi);
      for (std::size_t i = 0; i < n; ++i) y[i] += step[i];
      Rational first = 1;
      for (std::size_t c = 0; c + 1 < k; ++c) {
        bary[c + 1] = (*xi)[c];
        first -= (*xi)[c];
      }
      bary[0] = first;
    }
    if (!std::all_of(bary.begin(), bary.end(), [](const Rational& v) { return v > 0; })) continue;
    Rational ysq = norm_squared(y);
    bool optimal = true;
    for (const RationalVec& p : pts) {
      if (dot(y, p) < ysq) {
        optimal = false;
        break;
      }
    }
    if (!optimal) continue;
    MinNormResult candidate = package(subset, bary, pts, n);
    if (found && !(found->q == candidate.q))
      throw InternalError("two distinct faces both claim the minimum-norm point");
    if (!found) found = std::move(candidate);
  }
  if (!found) throw InternalError("no face produced the minimum-norm point");
  canonicalize_certificate(*found, pts, n);
  verify_certificate(*found, pts);
  return *found;
}

DestabilizerReport optimal_destabilizer(const StateSet& S, long long degree) {
  DestabilizerReport report;
  report.certificate = min_norm_point(S, degree);
  if (report.certificate.is_zero()) {
    report.status = StabilityStatus::Stable;
    return report;
  }
  report.status = StabilityStatus::Unstable;

  // Primitive integer vector on the ray of q.
  const RationalVec& q = report.certificate.q;
  mpz_class scale = 1;
  for (const Rational& v : q) {
    mpz_class den = mpq_class(v).get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    scale = scale / g * den;
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(q.size());
  mpz_class common = 0;
  for (const Rational& v : q) {
    mpq_class prod = mpq_class(v) * scale;
    scaled.push_back(prod.get_num());
    mpz_class mag = abs(scaled.back());
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), mag.get_mpz_t());
  }
  WeightVector w(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_class reducedz = scaled[i] / common;
    if (!reducedz.fits_slong_p())
      throw TooLarge("destabilizing direction entries exceed machine integers");
    w[i] = reducedz.get_si();
  }

  WeightReport weight = mu_report(S, w);
  if (!weight.nu) throw InternalError("a nonzero direction cannot be central");
  NormalizedValue expected{-report.certificate.normsq, report.certificate.normsq};
  if (cmp_normalized(*weight.nu, expected) != 0)
    throw InternalError("normalized weight at the optimal direction must equal "
                        "minus the root of the certificate norm");
  report.nu_min = *weight.nu;
  report.direction = canonicalize(w);
  return report;
}

}  // namespace destab
