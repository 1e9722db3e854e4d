#include "destab/building.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "destab/errors.hpp"

namespace destab {

Subspace Subspace::span_of_rows(const ExactMatrix& rows) {
  std::size_t rank = 0;
  ExactMatrix rref = rows.reduced_echelon(&rank);
  if (rank == 0) throw InputError("subspace span is zero");
  if (rank == rows.cols()) throw InputError("subspace span is the whole space");
  return Subspace{std::move(rref)};
}

namespace {

ExactMatrix invertible_or_throw(const ExactMatrix& m, const char* what) {
  auto inv = m.inverse();
  if (!inv) throw SingularMatrix(what);
  return *inv;
}

}  // namespace

BuildingPoint building_point_of(const FramedOnePS& lambda) {
  const std::size_t n = lambda.weights.size();
  if (n == 0) throw InputError("empty weight vector");
  if (lambda.frame.rows() != n || lambda.frame.cols() != n)
    throw InputError("frame shape does not match the weight count");
  if (is_central(lambda.weights))
    throw CentralSubgroup("constant weight vector generates no building point");
  invertible_or_throw(lambda.frame, "frame must be invertible");

  std::vector<long long> distinct(lambda.weights.begin(), lambda.weights.end());
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t k = distinct.size() - 1;

  BuildingPoint out;
  Rational total = rat_of(distinct.front()) - rat_of(distinct.back());
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<RationalVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (lambda.weights[i] < distinct[j]) continue;
      RationalVec row(n);
      for (std::size_t r = 0; r < n; ++r) row[r] = lambda.frame.at(r, i);
      rows.push_back(std::move(row));
    }
    out.flag.subspaces.push_back(Subspace::span_of_rows(ExactMatrix::from_rows(rows)));
    out.gaps.push_back((rat_of(distinct[j]) - rat_of(distinct[j + 1])) / total);
  }
  return out;
}

bool parabolic_contains(const FramedOnePS& lambda, const ExactMatrix& g) {
  const std::size_t n = lambda.weights.size();
  if (g.rows() != n || g.cols() != n)
    throw InputError("group element shape does not match the weight count");
  ExactMatrix frame_inv = invertible_or_throw(lambda.frame, "frame must be invertible");
  invertible_or_throw(g, "group element must be invertible");
  ExactMatrix conj = frame_inv * g * lambda.frame;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (lambda.weights[i] < lambda.weights[j] && conj.at(i, j) != 0) return false;
    }
  return true;
}

namespace {

// Exact Laurent polynomials in two variables (s, t); exponents may be
// negative.  Zero is the empty map.
using Laurent2 = std::map<std::pair<long long, long long>, Rational>;

Laurent2 l2_monomial(const Rational& c, long long es, long long et) {
  Laurent2 out;
  if (c != 0) out[{es, et}] = c;
  return out;
}

Laurent2 l2_add(const Laurent2& a, const Laurent2& b) {
  Laurent2 out = a;
  for (const auto& [e, c] : b) {
    auto [it, fresh] = out.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

Laurent2 l2_mul(const Laurent2& a, const Laurent2& b) {
  Laurent2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::pair<long long, long long> e{ea.first + eb.first, ea.second + eb.second};
      auto [it, fresh] = out.emplace(e, Rational(ca * cb));
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

using L2Matrix = std::vector<std::vector<Laurent2>>;

L2Matrix l2m_from_exact(const ExactMatrix& m) {
  L2Matrix out(m.rows(), std::vector<Laurent2>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = l2_monomial(m.at(i, j), 0, 0);
  return out;
}

L2Matrix l2m_mul(const L2Matrix& a, const L2Matrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.front().size();
  L2Matrix out(rows, std::vector<Laurent2>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].empty()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j].empty()) continue;
        out[i][j] = l2_add(out[i][j], l2_mul(a[i][k], b[k][j]));
      }
    }
  return out;
}

// Entry (i, j) of the matrix scaled by t^{a_i - a_j}: conjugation by the
// diagonal subgroup in its eigenbasis.
L2Matrix l2m_twist_t(const ExactMatrix& m, const WeightVector& a) {
  L2Matrix out(m.rows(), std::vector<Laurent2>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = l2_monomial(m.at(i, j), 0, a[i] - a[j]);
  return out;
}

// Constant term in t of a matrix polynomial in t alone; InputError on
// negative exponents (not a polynomial).
ExactMatrix l2m_value_at_t0(const L2Matrix& m) {
  ExactMatrix out(m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.front().size(); ++j)
      for (const auto& [e, c] : m[i][j]) {
        if (e.first != 0) throw InternalError("matrix depends on the second parameter");
        if (e.second < 0) throw InternalError("matrix is not polynomial at the origin");
        if (e.second == 0) out.at(i, j) = c;
      }
  return out;
}

ExactMatrix l2m_value_at_1(const L2Matrix& m) {
  ExactMatrix out(m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.front().size(); ++j)
      for (const auto& [e, c] : m[i][j]) out.at(i, j) += c;
  return out;
}

// Substitute t -> s*t, turning exponent (0, e) into (e, e).
L2Matrix l2m_t_to_st(const L2Matrix& m) {
  L2Matrix out(m.size(), std::vector<Laurent2>(m.front().size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.front().size(); ++j)
      for (const auto& [e, c] : m[i][j]) {
        if (e.first != 0) throw InternalError("matrix depends on the second parameter");
        out[i][j][{e.second, e.second}] = c;
      }
  return out;
}

}  // namespace

bool verify_frame_twist(const FramedOnePS& lambda, const ExactMatrix& p) {
  const std::size_t n = lambda.weights.size();
  if (!parabolic_contains(lambda, p))
    throw NotInParabolic("element has no limit under the subgroup and cannot be twisted");
  ExactMatrix frame_inv = invertible_or_throw(lambda.frame, "frame must be invertible");
  ExactMatrix pc = frame_inv * p * lambda.frame;  // p in frame coordinates
  ExactMatrix pc_inv = invertible_or_throw(pc, "group element must be invertible");

  // Twisted element p(t): polynomial in t with invertible value at t = 0.
  L2Matrix twisted = l2m_twist_t(pc, lambda.weights);
  if (!l2m_value_at_t0(twisted).inverse()) return false;

  // Gauge g(t) = p * (p^{-1})(t): the inverse is limit-compatible too, so the
  // gauge is again polynomial in t.
  L2Matrix gauge = l2m_mul(l2m_from_exact(pc), l2m_twist_t(pc_inv, lambda.weights));
  if (!l2m_value_at_t0(gauge).inverse()) return false;
  if (!(l2m_value_at_1(gauge) == ExactMatrix::identity(n))) return false;

  // Two-variable cocycle: g(s t) * L(s) = (p L(s) p^{-1}) * g(t), with
  // L(s) the diagonal subgroup in frame coordinates.
  L2Matrix diag_s(n, std::vector<Laurent2>(n));
  for (std::size_t i = 0; i < n; ++i) diag_s[i][i] = l2_monomial(1, lambda.weights[i], 0);
  L2Matrix lhs = l2m_mul(l2m_t_to_st(gauge), diag_s);
  L2Matrix conj = l2m_mul(l2m_mul(l2m_from_exact(pc), diag_s), l2m_from_exact(pc_inv));
  L2Matrix rhs = l2m_mul(conj, gauge);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(lhs[i][j] == rhs[i][j])) return false;
    }
  return true;
}

bool same_building_point(const BuildingPoint& x, const BuildingPoint& y) { return x == y; }

std::vector<std::vector<std::vector<int>>> enumerate_coordinate_simplices(int N) {
  if (N < 1) throw InputError("the apartment needs at least one coordinate");
  if (N > 12) throw TooLarge("coordinate simplex enumeration handles at most 12 coordinates");
  const unsigned full = (N >= 32) ? 0u : ((1u << N) - 1u);

  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<unsigned> stack;
  auto subset_of = [&](unsigned mask) {
    std::vector<int> subset;
    for (int i = 0; i < N; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    return subset;
  };
  auto emit = [&]() {
    std::vector<std::vector<int>> chain;
    chain.reserve(stack.size());
    for (unsigned mask : stack) chain.push_back(subset_of(mask));
    chains.push_back(std::move(chain));
  };
  auto dfs = [&](auto&& self, unsigned below) -> void {
    for (unsigned mask = below + 1; mask < full; ++mask) {
      if (below != 0 && (below & mask) != below) continue;  // must strictly contain
      if (below == mask) continue;
      stack.push_back(mask);
      emit();
      self(self, mask);
      stack.pop_back();
    }
  };
  guard_cells(coordinate_simplex_count(N), "coordinate simplex enumeration");
  dfs(dfs, 0);
  return chains;
}

unsigned long long coordinate_simplex_count(int N) {
  if (N < 1) throw InputError("the apartment needs at least one coordinate");
  if (N > 12) throw TooLarge("coordinate simplex enumeration handles at most 12 coordinates");
  // Chains of length k correspond to ordered partitions of the coordinates
  // into k+1 labeled nonempty blocks, counted by surjections via
  // inclusion-exclusion.
  mpz_class total = 0;
  for (int k = 1; k + 1 <= N; ++k) {
    const int parts = k + 1;
    mpz_class surj = 0;
    for (int i = 0; i <= parts; ++i) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(parts),
                   static_cast<unsigned long>(i));
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts - i),
                    static_cast<unsigned long>(N));
      if (i % 2 == 0)
        surj += binom * power;
      else
        surj -= binom * power;
    }
    total += surj;
  }
  if (!total.fits_ulong_p()) throw TooLarge("coordinate simplex count overflows");
  return total.get_ui();
}

}  // namespace destab
