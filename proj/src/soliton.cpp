#include "rsol/soliton.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsol/reference.hpp"

namespace rsol {

namespace {

std::vector<BasisPair> pair_list(std::size_t n) {
  std::vector<BasisPair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

// Ratio u/v when u is a multiple of the nonzero v.
std::optional<Rational> ratio_of(const Vector& u, const Vector& v) {
  std::vector<VectorPair> one{{u, v}};
  if (is_zero(v)) return std::nullopt;
  return common_ratio(one);
}

}  // namespace

SolitonVerdict decide(const MetricLieAlgebra& l, Exec exec) { return decide(l, ricci(l, exec), exec); }

SolitonVerdict decide(const MetricLieAlgebra& l, const Matrix& ric, Exec exec) {
  std::size_t n = l.dim();
  SolitonVerdict v;
  v.completely_solvable = is_completely_solvable(l);
  if (l.is_abelian()) {
    v.is_soliton = true;
    v.c = Rational(0);
    v.derivation = Matrix(n, n);
    v.einstein = true;
    v.eigenvalues = rational_eigenvalues(*v.derivation);
    return v;
  }
  auto defects = leibniz_defects(l, ric, exec);
  auto pairs = pair_list(n);
  std::vector<VectorPair> system;
  system.reserve(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    system.emplace_back(defects[p], scaled(-1, l.structure(pairs[p].first, pairs[p].second)));
  if (auto c = common_ratio(system)) {
    Matrix d = ric - Matrix::identity(n) * *c;
    if (!is_derivation(l, d, exec)) throw std::logic_error("soliton certificate failed re-verification");
    v.is_soliton = true;
    v.c = *c;
    v.einstein = d.is_zero();
    v.eigenvalues = rational_eigenvalues(d);
    v.derivation = std::move(d);
    return v;
  }
  std::optional<std::pair<std::size_t, Rational>> first;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [u, w] = system[p];
    if (is_zero(w)) {
      if (is_zero(u)) continue;
      v.witness = pairs[p];
      v.witness_defect = u;
      return v;
    }
    auto r = ratio_of(u, w);
    if (!r) {
      v.witness = pairs[p];
      v.witness_defect = u;
      return v;
    }
    if (!first) {
      first.emplace(p, *r);
    } else if (first->second != *r) {
      v.witness = pairs[p];
      v.witness_partner = pairs[first->first];
      v.witness_defect = u;
      return v;
    }
  }
  throw std::logic_error("no common ratio but no witness either");
}

bool verify_verdict(const MetricLieAlgebra& l, const SolitonVerdict& v) {
  std::size_t n = l.dim();
  Matrix ric = ricci(l, Exec::serial);
  if (v.is_soliton) {
    if (!v.c || !v.derivation) return false;
    if (*v.derivation != ric - Matrix::identity(n) * *v.c) return false;
    auto defects = reference::leibniz_defects(l, *v.derivation);
    return std::all_of(defects.begin(), defects.end(), [](const Vector& x) { return is_zero(x); });
  }
  if (!v.witness) return false;
  auto defect_at = [&](BasisPair p) {
    Vector x = basis_vector(n, p.first), y = basis_vector(n, p.second);
    Vector d = ric.apply(l.bracket(x, y));
    d = sub(d, l.bracket(ric.apply(x), y));
    return sub(d, l.bracket(x, ric.apply(y)));
  };
  Vector u = defect_at(*v.witness);
  Vector w = scaled(-1, l.bracket(basis_vector(n, v.witness->first), basis_vector(n, v.witness->second)));
  if (u != v.witness_defect) return false;
  if (!v.witness_partner) {
    if (is_zero(w)) return !is_zero(u);
    return !ratio_of(u, w).has_value();
  }
  Vector u2 = defect_at(*v.witness_partner);
  Vector w2 =
      scaled(-1, l.bracket(basis_vector(n, v.witness_partner->first), basis_vector(n, v.witness_partner->second)));
  auto r1 = ratio_of(u, w), r2 = ratio_of(u2, w2);
  return r1 && r2 && *r1 != *r2;
}

std::optional<Rational> decide_einstein(const MetricLieAlgebra& l) {
  Matrix ric = ricci(l);
  std::size_t n = l.dim();
  if (n == 0) return Rational(0);
  Rational k = ric(0, 0);
  if (ric != Matrix::identity(n) * k) return std::nullopt;
  return k;
}

bool theorem_predicate_crosscheck(const HTypeAlgebra& h, const XiFrame& f) {
  auto sub = orthogonal_complement_subalgebra(h.base, f.xi);
  if (!sub) return false;
  return decide(sub->algebra).is_soliton == (predicates(h, f).count() >= 2);
}

}  // namespace rsol
