#include "doctest.h"
#include "fixtures.hpp"
#include "rsol/reference.hpp"

using namespace rsol;

namespace {

Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i); }

// ∇_x y from the Koszul identity, solved against the gram directly.
Vector koszul_oracle(const MetricLieAlgebra& l, const Vector& x, const Vector& y) {
  std::size_t n = l.dim();
  Vector rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector z = e(n, k);
    rhs[k] = (l.inner(l.bracket(x, y), z) - l.inner(l.bracket(y, z), x) + l.inner(l.bracket(z, x), y)) / 2;
  }
  return *solve_linear(l.gram(), rhs);
}

std::vector<MetricLieAlgebra> corpus() {
  Sampler rng(77);
  std::vector<MetricLieAlgebra> out{fixtures::heisenberg3(), fixtures::hyperbolic_plane(), fixtures::so3(),
                                    fixtures::solvable4()};
  for (std::size_t i = 0, n = out.size(); i < n; ++i) out.push_back(fixtures::scramble(out[i], rng));
  out.push_back(MetricLieAlgebra(3, {}, fixtures::random_gram(3, rng)));
  return out;
}

}  // namespace

TEST_CASE("construction validates the algebra") {
  CHECK_THROWS_AS(MetricLieAlgebra(3, {{0, 1, 1, 1}, {0, 2, 2, 1}, {1, 2, 0, 1}}, Matrix::identity(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(MetricLieAlgebra(2, {{1, 0, 1, 1}}, Matrix::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(MetricLieAlgebra(2, {}, Matrix{{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(MetricLieAlgebra(2, {}, Matrix{{1, 1}, {0, 1}}), std::invalid_argument);
  std::vector<Vector> skew(4, Vector(2));
  skew[1] = {1, 0};
  skew[2] = {1, 0};
  CHECK_THROWS_AS(MetricLieAlgebra::from_dense(2, skew, Matrix::identity(2)), std::invalid_argument);
  for (const auto& l : corpus()) {
    CHECK(reference::jacobi_holds(l));
    CHECK_FALSE(jacobi_violation(l, Exec::serial));
  }
}

TEST_CASE("bracket examples") {
  auto h = fixtures::heisenberg3();
  CHECK(h.bracket(e(3, 0), e(3, 1)) == e(3, 2));
  CHECK(is_zero(h.bracket(e(3, 0), e(3, 0))));
  Sampler rng(1);
  for (int t = 0; t < 20; ++t) {
    Vector x(3), y(3);
    for (auto& v : x) v = rng.small_rational();
    for (auto& v : y) v = rng.small_rational();
    CHECK(h.bracket(x, y) == scaled(-1, h.bracket(y, x)));
  }
  MetricLieAlgebra ab(4, {}, Matrix::identity(4));
  CHECK(is_zero(ab.bracket(e(4, 0), e(4, 3))));
  CHECK(ab.is_abelian());
}

TEST_CASE("Levi-Civita connection on small examples") {
  auto h = fixtures::heisenberg3();
  auto c = levi_civita(h);
  CHECK(is_zero(c.apply(e(3, 0), e(3, 0))));
  CHECK(c.apply(e(3, 0), e(3, 1)) == Vector{0, 0, Rational(1, 2)});
  CHECK(c.apply(e(3, 1), e(3, 0)) == Vector{0, 0, Rational(-1, 2)});
  CHECK(c.apply(e(3, 0), e(3, 2)) == Vector{0, Rational(-1, 2), 0});
  CHECK(c.apply(e(3, 2), e(3, 1)) == Vector{Rational(1, 2), 0, 0});

  auto hp = fixtures::hyperbolic_plane();
  auto ch = levi_civita(hp);
  CHECK(is_zero(ch.apply(e(2, 0), e(2, 0))));
  CHECK(is_zero(ch.apply(e(2, 0), e(2, 1))));
  CHECK(ch.apply(e(2, 1), e(2, 0)) == Vector{0, -1});
  CHECK(ch.apply(e(2, 1), e(2, 1)) == Vector{1, 0});

  MetricLieAlgebra ab(3, {}, Matrix{{2, 1, 0}, {1, 2, 0}, {0, 0, 5}});
  for (const auto& m : levi_civita(ab).nabla) CHECK(m.is_zero());
}

TEST_CASE("connection is torsion free, metric, and matches the oracles") {
  for (const auto& l : corpus()) {
    std::size_t n = l.dim();
    auto fast = levi_civita(l, Exec::parallel);
    auto serial = levi_civita(l, Exec::serial);
    auto ref = reference::levi_civita(l);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(fast.nabla[i] == serial.nabla[i]);
      CHECK(fast.nabla[i] == ref.nabla[i]);
      Matrix gn = l.gram() * fast.nabla[i];
      CHECK((gn + gn.transpose()).is_zero());
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(sub(fast.apply(e(n, i), e(n, j)), fast.apply(e(n, j), e(n, i))) == l.bracket(e(n, i), e(n, j)));
        CHECK(fast.apply(e(n, i), e(n, j)) == koszul_oracle(l, e(n, i), e(n, j)));
      }
    }
  }
}

TEST_CASE("curvature") {
  auto hp = fixtures::hyperbolic_plane();
  auto c = levi_civita(hp);
  Vector b = e(2, 0), x = e(2, 1);
  CHECK(hp.inner(curvature(hp, c, b, x, x), b) == -1);
  CHECK(is_zero(curvature(hp, c, x, x, b)));
  MetricLieAlgebra ab(3, {}, Matrix::identity(3));
  auto ca = levi_civita(ab);
  CHECK(is_zero(curvature(ab, ca, e(3, 0), e(3, 1), e(3, 2))));
  for (const auto& l : corpus()) {
    auto cl = levi_civita(l);
    std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(curvature(l, cl, e(n, i), e(n, j), e(n, 0)) == scaled(-1, curvature(l, cl, e(n, j), e(n, i), e(n, 0))));
  }
}

TEST_CASE("Ricci operator") {
  auto h = fixtures::heisenberg3();
  Matrix ric = ricci(h);
  CHECK(ric == Matrix::diagonal(Vector{Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}));
  CHECK(ricci(fixtures::hyperbolic_plane()) == Matrix::identity(2) * Rational(-1));
  CHECK(ricci(MetricLieAlgebra(2, {}, Matrix::identity(2))).is_zero());
  // so(3) with the bi-invariant metric of the standard basis: Ric = 1/2 id.
  CHECK(ricci(fixtures::so3()) == Matrix::identity(3) * Rational(1, 2));
  for (const auto& l : corpus()) {
    Matrix fast = ricci(l, Exec::parallel);
    CHECK(fast == ricci(l, Exec::serial));
    CHECK(fast == reference::ricci(l));
    CHECK(l.is_self_adjoint(fast));
  }
}

TEST_CASE("Ricci is invariant in form under change of basis") {
  Sampler rng(9);
  for (const auto& l : {fixtures::heisenberg3(), fixtures::solvable4(), fixtures::so3()}) {
    Matrix p = fixtures::random_unimodular(l.dim(), rng);
    auto m = l.change_basis(p);
    CHECK(ricci(m) == *inverse(p) * ricci(l) * p);
  }
}

TEST_CASE("Leibniz defect") {
  for (const auto& l : corpus()) {
    std::size_t n = l.dim();
    auto zero = leibniz_defects(l, Matrix(n, n));
    for (const auto& v : zero) CHECK(is_zero(v));
    auto id = leibniz_defects(l, Matrix::identity(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        CHECK(id[pair_index(n, i, j)] == scaled(-1, l.bracket(e(n, i), e(n, j))));
    Sampler rng(n);
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = rng.small_rational(3);
    auto fast = leibniz_defects(l, d, Exec::parallel);
    CHECK(fast == leibniz_defects(l, d, Exec::serial));
    CHECK(fast == reference::leibniz_defects(l, d));
  }
  auto h = fixtures::heisenberg3();
  CHECK(is_derivation(h, Matrix::diagonal(Vector{1, 1, 2})));
  CHECK_FALSE(is_derivation(h, Matrix::diagonal(Vector{1, 1, 1})));
}

TEST_CASE("derivations preserve the derived subalgebra") {
  for (const auto& l : corpus()) {
    if (l.dim() > 4) continue;
    auto ders = derivation_algebra(l);
    auto derived = derived_subalgebra(l);
    for (const auto& d : ders) {
      CHECK(is_derivation(l, d));
      for (const auto& v : derived) CHECK(in_span(derived, d.apply(v)));
    }
  }
  CHECK(derivation_algebra(fixtures::heisenberg3()).size() == 6);
  CHECK(derivation_algebra(fixtures::so3()).size() == 3);
}

TEST_CASE("orthogonal complement subalgebras") {
  auto h = fixtures::heisenberg3();
  auto s = orthogonal_complement_subalgebra(h, e(3, 0));
  REQUIRE(s);
  CHECK(s->algebra.dim() == 2);
  CHECK(s->algebra.is_abelian());
  CHECK(s->algebra.labels() == std::vector<std::string>{"V", "Z"});
  CHECK_FALSE(orthogonal_complement_subalgebra(h, e(3, 2)));
  Vector mixed{Rational(3, 5), Rational(4, 5), 0};
  auto sm = orthogonal_complement_subalgebra(h, mixed);
  REQUIRE(sm);
  CHECK(sm->algebra.is_abelian());
  CHECK(sm->projection * sm->inclusion == Matrix::identity(2));
  for (std::size_t i = 0; i < 2; ++i) CHECK(h.inner(sm->inclusion.column(i), mixed) == 0);
  CHECK(sm->algebra.gram_is_diagonal());

  Sampler rng(4);
  auto hp = fixtures::scramble(fixtures::solvable4(), rng);
  for (int t = 0; t < 10; ++t) {
    Vector xi(4);
    for (auto& v : xi) v = rng.small_rational();
    if (is_zero(xi)) continue;
    auto sub = orthogonal_complement_subalgebra(hp, xi);
    CHECK(sub.has_value() == orthogonal_complement_closes(hp, xi));
    if (sub) CHECK(reference::jacobi_holds(sub->algebra));
  }
}

TEST_CASE("nilpotent, solvable, completely solvable") {
  auto h = fixtures::heisenberg3();
  CHECK(is_nilpotent(h));
  CHECK(is_solvable(h));
  CHECK(is_completely_solvable(h));
  auto s = fixtures::solvable4();
  CHECK_FALSE(is_nilpotent(s));
  CHECK(is_solvable(s));
  CHECK(is_completely_solvable(s));
  CHECK_FALSE(is_solvable(fixtures::so3()));
  CHECK_FALSE(is_completely_solvable(fixtures::so3()));
  MetricLieAlgebra ab(3, {}, Matrix::identity(3));
  CHECK(is_nilpotent(ab));
  CHECK(is_solvable(ab));
  CHECK(is_completely_solvable(ab));
  // e(2): ad(e0) rotates e1, e2, so solvable but not completely solvable.
  MetricLieAlgebra e2(3, {{0, 1, 2, 1}, {0, 2, 1, -1}}, Matrix::identity(3));
  CHECK(is_solvable(e2));
  CHECK_FALSE(is_completely_solvable(e2));
}

TEST_CASE("metric scaling and basis change") {
  auto h = fixtures::heisenberg3();
  CHECK(ricci(h.scaled_metric(2)) == ricci(h) * Rational(1, 2));
  Sampler rng(8);
  Matrix p = fixtures::random_unimodular(3, rng);
  auto back = h.change_basis(p).change_basis(*inverse(p));
  CHECK(back.gram() == h.gram());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(back.structure(i, j) == h.structure(i, j));
}
