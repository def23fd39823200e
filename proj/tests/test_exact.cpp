#include "doctest.h"
#include "rsol/exact.hpp"

using namespace rsol;

namespace {

Matrix random_matrix(Sampler& rng, std::size_t r, std::size_t c, long bound) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.integer(-bound, bound);
  return m;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& t) {
  Rational acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

}  // namespace

TEST_CASE("rationals serialize in lowest terms") {
  CHECK(to_string(ratio(6, 4)) == "3/2");
  CHECK(to_string(ratio(6, -4)) == "-3/2");
  CHECK(to_string(ratio(4, 2)) == "2");
  CHECK_THROWS(ratio(1, 0));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK(to_string(Rational(1, 3) + Rational(1, 6)) == "1/2");
}

TEST_CASE("solve_linear examples") {
  auto x = solve_linear(Matrix{{1, 0}, {0, 1}}, Vector{3, 4});
  REQUIRE(x);
  CHECK(*x == Vector{3, 4});
  CHECK_FALSE(solve_linear(Matrix{{1, 1}, {2, 2}}, Vector{1, 3}));
  auto h = solve_linear(Matrix{{2}}, Vector{1});
  REQUIRE(h);
  CHECK((*h)[0] == Rational(1, 2));
  auto under = solve_linear(Matrix{{1, 1, 1}}, Vector{5});
  REQUIRE(under);
  CHECK(*under == Vector{5, 0, 0});
  CHECK_THROWS_AS(solve_linear(Matrix{{1, 1}}, Vector{1, 2}), std::invalid_argument);
}

TEST_CASE("solve_linear substitutes back on random systems") {
  Sampler rng(11);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + rng.next() % 5, c = 1 + rng.next() % 5;
    Matrix a = random_matrix(rng, r, c, 4);
    Vector b(r);
    if (trial % 2 == 0) {
      Vector x0(c);
      for (auto& v : x0) v = rng.small_rational();
      b = a.apply(x0);
    } else {
      for (auto& v : b) v = rng.small_rational();
    }
    auto x = solve_linear(a, b);
    if (trial % 2 == 0) REQUIRE(x);
    if (x) {
      CHECK(a.apply(*x) == b);
      ++solved;
    } else {
      // Inconsistent: some row combination kills A but not b.
      Matrix aug(r, c + 1);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = a(i, j);
        aug(i, c) = b[i];
      }
      CHECK(rank(aug) == rank(a) + 1);
    }
  }
  CHECK(solved >= 50);
}

TEST_CASE("nullspace examples and properties") {
  CHECK(nullspace(Matrix{{1, 0}, {0, 1}}).empty());
  auto k = nullspace(Matrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
  CHECK(nullspace(Matrix(2, 2)).size() == 2);

  Sampler rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng.next() % 5, c = 1 + rng.next() % 6;
    Matrix a = random_matrix(rng, r, c, 2);
    auto basis = nullspace(a);
    CHECK(basis.size() + rank(a) == c);
    for (const auto& v : basis) CHECK(is_zero(a.apply(v)));
    if (!basis.empty()) CHECK(rank(Matrix::from_rows(basis, c)) == basis.size());
  }
}

TEST_CASE("common_ratio examples") {
  std::vector<VectorPair> one{{Vector{2, 4}, Vector{1, 2}}};
  CHECK(common_ratio(one) == Rational(2));
  std::vector<VectorPair> clash{{Vector{2, 4}, Vector{1, 2}}, {Vector{3, 0}, Vector{1, 0}}};
  CHECK_FALSE(common_ratio(clash));
  std::vector<VectorPair> zero{{Vector{0, 0}, Vector{0, 0}}};
  CHECK(common_ratio(zero) == Rational(0));
  std::vector<VectorPair> lone{{Vector{1, 0}, Vector{0, 0}}};
  CHECK_FALSE(common_ratio(lone));
  std::vector<VectorPair> skew{{Vector{1, 1}, Vector{1, 2}}};
  CHECK_FALSE(common_ratio(skew));
  std::vector<VectorPair> bad{{Vector{1}, Vector{1, 2}}};
  CHECK_THROWS(common_ratio(bad));
}

TEST_CASE("unit sphere samples") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto v = unit_sphere_rational_sample(1, s);
    REQUIRE(v.size() == 1);
    CHECK((v[0] == 1 || v[0] == -1));
  }
  Vector t{Rational(1, 2)};
  CHECK(inverse_stereographic(t) == Vector{Rational(4, 5), Rational(3, 5)});
  for (std::size_t dim = 1; dim <= 9; ++dim)
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto v = unit_sphere_rational_sample(dim, s);
      CHECK(v.size() == dim);
      CHECK(dot(v, v) == 1);
    }
  CHECK(unit_sphere_rational_sample(4, 9) == unit_sphere_rational_sample(4, 9));
}

TEST_CASE("characteristic polynomial matches det(tI - A)") {
  Sampler rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng.next() % 6;
    Matrix a = random_matrix(rng, n, n, 3);
    if (trial % 3 == 0) a(n - 1, 0) = 0;
    auto cp = characteristic_polynomial(a);
    REQUIRE(cp.size() == n + 1);
    CHECK(cp[n] == 1);
    for (int t = -3; t <= 3; ++t) CHECK(eval_poly(cp, t) == determinant(Matrix::identity(n) * Rational(t) - a));
  }
}

TEST_CASE("rational eigenvalues") {
  Matrix tri{{Rational(1, 2), 3, 1}, {0, Rational(-1, 4), 7}, {0, 0, Rational(1, 2)}};
  auto ev = rational_eigenvalues(tri);
  REQUIRE(ev);
  REQUIRE(ev->size() == 2);
  CHECK((*ev)[0] == Eigenvalue{Rational(-1, 4), 1});
  CHECK((*ev)[1] == Eigenvalue{Rational(1, 2), 2});
  CHECK_FALSE(rational_eigenvalues(Matrix{{0, -1}, {1, 0}}));
  CHECK_FALSE(rational_eigenvalues(Matrix{{0, 2}, {1, 0}}));
  auto nil = rational_eigenvalues(Matrix{{0, 1}, {0, 0}});
  REQUIRE(nil);
  CHECK(*nil == std::vector<Eigenvalue>{{0, 2}});
  // Conjugating a diagonal matrix keeps the spectrum.
  Matrix p{{1, 2, 0}, {0, 1, 3}, {1, 0, 1}};
  Matrix d = Matrix::diagonal(Vector{2, -3, Rational(5, 3)});
  auto conj = rational_eigenvalues(p * d * *inverse(p));
  REQUIRE(conj);
  CHECK(conj->size() == 3);
  CHECK((*conj)[0].value == -3);
  CHECK((*conj)[2].value == 2);
}

TEST_CASE("rational eigenvalues with large denominators and multiplicities") {
  // det(dA) for the scaled matrix has an enormous divisor count.
  std::size_t n = 14;
  Vector diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(i % 3 == 0 ? Rational(0) : (i % 3 == 1 ? ratio(1, 2) : ratio(-5, 4)));
  Matrix p = Matrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) p(i, i + 1) = ratio(1, 2 * i + 3);
  Matrix a = p * Matrix::diagonal(diag) * *inverse(p);
  auto ev = rational_eigenvalues(a);
  REQUIRE(ev);
  REQUIRE(ev->size() == 3);
  CHECK((*ev)[0] == Eigenvalue{ratio(-5, 4), 4});
  CHECK((*ev)[1] == Eigenvalue{0, 5});
  CHECK((*ev)[2] == Eigenvalue{ratio(1, 2), 5});
}

TEST_CASE("rational eigenvalues of conjugated diagonal matrices") {
  Sampler rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 3 + rng.next() % 5;
    Vector diag(n);
    for (auto& x : diag) x = rng.small_rational(9);
    Matrix p = random_matrix(rng, n, n, 3);
    for (std::size_t i = 0; i < n; ++i) p(i, i) = 1 + rng.integer(0, 2);
    auto pinv = inverse(p);
    if (!pinv) continue;
    Matrix a = p * Matrix::diagonal(diag) * *pinv;
    std::vector<Eigenvalue> expect;
    for (const auto& x : diag) {
      auto it = std::find_if(expect.begin(), expect.end(), [&](const Eigenvalue& e) { return e.value == x; });
      if (it == expect.end())
        expect.push_back({x, 1});
      else
        ++it->multiplicity;
    }
    std::sort(expect.begin(), expect.end(), [](const Eigenvalue& x, const Eigenvalue& y) { return x.value < y.value; });
    auto ev = rational_eigenvalues(a);
    REQUIRE(ev);
    CHECK(*ev == expect);
    // One irrational pair spoils the split.
    Matrix b = Matrix::identity(n + 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j);
    b(n, n) = 0;
    b(n, n + 1) = 3;
    b(n + 1, n) = 1;
    b(n + 1, n + 1) = 0;
    Matrix q = Matrix::identity(n + 2);
    q(0, n + 1) = 2;
    q(n, 1) = -1;
    CHECK_FALSE(rational_eigenvalues(q * b * *inverse(q)));
  }
}

TEST_CASE("matrix basics") {
  Matrix a{{1, 2}, {3, 4}};
  CHECK(determinant(a) == -2);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  CHECK(is_positive_definite(Matrix{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_positive_definite(Matrix{{1, 2}, {2, 1}}));
  CHECK(commutator(a, a).is_zero());
  CHECK(a.transpose().transpose() == a);
  CHECK(a.trace() == 5);
}

TEST_CASE("rational units on subspaces") {
  Matrix g = Matrix::identity(4);
  std::vector<Vector> basis{Vector{1, 1, 0, 0}, Vector{0, 0, 1, -1}};
  auto p0 = find_rational_unit(g, basis);
  REQUIRE(p0);
  CHECK(dot(*p0, *p0) == 1);
  Sampler rng(2);
  for (int i = 0; i < 10; ++i) {
    Vector x = sample_unit_in_span(g, basis, *p0, rng);
    CHECK(dot(x, x) == 1);
    CHECK(in_span(span_basis(basis, 4), x));
  }
  CHECK(is_rational_square(Rational(9, 16)));
  CHECK_FALSE(is_rational_square(Rational(8, 9)));
  CHECK(rational_sqrt(Rational(9, 16)) == Rational(3, 4));
}
