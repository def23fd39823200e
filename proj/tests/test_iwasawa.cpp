#include "doctest.h"
#include "rsol/iwasawa.hpp"
#include "rsol/reference.hpp"
#include "rsol/soliton.hpp"

using namespace rsol;

namespace {

std::size_t root_index(const IwasawaAlgebra& g, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < g.datum.roots.size(); ++r)
    if (g.datum.roots[r] == std::pair{i, j}) return r;
  throw std::logic_error("no such root");
}

std::vector<RootNormal> sample_normals(const IwasawaAlgebra& g) {
  std::vector<RootNormal> out;
  for (std::size_t al : g.datum.simple) {
    out.push_back({1, 0, al});
    out.push_back({0, 1, al});
    out.push_back({-1, 0, al});
    for (auto t : {ratio(1, 2), ratio(2, 3), ratio(-3, 5), Rational(3)}) out.push_back(conic_normal(g, al, t));
  }
  return out;
}

// D = tr(S)S − (R + S²) + c·id in sub coordinates.
Matrix generic_d(const Hypersurface& hs, const Rational& c) {
  const Matrix& s = hs.shape;
  return s * s.trace() - (hs.jacobi + s * s) + Matrix::identity(s.rows()) * c;
}

}  // namespace

TEST_CASE("SL(n) Iwasawa construction and root data") {
  auto g2 = build_sl(2);
  CHECK(g2.base.dim() == 2);
  CHECK(g2.name == "SL(2)");
  auto g3 = build_sl(3);
  CHECK(g3.base.dim() == 5);
  CHECK(g3.rank() == 2);
  CHECK(g3.datum.roots.size() == 3);
  CHECK(g3.datum.simple.size() == 2);
  std::size_t al = g3.datum.simple[0], be = g3.datum.simple[1];
  CHECK(g3.datum.cartan[al][be] == -1);
  CHECK(g3.datum.cartan[be][al] == -1);
  CHECK(g3.datum.cartan[al][al] == 2);
  CHECK(g3.datum.sum(al, be) == root_index(g3, 0, 2));
  CHECK_FALSE(g3.datum.difference(be, al));
  CHECK(g3.killing_scale == 6);
  CHECK_THROWS(build_sl(1));
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    INFO(n);
    auto g = build_sl(n);
    CHECK_FALSE(check_root_datum(g));
    CHECK(metric_relation_holds(g));
    for (std::size_t r = 0; r < g.datum.roots.size(); ++r) CHECK(g.root_norm2(r) == 1);
    CHECK(is_completely_solvable(g.base));
    // Adjacent simple roots pair to −1, distant ones to 0.
    for (std::size_t i = 0; i < g.datum.simple.size(); ++i)
      for (std::size_t j = 0; j < g.datum.simple.size(); ++j) {
        long a = g.datum.cartan[g.datum.simple[i]][g.datum.simple[j]];
        long expect = i == j ? 2 : (i + 1 == j || j + 1 == i ? -1 : 0);
        CHECK(a == expect);
      }
  }
}

TEST_CASE("Iwasawa algebras are Einstein with negative constant") {
  for (std::size_t n : {2u, 3u, 4u}) {
    INFO(n);
    auto g = build_sl(n);
    auto k = decide_einstein(g.base);
    REQUIRE(k);
    CHECK(*k < 0);
    CHECK(reference::ricci(g.base) == Matrix::identity(g.base.dim()) * *k);
  }
  CHECK(*decide_einstein(build_sl(2).base) == -1);
  Matrix rh = ricci(build_real_hyperbolic(5));
  CHECK(rh == Matrix::identity(5) * Rational(-4));
}

TEST_CASE("B_theta connection formula matches the metric Koszul formula") {
  for (std::size_t n : {2u, 3u, 4u}) {
    INFO(n);
    auto g = build_sl(n);
    auto lc = levi_civita(g.base);
    std::size_t d = g.base.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vector ei = basis_vector(d, i), ej = basis_vector(d, j);
        CHECK(koszul_via_bt(g, ei, ej) == lc.nabla[i].column(j));
        if (i < g.rank()) CHECK(is_zero(koszul_via_bt(g, ei, ej)));
      }
  }
}

TEST_CASE("Iwasawa bracket and connection identities on SL(3)") {
  auto g = build_sl(3);
  auto lc = levi_civita(g.base);
  std::size_t d = g.base.dim();
  // [θX, X] = 2⟨X,X⟩H_λ
  for (std::size_t r = 0; r < g.datum.roots.size(); ++r)
    for (auto s : {Rational(1), ratio(-2, 3), Rational(5)}) {
      Vector x = scaled(s, g.x_root(r));
      Matrix mx = g.to_matrix(x);
      CHECK(commutator(IwasawaAlgebra::theta(mx), mx) == g.to_matrix(g.h_root(r)) * (2 * g.base.inner(x, x)));
    }
  for (const auto& rn : sample_normals(g)) {
    Vector xi = normal_vector(g, rn);
    CHECK(g.base.inner(xi, xi) == 1);
    CHECK(lc.apply(xi, xi) == nabla_xi_xi_closed_form(g, rn));
    Vector u = companion_u(g, rn);
    CHECK(g.base.inner(u, u) == 1);
    CHECK(g.base.inner(u, xi) == 0);
    CHECK(g.base.bracket(u, xi) == g.x_root(rn.alpha));
  }
  CHECK_THROWS(normal_vector(g, {1, 1, g.datum.simple[0]}));
  CHECK_THROWS(normal_vector(g, {1, 0, root_index(g, 0, 2)}));
  (void)d;
}

TEST_CASE("orthogonal complements close exactly for normals in 𝔞 or ℝH_α ⊕ 𝔤_α") {
  for (std::size_t n : {3u, 4u}) {
    INFO(n);
    auto g = build_sl(n);
    std::size_t d = g.base.dim();
    Sampler rng(40 + n);
    int closing = 0, total = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Vector xi(d);
      switch (trial % 4) {
        case 0:
          for (std::size_t k = 0; k < g.rank(); ++k) xi[k] = rng.small_rational();
          break;
        case 1: {
          std::size_t al = g.datum.simple[rng.next() % g.datum.simple.size()];
          xi = scaled(rng.small_rational(), g.h_root(al));
          axpy(rng.small_rational(), g.x_root(al), xi);
          break;
        }
        case 2: {
          std::size_t l = rng.next() % g.datum.roots.size(), m = rng.next() % g.datum.roots.size();
          xi = scaled(rng.small_rational(), g.h_root(l));
          axpy(rng.small_rational(), g.x_root(m), xi);
          break;
        }
        default:
          for (auto& x : xi) x = rng.small_rational();
      }
      if (is_zero(xi)) continue;
      ++total;
      bool closes = subalgebra_normal_check(g, xi);
      CHECK(closes == normal_has_root_form(g, xi));
      closing += closes;
    }
    CHECK(total >= 95);
    CHECK(closing > 30);
    CHECK(closing < total);
  }
  auto g = build_sl(3);
  std::size_t be = g.datum.simple[1];
  Vector mixed = g.h_root(be);
  axpy(1, g.x_root(root_index(g, 0, 2)), mixed);
  CHECK_FALSE(subalgebra_normal_check(g, mixed));
  CHECK_THROWS(subalgebra_normal_check(g, zero_vector(5)));
}

TEST_CASE("closed-form shape, Jacobi and D blocks on SL(3) and SL(4)") {
  for (std::size_t n : {3u, 4u}) {
    INFO(n);
    auto g = build_sl(n);
    auto geom = ambient_geometry(g.base);
    for (const auto& rn : sample_normals(g)) {
      INFO(to_string(rn.a) << " " << to_string(rn.b) << " " << rn.alpha);
      auto hs = construct(g.base, geom, normal_vector(g, rn));
      const auto& p = hs.sub.projection;
      CHECK(gauss_ricci(hs) == ricci(hs.sub.algebra));
      CHECK(hs.shape.trace() == closed_form_trace(g, rn));
      Matrix rs = hs.jacobi + hs.shape * hs.shape;
      for (std::size_t l = 0; l < g.datum.roots.size(); ++l) {
        if (l == rn.alpha) continue;
        Vector y = p.apply(g.x_root(l));
        CHECK(p.apply(closed_form_shape(g, rn, l, g.x_root(l))) == hs.shape.apply(y));
        CHECK(is_zero(rs.apply(y)));
        if (!g.datum.sum(l, rn.alpha) || g.datum.difference(l, rn.alpha)) continue;
        auto ch = shape_chain(g, rn, l);
        CHECK(ch.mu == 1);
        CHECK(p.apply(ch.shape_y) == hs.shape.apply(p.apply(ch.y)));
        CHECK(p.apply(ch.shape_y_next) == hs.shape.apply(p.apply(ch.y_next)));
        Matrix bound = commutator(g.to_matrix(ch.y_next), IwasawaAlgebra::theta(g.to_matrix(g.x_root(rn.alpha))));
        CHECK(bound == g.to_matrix(ch.y) * (-ch.mu));
        CHECK(g.base.inner(ch.y_next, ch.y_next) == 1);
      }
      for (auto c : {Rational(0), ratio(7, 3)}) {
        Matrix dd = generic_d(hs, c);
        for (const auto& [v, dv] : closed_form_d_blocks(g, rn, c)) CHECK(dd.apply(p.apply(v)) == p.apply(dv));
      }
    }
  }
  auto g = build_sl(3);
  CHECK_THROWS(shape_chain(g, {1, 0, g.datum.simple[0]}, g.datum.simple[0]));
  CHECK_THROWS(closed_form_shape(g, {1, 0, g.datum.simple[0]}, g.datum.simple[0], g.x_root(g.datum.simple[0])));
}

TEST_CASE("horospheres of SL(3) and SL(4) are solitons with the ad(H) certificate") {
  for (std::size_t n : {3u, 4u}) {
    INFO(n);
    auto g = build_sl(n);
    auto geom = ambient_geometry(g.base);
    Rational k = *decide_einstein(g.base);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Vector h = unit_in_a(g, seed);
      CHECK(g.base.inner(h, h) == 1);
      auto hs = construct(g.base, geom, h);
      Matrix ad = hs.sub.projection * g.base.ad(h) * hs.sub.inclusion;
      CHECK(hs.shape == ad);
      CHECK(hs.jacobi == ad * ad * Rational(-1));
      auto v = decide(hs.sub.algebra, gauss_ricci(hs));
      REQUIRE(v.is_soliton);
      CHECK(*v.c == k);
      Matrix cert = horosphere_certificate(g, h, hs.sub);
      CHECK(*v.derivation == cert);
      CHECK(is_derivation(hs.sub.algebra, cert, Exec::serial));
      CHECK(verify_verdict(hs.sub.algebra, v));
    }
  }
}

TEST_CASE("normals aH_α + bX_α with b ≠ 0 give no soliton in rank two and three") {
  for (std::size_t n : {3u, 4u}) {
    INFO(n);
    auto g = build_sl(n);
    auto geom = ambient_geometry(g.base);
    for (const auto& rn : sample_normals(g)) {
      auto hs = construct(g.base, geom, normal_vector(g, rn));
      auto v = decide(hs.sub.algebra, gauss_ricci(hs));
      CHECK(v.is_soliton == (rn.b == 0));
      CHECK(verify_verdict(hs.sub.algebra, v));
    }
  }
}

TEST_CASE("hypersurfaces of the real hyperbolic models are Einstein") {
  auto g = build_sl(2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Vector xi = unit_sphere_rational_sample(2, seed);
    auto hs = construct(g.base, xi);
    auto v = decide(hs.sub.algebra, gauss_ricci(hs));
    CHECK(v.is_soliton);
    CHECK(v.einstein);
  }
  auto rh = build_real_hyperbolic(4);
  auto geom = ambient_geometry(rh);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Vector xi = unit_sphere_rational_sample(4, 60 + seed);
    REQUIRE(orthogonal_complement_closes(rh, xi));
    auto hs = construct(rh, geom, xi);
    CHECK(gauss_ricci(hs) == ricci(hs.sub.algebra));
    CHECK(decide_einstein(hs.sub.algebra));
    auto v = decide(hs.sub.algebra);
    CHECK(v.einstein);
  }
}
