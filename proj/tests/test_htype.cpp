#include "doctest.h"
#include "rsol/htype.hpp"
#include "rsol/reference.hpp"
#include "rsol/soliton.hpp"

using namespace rsol;

namespace {

HTypeAlgebra N(std::size_t m, std::size_t k) { return build_htype(assemble(m, k)); }
HTypeAlgebra N(std::size_t m, std::size_t kp, std::size_t km) { return build_htype(assemble(m, kp, km)); }

Vector in_sub(const Hypersurface& h, const Vector& ambient) { return h.sub.projection.apply(ambient); }

}  // namespace

TEST_CASE("H-type construction") {
  auto n11 = N(1, 1);
  CHECK(n11.name == "N(1,1)");
  CHECK(n11.base.dim() == 3);
  CHECK(n11.base.bracket(basis_vector(3, 0), basis_vector(3, 1)) == basis_vector(3, 2));
  CHECK(ricci(n11.base) == Matrix::diagonal(Vector{Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}));
  auto n310 = N(3, 1, 0);
  CHECK(n310.name == "N(3,1,0)");
  CHECK(n310.base.dim() == 7);
  CHECK(ricci(n310.base) == Matrix::diagonal(Vector{Rational(-3, 2), Rational(-3, 2), Rational(-3, 2),
                                                    Rational(-3, 2), 1, 1, 1}));
  CHECK(N(8, 1).base.dim() == 24);
}

TEST_CASE("H-type invariants and closed-form Ricci") {
  std::vector<HTypeAlgebra> all{N(1, 1), N(1, 2), N(2, 1), N(3, 1, 0), N(3, 1, 1), N(4, 1), N(5, 1), N(6, 1)};
  for (const auto& h : all) {
    INFO(h.name);
    std::size_t n = h.n(), m = h.m(), d = n + m;
    const auto& l = h.base;
    std::vector<Vector> vv, z;
    for (std::size_t i = 0; i < n; ++i) vv.push_back(basis_vector(d, i));
    for (std::size_t k = 0; k < m; ++k) z.push_back(basis_vector(d, n + k));
    CHECK(span_basis(bracket_span(l, vv, vv), d) == span_basis(z, d));
    std::vector<Vector> all_basis = vv;
    all_basis.insert(all_basis.end(), z.begin(), z.end());
    CHECK(bracket_span(l, all_basis, z).empty());
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t k = 0; k < m; ++k)
          CHECK(dot(h.module.generators[k].apply(basis_vector(n, u)), basis_vector(n, v)) ==
                l.inner(l.bracket(basis_vector(d, u), basis_vector(d, v)), basis_vector(d, n + k)));
    CHECK(ricci(l) == htype_closed_form_ricci(h));
    CHECK(is_derivation(l, nilsoliton_derivation(h)));
    CHECK(is_nilpotent(l));
    CHECK_FALSE(l.is_abelian());
    // Nilsoliton: Ric = c·id + D with D|𝔳 = id, D|𝔷 = 2id.
    auto verdict = decide(l);
    CHECK(verdict.is_soliton);
    CHECK(verify_verdict(l, verdict));
  }
}

TEST_CASE("ξ frames") {
  auto n11 = N(1, 1);
  auto f11 = xi_frame(n11, basis_vector(3, 0));
  CHECK(f11.j_xi_basis.size() == 1);
  CHECK(f11.perp_basis.empty());
  auto n21 = N(2, 1);
  for (std::uint64_t s = 1; s <= 5; ++s) CHECK(xi_frame(n21, random_unit_in_v(n21, s)).perp_basis.size() == 1);
  CHECK_THROWS(xi_frame(n21, basis_vector(6, 4)));
  CHECK_THROWS(xi_frame(n21, scaled(2, basis_vector(6, 0))));

  auto n41 = N(4, 1);
  auto split = half_spin_split(n41.module);
  auto plus = span_basis(split.delta_plus, 8), minus = span_basis(split.delta_minus, 8);
  Vector xi = half_spin_unit(n41, +1, 0);
  auto f = xi_frame(n41, xi);
  CHECK(f.perp_basis.size() == 3);
  for (const auto& v : f.j_xi_basis) CHECK(in_span(minus, Vector(v.begin(), v.begin() + 8)));
  for (const auto& v : f.perp_basis) CHECK(in_span(plus, Vector(v.begin(), v.begin() + 8)));
  for (const auto& v : f.perp_basis) CHECK(dot(v, xi) == 0);
}

TEST_CASE("predicates") {
  auto n21 = N(2, 1);
  auto p21 = predicates(n21, xi_frame(n21, basis_vector(6, 0)));
  CHECK(p21.jxi_abelian);
  CHECK(p21.perp_abelian);
  CHECK_FALSE(p21.cross_bracket_zero);
  auto n61 = N(6, 1);
  auto p61 = predicates(n61, xi_frame(n61, basis_vector(14, 0)));
  CHECK_FALSE(p61.jxi_abelian);
  CHECK_FALSE(p61.cross_bracket_zero);
  auto n41 = N(4, 1);
  auto p41 = predicates(n41, xi_frame(n41, half_spin_unit(n41, +1, 3)));
  CHECK(p41.jxi_abelian);
  CHECK(p41.perp_abelian);
  auto mixed = predicates(n41, xi_frame(n41, half_spin_mix(n41, Rational(1, 2))));
  CHECK_FALSE(mixed.perp_abelian);
}

TEST_CASE("hypersurfaces of H-type algebras") {
  struct Case {
    HTypeAlgebra h;
    Vector xi;
  };
  std::vector<Case> cases;
  for (auto h : {N(1, 1), N(1, 2), N(2, 1), N(3, 1, 0), N(3, 1, 1), N(5, 1)})
    for (std::uint64_t s : {1u, 2u}) cases.push_back({h, random_unit_in_v(h, s)});
  auto n41 = N(4, 1);
  cases.push_back({n41, half_spin_unit(n41, +1, 0)});
  cases.push_back({n41, half_spin_unit(n41, -1, 5)});
  cases.push_back({n41, half_spin_mix(n41, Rational(1, 2))});
  for (const auto& [h, xi] : cases) {
    INFO(h.name);
    auto geom = ambient_geometry(h.base);
    auto hs = construct(h.base, geom, xi);
    auto f = xi_frame(h, xi);
    const auto& s = hs.sub.algebra;
    CHECK(s.is_self_adjoint(hs.shape));
    CHECK(s.is_self_adjoint(hs.jacobi));
    Matrix gauss = gauss_ricci(hs);
    CHECK(gauss == ricci(s));
    CHECK(gauss == hypersurface_ricci_closed_form(h, f, hs.sub));
    CHECK(hs.shape.trace() == 0);
    Matrix s2 = hs.shape * hs.shape;
    for (std::size_t k = 0; k < h.m(); ++k) {
      Vector z = in_sub(hs, h.from_z(basis_vector(h.m(), k)));
      Vector jz = in_sub(hs, f.j_xi_basis[k]);
      CHECK(s2.apply(z) == scaled(Rational(1, 4), z));
      CHECK(s2.apply(jz) == scaled(Rational(1, 4), jz));
      CHECK(hs.jacobi.apply(jz) == scaled(Rational(-3, 4), jz));
      CHECK(hs.jacobi.apply(z) == scaled(Rational(1, 4), z));
    }
    // Curvature computed one column at a time through the generic tensor.
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vector x = hs.sub.inclusion.column(j);
      Vector r = curvature(h.base, geom.connection, x, xi, xi);
      CHECK(hs.sub.projection.apply(r) == hs.jacobi.column(j));
      CHECK(hs.sub.projection.apply(scaled(-1, geom.connection.apply(x, xi))) == hs.shape.column(j));
    }
    CHECK(theorem_predicate_crosscheck(h, f));
  }
}

TEST_CASE("ξ^⊥ is a subalgebra exactly when ξ ∈ 𝔳") {
  auto h = N(2, 1);
  std::size_t d = 6;
  int with_z = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Vector xi = unit_sphere_rational_sample(d, 100 + s);
    if (xi[4] == 0 && xi[5] == 0) continue;
    ++with_z;
    CHECK_FALSE(orthogonal_complement_subalgebra(h.base, xi));
  }
  CHECK(with_z > 40);
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(orthogonal_complement_subalgebra(h.base, random_unit_in_v(h, s)));
  CHECK_THROWS_AS(construct(h.base, basis_vector(d, 5)), NotSubalgebraError);
  CHECK_THROWS_AS(construct(h.base, scaled(2, basis_vector(d, 0))), std::invalid_argument);
}

TEST_CASE("soliton verdicts on H-type hypersurfaces") {
  auto n11 = N(1, 1);
  auto s11 = orthogonal_complement_subalgebra(n11.base, basis_vector(3, 0));
  auto v11 = decide(s11->algebra);
  CHECK(v11.is_soliton);
  CHECK(v11.einstein);
  CHECK(*v11.c == 0);

  auto n61 = N(6, 1);
  auto s61 = orthogonal_complement_subalgebra(n61.base, basis_vector(14, 0));
  auto v61 = decide(s61->algebra);
  CHECK_FALSE(v61.is_soliton);
  CHECK(v61.witness);
  CHECK(verify_verdict(s61->algebra, v61));
  CHECK(v61.completely_solvable);

  auto n21 = N(2, 1);
  auto f21 = xi_frame(n21, basis_vector(6, 0));
  CHECK(theorem_predicate_crosscheck(n21, f21));
  auto v21 = decide(orthogonal_complement_subalgebra(n21.base, f21.xi)->algebra);
  CHECK(v21.is_soliton);
  CHECK(verify_verdict(orthogonal_complement_subalgebra(n21.base, f21.xi)->algebra, v21));

  auto n51 = N(5, 1);
  auto f51 = xi_frame(n51, basis_vector(13, 0));
  CHECK(theorem_predicate_crosscheck(n51, f51));
  CHECK(predicates(n51, f51).count() < 2);
}

TEST_CASE("N(8,1) half-spin hypersurface is a 23-dimensional nilsoliton") {
  auto h = N(8, 1);
  Vector xi = half_spin_unit(h, +1, 0);
  auto f = xi_frame(h, xi);
  auto sub = orthogonal_complement_subalgebra(h.base, xi);
  REQUIRE(sub);
  CHECK(sub->algebra.dim() == 23);
  auto v = decide(sub->algebra);
  CHECK(v.is_soliton);
  CHECK(verify_verdict(sub->algebra, v));
  CHECK(predicates(h, f).count() >= 2);
  CHECK(theorem_predicate_crosscheck(h, f));
}
