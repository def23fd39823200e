#include "doctest.h"
#include "fixtures.hpp"
#include "rsol/oracles.hpp"
#include "rsol/soliton.hpp"
#include "rsol/spaces.hpp"

using namespace rsol;

namespace {

MetricLieAlgebra hypersurface(const std::string& space, const std::string& xi) {
  Space s = parse_space(space);
  return construct(s.algebra(), parse_normal(s, xi).xi).sub.algebra;
}

}  // namespace

TEST_CASE("decide on small examples") {
  auto h = fixtures::heisenberg3();
  auto v = decide(h);
  REQUIRE(v.is_soliton);
  CHECK(*v.c == ratio(-3, 2));
  CHECK(*v.derivation == Matrix::diagonal(Vector{1, 1, 2}));
  CHECK(verify_verdict(h, v));

  MetricLieAlgebra flat(2, {}, Matrix::identity(2));
  auto f = decide(flat);
  CHECK(f.is_soliton);
  CHECK(f.einstein);
  CHECK(*f.c == 0);

  auto hp = decide(fixtures::hyperbolic_plane());
  CHECK(hp.is_soliton);
  CHECK(hp.einstein);
  CHECK(*hp.c == -1);
  CHECK(*decide_einstein(fixtures::hyperbolic_plane()) == -1);
  CHECK_FALSE(decide_einstein(parse_space("N(1,1)").algebra()));
  CHECK(*decide_einstein(parse_space("AN(2,1)").algebra()) == -3);
}

TEST_CASE("witnesses are genuine") {
  for (const auto& [space, xi] : std::vector<std::pair<std::string, std::string>>{
           {"N(6,1)", "v:basis:0"}, {"N(5,1)", "v:rand:3"}, {"N(4,1)", "v:mix:1/3"}, {"AN(2,1)", "v:basis:0"},
           {"SL(3)", "aHX:a=1/2"}, {"N(3,1,1)", "v:rand:2"}}) {
    INFO(space << " " << xi);
    auto s = hypersurface(space, xi);
    auto v = decide(s);
    REQUIRE_FALSE(v.is_soliton);
    REQUIRE(v.witness);
    CHECK(verify_verdict(s, v));
    // A tampered witness no longer verifies.
    SolitonVerdict bad = v;
    bad.witness_defect = scaled(2, v.witness_defect);
    if (!is_zero(v.witness_defect)) CHECK_FALSE(verify_verdict(s, bad));
    SolitonVerdict flipped = v;
    flipped.is_soliton = true;
    CHECK_FALSE(verify_verdict(s, flipped));
  }
}

TEST_CASE("certificates are re-derived independently") {
  auto s = hypersurface("AN(1,1)", "v:basis:0");
  auto v = decide(s);
  REQUIRE(v.is_soliton);
  CHECK(verify_verdict(s, v));
  SolitonVerdict shifted = v;
  shifted.c = *v.c + 1;
  CHECK_FALSE(verify_verdict(s, shifted));
  SolitonVerdict wrong_d = v;
  (*wrong_d.derivation)(0, 0) += 1;
  CHECK_FALSE(verify_verdict(s, wrong_d));
}

TEST_CASE("verdicts are invariant under unimodular change of basis") {
  Sampler rng(91);
  for (const auto& [space, xi] : std::vector<std::pair<std::string, std::string>>{
           {"N(2,1)", "v:rand:1"}, {"N(6,1)", "v:basis:0"}, {"AN(1,1)", "v:rand:2"}, {"SL(3)", "a:rand:1"},
           {"N(4,1)", "v:delta+:2"}}) {
    INFO(space << " " << xi);
    auto s = hypersurface(space, xi);
    auto v = decide(s);
    for (int trial = 0; trial < 3; ++trial) {
      Matrix p = random_unimodular(s.dim(), rng);
      CHECK((determinant(p) == 1 || determinant(p) == -1));
      auto conj = s.change_basis(p);
      auto w = decide(conj);
      CHECK(w.is_soliton == v.is_soliton);
      CHECK(w.c == v.c);
      CHECK(w.einstein == v.einstein);
      CHECK(w.eigenvalues == v.eigenvalues);
      CHECK(verify_verdict(conj, w));
    }
  }
}

TEST_CASE("scaling the metric scales c by 1/t") {
  for (const auto& [space, xi] : std::vector<std::pair<std::string, std::string>>{
           {"N(2,1)", "v:rand:1"}, {"N(6,1)", "v:basis:0"}, {"AN(1,1)", "v:basis:0"}, {"SL(4)", "a:rand:3"}}) {
    INFO(space << " " << xi);
    auto s = hypersurface(space, xi);
    auto v = decide(s);
    for (const auto& t : {Rational(2), ratio(1, 3)}) {
      auto w = decide(s.scaled_metric(t));
      CHECK(w.is_soliton == v.is_soliton);
      if (v.is_soliton) CHECK(*w.c == *v.c / t);
      CHECK(verify_verdict(s.scaled_metric(t), w));
    }
  }
}

TEST_CASE("soliton hypersurfaces are completely solvable") {
  for (const auto& [space, xi] : std::vector<std::pair<std::string, std::string>>{
           {"N(2,1)", "v:rand:1"}, {"AN(1,1)", "v:basis:0"}, {"AN(2,1)", "a:rand:1"}, {"SL(3)", "a:rand:1"}}) {
    INFO(space);
    CHECK(decide(hypersurface(space, xi)).completely_solvable);
  }
}

TEST_CASE("two-of-three crosscheck on the H-type sweep") {
  for (const auto& spec : htype_sweep_spaces()) {
    if (spec == "N(9,1)") continue;
    INFO(spec);
    Space s = parse_space(spec);
    const auto& h = *s.htype;
    for (std::uint64_t seed = 0; seed < 2; ++seed) CHECK(theorem_predicate_crosscheck(h, xi_frame(h, random_unit_in_v(h, seed))));
  }
  Space s41 = parse_space("N(4,1)");
  const auto& h41 = *s41.htype;
  CHECK(theorem_predicate_crosscheck(h41, xi_frame(h41, half_spin_unit(h41, -1, 1))));
  CHECK(theorem_predicate_crosscheck(h41, xi_frame(h41, half_spin_mix(h41, ratio(2, 3)))));
}

TEST_CASE("soundness suite") {
  for (const auto& r : soundness_suite(1)) {
    INFO(r.check << " " << r.space << " " << r.failure.value_or(""));
    CHECK(r.pass());
    CHECK(r.instances > 0);
  }
}
