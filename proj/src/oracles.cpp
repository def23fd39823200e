#include "rsol/oracles.hpp"

#include "rsol/soliton.hpp"
#include "rsol/spaces.hpp"

namespace rsol {

namespace {

class Tally {
 public:
  Tally(std::string check, std::string space, std::string subject) {
    r_.check = std::move(check);
    r_.space = std::move(space);
    r_.subject = std::move(subject);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok && !r_.failure) r_.failure = what;
  }
  void count() { ++r_.instances; }
  OracleResult done() { return std::move(r_); }

 private:
  OracleResult r_;
};

Vector random_vector(Sampler& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = rng.small_rational();
  return v;
}

std::vector<RootNormal> iwasawa_normals(const IwasawaAlgebra& g) {
  std::vector<RootNormal> out;
  for (std::size_t al : g.datum.simple) {
    out.push_back({1, 0, al});
    out.push_back({0, 1, al});
    out.push_back({-1, 0, al});
    out.push_back({0, -1, al});
    for (auto t : {ratio(1, 2), ratio(2, 3), ratio(-3, 5), Rational(3)}) out.push_back(conic_normal(g, al, t));
  }
  return out;
}

std::string describe(const RootNormal& r) {
  return "a=" + to_string(r.a) + " b=" + to_string(r.b) + " root " + std::to_string(r.alpha);
}

}  // namespace

Matrix random_unimodular(std::size_t n, Sampler& rng) {
  Matrix p = Matrix::identity(n);
  if (n < 2) return p;
  for (std::size_t s = 0; s < 3 * n; ++s) {
    std::size_t i = rng.next() % n, j = rng.next() % n;
    if (i == j) continue;
    long f = rng.integer(-2, 2);
    for (std::size_t r = 0; r < n; ++r) p(r, j) += f * p(r, i);
  }
  return p;
}

std::vector<std::string> htype_sweep_spaces() {
  return {"N(1,1)",   "N(1,2)", "N(2,1)", "N(3,1,0)", "N(3,1,1)", "N(4,1)",
          "N(5,1)",   "N(6,1)", "N(7,1,0)", "N(7,1,1)", "N(8,1)", "N(9,1)"};
}

std::vector<std::string> damek_ricci_sweep_spaces() {
  return {"AN(1,1)", "AN(1,2)", "AN(2,1)", "AN(3,1,0)", "AN(3,1,1)", "AN(4,1)", "AN(5,1)", "AN(7,1,0)"};
}

OracleResult htype_identities(const HTypeAlgebra& h, std::uint64_t seed, int trials) {
  Tally t("clifford-identities", h.name, std::to_string(trials) + " random inputs");
  const auto& l = h.base;
  std::size_t n = h.n(), m = h.m();
  Sampler rng(seed);
  for (int i = 0; i < trials; ++i) {
    Vector z = random_vector(rng, m), u = random_vector(rng, n), v = random_vector(rng, n);
    Matrix j = h.module.j_map(z);
    Rational z2 = dot(z, z);
    std::string at = " (trial " + std::to_string(i) + ")";
    t.expect(j * j == Matrix::identity(n) * (-z2), "J_Z² ≠ −|Z|²I" + at);
    Vector ju = j.apply(u), jv = j.apply(v);
    t.expect(dot(ju, jv) == z2 * dot(u, v), "⟨J_ZU,J_ZV⟩ ≠ |Z|²⟨U,V⟩" + at);
    Vector bracket = l.bracket(h.from_v(u), h.from_v(v));
    t.expect(dot(ju, v) == l.inner(bracket, h.from_z(z)), "⟨J_ZU,V⟩ ≠ ⟨[U,V],Z⟩" + at);
    t.expect(l.bracket(h.from_v(u), h.from_v(ju)) == scaled(dot(u, u), h.from_z(z)), "[U,J_ZU] ≠ |U|²Z" + at);
    t.count();
  }
  return t.done();
}

OracleResult htype_ricci_closed_form(const HTypeAlgebra& h) {
  Tally t("htype-ricci-closed-form", h.name, "Ric of N");
  t.expect(ricci(h.base) == htype_closed_form_ricci(h), "Ric differs from −(m/2)id ⊕ (n/4)id");
  t.count();
  return t.done();
}

OracleResult damek_ricci_einstein(const DamekRicciAlgebra& d) {
  Tally t("damek-ricci-einstein", d.name, "Ric of AN");
  t.expect(ricci(d.base) == Matrix::identity(d.base.dim()) * d.einstein_constant(), "Ric differs from −(m+n/4)id");
  t.count();
  return t.done();
}

OracleResult gauss_identity(const std::string& space, const std::vector<std::string>& normals) {
  Tally t("gauss-vs-intrinsic", space, std::to_string(normals.size()) + " normals");
  Space s = parse_space(space);
  const auto& l = s.algebra();
  auto geom = ambient_geometry(l);
  for (const auto& spec : normals) {
    Normal nm = parse_normal(s, spec);
    auto hs = construct(l, geom, nm.xi);
    t.expect(gauss_ricci(hs) == ricci(hs.sub.algebra), "mismatch at " + spec);
    t.count();
  }
  return t.done();
}

std::vector<OracleResult> master_identity_suite(std::uint64_t seed) {
  auto rand = [&](const std::string& kind, int count, std::uint64_t offset = 0) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(kind + ":rand:" + std::to_string(seed + offset + i));
    return out;
  };
  auto join = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> plan;
  for (const auto& sp : htype_sweep_spaces()) {
    if (sp == "N(8,1)")
      plan.push_back({sp, {"v:delta+:" + std::to_string(seed), "v:mix:1/2", "v:rand:" + std::to_string(seed)}});
    else if (sp == "N(9,1)")
      plan.push_back({sp, rand("v", 1)});
    else if (sp == "N(4,1)")
      plan.push_back({sp, join(rand("v", 4), {"v:delta+:" + std::to_string(seed), "v:delta-:" + std::to_string(seed),
                                              "v:mix:1/2"})});
    else
      plan.push_back({sp, rand("v", 7)});
  }
  for (const auto& sp : {"AN(1,1)", "AN(1,2)", "AN(2,1)", "AN(3,1,0)", "AN(5,1)"})
    plan.push_back({sp, join(join(rand("a", 1), rand("v", 2)), rand("av", 3))});
  plan.push_back({"SL(2)", rand("any", 5)});
  plan.push_back({"SL(3)", join(rand("a", 2), {"aHX:a=1/2", "aHX:a=1/3@1", "aHX:a=0", "aHX:a=1", "aHX:a=-3/5@1"})});
  plan.push_back({"SL(4)", join(rand("a", 1), {"aHX:a=1/2", "aHX:a=2/3@1", "aHX:a=1/3@2", "aHX:a=0@2"})});
  plan.push_back({"RH(4)", rand("any", 5)});
  std::vector<OracleResult> out;
  for (const auto& [sp, normals] : plan) out.push_back(gauss_identity(sp, normals));
  return out;
}

OracleResult damek_ricci_closed_form(const DamekRicciAlgebra& d, std::uint64_t seed) {
  std::vector<std::pair<Rational, Vector>> normals{
      {1, zero_vector(d.n())}, {-1, zero_vector(d.n())}, {0, basis_vector(d.n(), 0)}};
  normals.push_back({0, unit_sphere_rational_sample(d.n(), seed)});
  for (std::uint64_t s = 0; s < 6; ++s) normals.push_back(mixed_normal(d, seed + 17 * s));
  Tally t("damek-ricci-closed-form", d.name, std::to_string(normals.size()) + " normals aB+U");
  auto geom = ambient_geometry(d.base);
  for (const auto& [a, u] : normals) {
    auto hs = construct(d.base, geom, d.compose(a, u));
    auto cf = closed_form_hypersurface(d, a, u, hs.sub);
    std::string at = " at a=" + to_string(a);
    t.expect(hs.shape == cf.shape, "shape operator" + at);
    t.expect(hs.shape.trace() == cf.trace, "mean curvature" + at);
    t.expect(hs.jacobi == cf.jacobi, "Jacobi operator" + at);
    t.expect(gauss_ricci(hs) == cf.ricci, "Ricci operator" + at);
    if (a == 0) {
      auto v = decide(hs.sub.algebra, cf.ricci);
      if (v.is_soliton) t.expect(*v.c == vertical_soliton_constant(d), "vertical soliton constant");
    }
    t.count();
  }
  return t.done();
}

std::vector<OracleResult> iwasawa_closed_form_suite(const IwasawaAlgebra& g) {
  const auto& l = g.base;
  std::size_t d = l.dim();
  auto lc = levi_civita(l);
  std::vector<OracleResult> out;
  {
    Tally t("b-theta-connection", g.name, "all basis pairs");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vector ei = basis_vector(d, i), ej = basis_vector(d, j);
        t.expect(koszul_via_bt(g, ei, ej) == lc.nabla[i].column(j),
                 "pair " + std::to_string(i) + "," + std::to_string(j));
        t.count();
      }
    out.push_back(t.done());
  }
  {
    Tally t("nabla-a-vanishes", g.name, "∇_H X for H in 𝔞");
    for (std::size_t i = 0; i < g.rank(); ++i) {
      t.expect(lc.nabla[i].is_zero(), "𝔞 basis vector " + std::to_string(i));
      t.count();
    }
    out.push_back(t.done());
  }
  {
    Tally t("theta-bracket", g.name, "[θX,X] = 2⟨X,X⟩H_λ");
    for (std::size_t r = 0; r < g.datum.roots.size(); ++r)
      for (auto s : {Rational(1), ratio(-2, 3), Rational(5)}) {
        Vector x = scaled(s, g.x_root(r));
        Matrix mx = g.to_matrix(x);
        t.expect(commutator(IwasawaAlgebra::theta(mx), mx) == g.to_matrix(g.h_root(r)) * (2 * l.inner(x, x)),
                 "root " + std::to_string(r));
        t.count();
      }
    out.push_back(t.done());
  }
  auto normals = iwasawa_normals(g);
  std::string subject = std::to_string(normals.size()) + " normals aH_α+bX_α";
  Tally nxx("nabla-xi-xi", g.name, subject), cu("companion-u", g.name, subject), tr("shape-trace", g.name, subject),
      sh("shape-root-spaces", g.name, subject), rs("jacobi-plus-shape-squared", g.name, subject),
      cb("chain-bracket-norm", g.name, subject), cs("chain-shape", g.name, subject),
      db("d-blocks", g.name, subject);
  auto geom = ambient_geometry(l);
  Rational k = geom.ricci(0, 0);
  for (const auto& rn : normals) {
    std::string at = describe(rn);
    Vector xi = normal_vector(g, rn);
    nxx.expect(lc.apply(xi, xi) == nabla_xi_xi_closed_form(g, rn), at);
    nxx.count();
    Vector u = companion_u(g, rn);
    cu.expect(l.inner(u, u) == 1 && l.inner(u, xi) == 0 && l.bracket(u, xi) == g.x_root(rn.alpha), at);
    cu.count();
    auto hs = construct(l, geom, xi);
    const auto& p = hs.sub.projection;
    tr.expect(hs.shape.trace() == closed_form_trace(g, rn), at);
    tr.count();
    Matrix rs_op = hs.jacobi + hs.shape * hs.shape;
    for (std::size_t lam = 0; lam < g.datum.roots.size(); ++lam) {
      if (lam == rn.alpha) continue;
      Vector y = p.apply(g.x_root(lam));
      sh.expect(p.apply(closed_form_shape(g, rn, lam, g.x_root(lam))) == hs.shape.apply(y), at);
      sh.count();
      rs.expect(is_zero(rs_op.apply(y)), at);
      rs.count();
      if (!g.datum.sum(lam, rn.alpha) || g.datum.difference(lam, rn.alpha)) continue;
      auto ch = shape_chain(g, rn, lam);
      Matrix bound = commutator(g.to_matrix(ch.y_next), IwasawaAlgebra::theta(g.to_matrix(g.x_root(rn.alpha))));
      cb.expect(ch.mu == 1 && bound == g.to_matrix(ch.y) * (-ch.mu) && l.inner(ch.y_next, ch.y_next) == 1, at);
      cb.count();
      cs.expect(p.apply(ch.shape_y) == hs.shape.apply(p.apply(ch.y)) &&
                    p.apply(ch.shape_y_next) == hs.shape.apply(p.apply(ch.y_next)),
                at);
      cs.count();
    }
    const Matrix& s = hs.shape;
    for (const auto& c : {Rational(0), ratio(7, 3), k}) {
      Matrix dd = s * s.trace() - (hs.jacobi + s * s) + Matrix::identity(s.rows()) * c;
      for (const auto& [v, dv] : closed_form_d_blocks(g, rn, c)) {
        db.expect(dd.apply(p.apply(v)) == p.apply(dv), at + " c=" + to_string(c));
        db.count();
      }
    }
  }
  for (auto* t : {&nxx, &cu, &tr, &sh, &rs, &cb, &cs, &db}) out.push_back(t->done());
  return out;
}

OracleResult iwasawa_subalgebra_lemma(const IwasawaAlgebra& g, std::uint64_t seed, int trials) {
  Tally t("subalgebra-lemma", g.name, std::to_string(trials) + " random normals");
  std::size_t d = g.base.dim();
  Sampler rng(seed);
  int done = 0;
  while (done < trials) {
    Vector xi(d);
    switch (done % 4) {
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
        std::size_t a = rng.next() % g.datum.roots.size(), b = rng.next() % g.datum.roots.size();
        xi = scaled(rng.small_rational(), g.h_root(a));
        axpy(rng.small_rational(), g.x_root(b), xi);
        break;
      }
      default:
        for (auto& x : xi) x = rng.small_rational();
    }
    if (is_zero(xi)) continue;
    t.expect(subalgebra_normal_check(g, xi) == normal_has_root_form(g, xi), "trial " + std::to_string(done));
    t.count();
    ++done;
  }
  return t.done();
}

OracleResult horosphere_certificates(const IwasawaAlgebra& g, std::uint64_t seed, int samples) {
  Tally t("horosphere-certificate", g.name, std::to_string(samples) + " unit H in 𝔞");
  auto geom = ambient_geometry(g.base);
  auto k = decide_einstein(g.base);
  t.expect(k && *k < 0, "ambient is not Einstein with k < 0");
  for (int i = 0; i < samples; ++i) {
    Vector h = unit_in_a(g, seed + static_cast<std::uint64_t>(i));
    auto hs = construct(g.base, geom, h);
    Matrix ad = hs.sub.projection * g.base.ad(h) * hs.sub.inclusion;
    std::string at = "sample " + std::to_string(i);
    t.expect(hs.shape == ad, "S ≠ ad H at " + at);
    t.expect(hs.jacobi == ad * ad * Rational(-1), "R ≠ −ad²H at " + at);
    auto v = decide(hs.sub.algebra, gauss_ricci(hs));
    t.expect(v.is_soliton, "no soliton at " + at);
    if (v.is_soliton) {
      Matrix cert = horosphere_certificate(g, h, hs.sub);
      t.expect(k && *v.c == *k, "c ≠ k at " + at);
      t.expect(*v.derivation == cert, "D ≠ tr(ad H)·ad H at " + at);
      t.expect(is_derivation(hs.sub.algebra, cert, Exec::serial), "certificate is not a derivation at " + at);
    }
    t.count();
  }
  return t.done();
}

std::vector<OracleResult> soundness_suite(std::uint64_t seed) {
  const std::vector<std::pair<std::string, std::string>> instances{{"N(2,1)", "v:basis:0"},
                                                                   {"N(6,1)", "v:basis:0"},
                                                                   {"AN(1,1)", "v:basis:0"},
                                                                   {"SL(3)", "a:rand:" + std::to_string(seed)},
                                                                   {"N(4,1)", "v:mix:1/2"}};
  std::vector<OracleResult> out;
  Sampler rng(seed);
  for (const auto& [space, spec] : instances) {
    Space s = parse_space(space);
    Normal nm = parse_normal(s, spec);
    auto hs = construct(s.algebra(), nm.xi);
    const auto& sub = hs.sub.algebra;
    auto v = decide(sub);
    Tally cert("certificate-reverified", space, spec);
    cert.expect(verify_verdict(sub, v), "re-verification failed");
    cert.count();
    out.push_back(cert.done());

    Tally basis("basis-change-invariance", space, spec);
    for (int trial = 0; trial < 2; ++trial) {
      MetricLieAlgebra conj = sub.change_basis(random_unimodular(sub.dim(), rng));
      auto w = decide(conj);
      basis.expect(w.is_soliton == v.is_soliton && w.c == v.c, "verdict changed under a change of basis");
      basis.expect(verify_verdict(conj, w), "conjugated verdict failed re-verification");
      basis.count();
    }
    out.push_back(basis.done());

    Tally scale("metric-scaling", space, spec);
    for (const auto& t : {Rational(2), ratio(1, 3)}) {
      MetricLieAlgebra scaled_l = sub.scaled_metric(t);
      auto w = decide(scaled_l);
      scale.expect(w.is_soliton == v.is_soliton, "verdict changed at t=" + to_string(t));
      if (v.is_soliton && w.is_soliton) scale.expect(*w.c == *v.c / t, "c did not scale by 1/t at t=" + to_string(t));
      scale.expect(verify_verdict(scaled_l, w), "scaled verdict failed re-verification");
      scale.count();
    }
    out.push_back(scale.done());
  }
  return out;
}

std::vector<OracleResult> all_oracles(std::uint64_t seed) {
  std::vector<OracleResult> out;
  auto append = [&](std::vector<OracleResult> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  for (const auto& sp : htype_sweep_spaces()) {
    Space s = parse_space(sp);
    out.push_back(htype_identities(*s.htype, seed));
    out.push_back(htype_ricci_closed_form(*s.htype));
  }
  for (const auto& sp : damek_ricci_sweep_spaces()) {
    Space s = parse_space(sp);
    out.push_back(damek_ricci_einstein(*s.damek_ricci));
    out.push_back(damek_ricci_closed_form(*s.damek_ricci, seed));
  }
  append(master_identity_suite(seed));
  for (std::size_t n : {3u, 4u}) {
    auto g = build_sl(n);
    append(iwasawa_closed_form_suite(g));
    out.push_back(iwasawa_subalgebra_lemma(g, seed));
    out.push_back(horosphere_certificates(g, seed));
  }
  append(soundness_suite(seed));
  return out;
}

}  // namespace rsol
