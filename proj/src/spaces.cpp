#include "rsol/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <regex>

namespace rsol {

namespace {

constexpr std::size_t kMaxDim = 96;

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

std::uint64_t parse_count(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw GrammarError(std::string("expected a nonnegative integer for ") + what + ", got \"" + s + "\"");
  return v;
}

Rational parse_q(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw GrammarError("expected p/q, got \"" + s + "\"");
  }
}

CliffordModule module_for(std::uint64_t m, std::uint64_t kp, std::optional<std::uint64_t> km) {
  if (m < 1) throw GrammarError("the center dimension m must be at least 1");
  bool three = m % 4 == 3;
  if (three && !km) throw GrammarError("m ≡ 3 mod 4 needs the form (m,k+,k-)");
  if (!three && km) throw GrammarError("(m,k+,k-) is only defined for m ≡ 3 mod 4");
  std::uint64_t k = kp + km.value_or(0);
  if (k < 1) throw GrammarError("the module must be nonzero");
  if (m > 16 || k > 64 || irreducible_dim(m) * k + m > kMaxDim) throw GrammarError("space is too large");
  return km ? assemble(m, kp, *km) : assemble(m, kp);
}

const HTypeAlgebra& htype_of(const Space& s) {
  if (s.htype) return *s.htype;
  if (s.damek_ricci) return s.damek_ricci->htype;
  throw GrammarError(s.spec + " has no 𝔳 factor");
}

Vector embed_v(const Space& s, const Vector& u) {
  if (s.kind == SpaceKind::heisenberg) return s.htype->from_v(u);
  if (s.kind == SpaceKind::damek_ricci) return s.damek_ricci->compose(0, u);
  throw GrammarError(s.spec + " has no 𝔳 factor");
}

Vector v_part(const HTypeAlgebra& h, const Vector& x) { return Vector(x.begin(), x.begin() + static_cast<long>(h.n())); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Vector seeded_any(const MetricLieAlgebra& l, std::uint64_t seed) {
  if (l.gram() == Matrix::identity(l.dim())) return unit_sphere_rational_sample(l.dim(), seed);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < l.dim(); ++i) basis.push_back(basis_vector(l.dim(), i));
  auto p0 = find_rational_unit(l.gram(), basis);
  if (!p0) throw GrammarError("no rational unit vector found for this metric");
  Sampler rng(seed);
  return sample_unit_in_span(l.gram(), basis, *p0, rng);
}

Normal resolve_ahx(const Space& s, const std::string& body) {
  static const std::regex re(R"(a=(-?[0-9]+(?:/[0-9]+)?)(?:@([0-9]+))?)");
  std::smatch mt;
  if (!std::regex_match(body, mt, re)) throw GrammarError("expected aHX:a=p/q or aHX:a=p/q@k");
  if (!s.iwasawa) throw GrammarError("aHX normals need an SL(n) space");
  const auto& g = *s.iwasawa;
  std::uint64_t k = mt[2].matched ? parse_count(mt[2].str(), "the simple root") : 0;
  if (k >= g.datum.simple.size()) throw GrammarError("simple root index out of range");
  std::size_t alpha = g.datum.simple[k];
  Rational a = parse_q(mt[1].str());
  Rational b2 = 1 - a * a * g.root_norm2(alpha);
  RootNormal rn;
  std::string how;
  if (b2 >= 0 && is_rational_square(b2)) {
    rn = {a, rational_sqrt(b2), alpha};
    how = "solved";
  } else {
    rn = conic_normal(g, alpha, a);
    how = "conic";
  }
  Json detail;
  detail["a"] = rational_json(rn.a);
  detail["b"] = rational_json(rn.b);
  detail["simple_root"] = k;
  detail["resolution"] = how;
  return {"", normal_vector(g, rn), detail};
}

}  // namespace

const MetricLieAlgebra& Space::algebra() const {
  switch (kind) {
    case SpaceKind::heisenberg:
      return htype->base;
    case SpaceKind::damek_ricci:
      return damek_ricci->base;
    case SpaceKind::iwasawa:
      return iwasawa->base;
    default:
      return *plain;
  }
}

Space parse_space(std::string_view raw) {
  std::string spec = strip_spaces(raw);
  Space s{spec, SpaceKind::imported, {}, {}, {}, {}};
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    try {
      s.plain = import_mla(read_json_file(path));
    } catch (const std::exception& e) {
      throw GrammarError("cannot import " + path + ": " + e.what());
    }
    return s;
  }
  static const std::regex heis(R"((A?)N\(([0-9]+),([0-9]+)(?:,([0-9]+))?\))");
  static const std::regex sl(R"(SL\(([0-9]+)\))");
  static const std::regex rh(R"(RH\(([0-9]+)\))");
  std::smatch mt;
  if (std::regex_match(spec, mt, heis)) {
    std::uint64_t m = parse_count(mt[2].str(), "m"), k = parse_count(mt[3].str(), "k");
    std::optional<std::uint64_t> km;
    if (mt[4].matched) km = parse_count(mt[4].str(), "k-");
    HTypeAlgebra h = build_htype(module_for(m, k, km));
    if (mt[1].length() == 0) {
      s.kind = SpaceKind::heisenberg;
      s.htype = std::move(h);
    } else {
      s.kind = SpaceKind::damek_ricci;
      s.damek_ricci = extend(h);
    }
    return s;
  }
  if (std::regex_match(spec, mt, sl)) {
    std::uint64_t n = parse_count(mt[1].str(), "n");
    if (n < 2 || n > 8) throw GrammarError("SL(n) needs 2 ≤ n ≤ 8");
    s.kind = SpaceKind::iwasawa;
    s.iwasawa = build_sl(n);
    return s;
  }
  if (std::regex_match(spec, mt, rh)) {
    std::uint64_t n = parse_count(mt[1].str(), "n");
    if (n < 2 || n > kMaxDim) throw GrammarError("RH(n) needs 2 ≤ n ≤ 96");
    s.kind = SpaceKind::real_hyperbolic;
    s.plain = build_real_hyperbolic(n);
    return s;
  }
  throw GrammarError("unknown space \"" + spec + "\"; expected N(m,k), N(m,k+,k-), AN(...), SL(n), RH(n) or file:PATH");
}

Normal parse_normal(const Space& s, std::string_view raw) {
  std::string spec = strip_spaces(raw);
  const auto& l = s.algebra();
  Normal out{spec, {}, Json::object()};
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw GrammarError("normal \"" + spec + "\" has no kind prefix");
  std::string kind = spec.substr(0, colon), body = spec.substr(colon + 1);

  if (kind == "raw") {
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw GrammarError("expected raw:[p/q,...]");
    for (const auto& part : split(body.substr(1, body.size() - 2), ',')) out.xi.push_back(parse_q(part));
    if (out.xi.size() != l.dim())
      throw GrammarError("raw normal has " + std::to_string(out.xi.size()) + " entries, the space has dimension " +
                         std::to_string(l.dim()));
    if (l.inner(out.xi, out.xi) != 1) throw GrammarError("raw normal is not a unit vector");
    return out;
  }
  if (kind == "aHX") {
    Normal r = resolve_ahx(s, body);
    r.spec = spec;
    return r;
  }
  auto parts = split(body, ':');
  const std::string& mode = parts[0];
  auto seed_arg = [&](std::size_t i, bool optional) -> std::uint64_t {
    if (parts.size() <= i) {
      if (optional) return 0;
      throw GrammarError("normal \"" + spec + "\" needs a seed");
    }
    if (parts.size() > i + 1) throw GrammarError("normal \"" + spec + "\" has trailing fields");
    return parse_count(parts[i], "the seed");
  };

  if (kind == "v") {
    const HTypeAlgebra& h = htype_of(s);
    if (mode == "rand") {
      out.xi = embed_v(s, unit_sphere_rational_sample(h.n(), seed_arg(1, false)));
    } else if (mode == "basis") {
      std::uint64_t i = seed_arg(1, false);
      if (i >= h.n()) throw GrammarError("basis index out of range for 𝔳");
      out.xi = embed_v(s, basis_vector(h.n(), i));
    } else if (mode == "delta+" || mode == "delta-") {
      std::uint64_t seed = seed_arg(1, true);
      try {
        out.xi = embed_v(s, v_part(h, half_spin_unit(h, mode == "delta+" ? 1 : -1, seed)));
      } catch (const GrammarError&) {
        throw;
      } catch (const std::exception& e) {
        throw GrammarError("no half-spin splitting on " + s.spec + ": " + e.what());
      }
    } else if (mode == "mix") {
      if (parts.size() != 2) throw GrammarError("expected v:mix:p/q");
      Rational t = parse_q(parts[1]);
      try {
        out.xi = embed_v(s, v_part(h, half_spin_mix(h, t)));
      } catch (const GrammarError&) {
        throw;
      } catch (const std::exception& e) {
        throw GrammarError("no half-spin splitting on " + s.spec + ": " + e.what());
      }
      out.detail["t"] = rational_json(t);
    } else {
      throw GrammarError("unknown 𝔳 normal \"" + spec + "\"");
    }
    return out;
  }
  if (kind == "a") {
    if (mode != "rand") throw GrammarError("expected a:rand:SEED");
    std::uint64_t seed = seed_arg(1, false);
    if (s.iwasawa) {
      out.xi = unit_in_a(*s.iwasawa, seed);
    } else if (s.damek_ricci || s.kind == SpaceKind::real_hyperbolic) {
      out.xi = zero_vector(l.dim());
      out.xi[0] = unit_sphere_rational_sample(1, seed)[0];
    } else {
      throw GrammarError(s.spec + " has no 𝔞 factor");
    }
    return out;
  }
  if (kind == "av") {
    if (mode != "rand") throw GrammarError("expected av:rand:SEED");
    std::uint64_t seed = seed_arg(1, false);
    if (s.damek_ricci) {
      auto [a, u] = mixed_normal(*s.damek_ricci, seed);
      out.xi = s.damek_ricci->compose(a, u);
    } else if (s.kind == SpaceKind::real_hyperbolic) {
      for (std::uint64_t t = seed;; ++t) {
        Vector x = unit_sphere_rational_sample(l.dim(), t);
        if (x[0] != 0 && x[0] * x[0] != 1) {
          out.xi = std::move(x);
          break;
        }
      }
    } else {
      throw GrammarError("av normals need an AN(...) or RH(n) space");
    }
    out.detail["a"] = rational_json(out.xi[0]);
    return out;
  }
  if (kind == "any") {
    if (mode != "rand") throw GrammarError("expected any:rand:SEED");
    out.xi = seeded_any(l, seed_arg(1, false));
    return out;
  }
  throw GrammarError("unknown normal kind \"" + kind + "\"");
}

}  // namespace rsol
