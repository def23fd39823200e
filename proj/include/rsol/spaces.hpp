#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsol/damek_ricci.hpp"
#include "rsol/htype.hpp"
#include "rsol/io.hpp"
#include "rsol/iwasawa.hpp"

namespace rsol {

/// A space or normal specification outside the grammar, or a normal that
/// does not fit the space.
class GrammarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SpaceKind { heisenberg, damek_ricci, iwasawa, real_hyperbolic, imported };

/// N(m,k), N(m,k+,k-), AN(m,k), AN(m,k+,k-), SL(n), RH(n) or file:PATH.
struct Space {
  std::string spec;
  SpaceKind kind;
  std::optional<HTypeAlgebra> htype;
  std::optional<DamekRicciAlgebra> damek_ricci;
  std::optional<IwasawaAlgebra> iwasawa;
  std::optional<MetricLieAlgebra> plain;

  const MetricLieAlgebra& algebra() const;
};

Space parse_space(std::string_view spec);

/// The resolved unit normal. `detail` records parameters the grammar solved
/// for, such as (a, b) of aHX.
struct Normal {
  std::string spec;
  Vector xi;
  Json detail;
};

/// v:rand:SEED, v:basis:IDX, v:delta+:SEED, v:delta-:SEED, v:mix:p/q,
/// a:rand:SEED, aHX:a=p/q[@k], av:rand:SEED, any:rand:SEED, raw:[p/q,...].
Normal parse_normal(const Space& space, std::string_view spec);

}  // namespace rsol
