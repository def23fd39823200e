#pragma once

#include <vector>

#include "rsol/metric_lie.hpp"

/// Serial kernels written straight from the definitions. They are slow and
/// exist to cross-check and benchmark the parallel kernels.
namespace rsol::reference {

/// 2⟨∇_x y, z⟩ = ⟨[x,y],z⟩ − ⟨[y,z],x⟩ + ⟨[z,x],y⟩ on basis triples.
Connection levi_civita(const MetricLieAlgebra& l);
/// Ric(x,y) = Σ_{a,b} G⁻¹_ab ⟨R(e_a,x)y, e_b⟩, returned as an operator.
Matrix ricci(const MetricLieAlgebra& l);
std::vector<Vector> leibniz_defects(const MetricLieAlgebra& l, const Matrix& d);
bool jacobi_holds(const MetricLieAlgebra& l);

}  // namespace rsol::reference
