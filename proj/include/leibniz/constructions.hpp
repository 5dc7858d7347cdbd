#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/levi.hpp"

namespace leibniz {

/// Names accepted by simple_algebra: sl2, sl3, so3.
const std::vector<std::string>& catalog_names();

/// sl2 on (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h; so3 on (x, y, z)
/// with [x,y] = z cyclically; sl3 on (e1, e2, e3, h1, h2, f1, f2, f3), the
/// matrix units E12, E23, E13, E11-E22, E22-E33, E21, E32, E31.
/// Throws Errc::UnknownName.
LeibnizAlgebra simple_algebra(std::string_view name);

/// rho(b_i) = d_{b_i} on the algebra itself. Throws Errc::NotLie.
ModuleAction adjoint_module(const LeibnizAlgebra& alg);

/// S + V with (s,0)(t,0) = (st,0), (s,0)(0,m) = (0, rho(s) m) and every
/// product with left factor in V equal to zero. The S basis comes first.
LeibnizAlgebra split_extension_zero_right(const LeibnizAlgebra& s, const ModuleAction& act);

struct CounterexampleBundle {
  LeibnizAlgebra algebra;  // L = S + K, dim 2n
  Subspace kernel;         // K, the second block
  Subspace first_block;    // S
  Subspace diagonal;       // S1 = {(s, s')}
  Matrix prime_map;        // 2n x 2n, (s, 0) -> (0, s')
  std::size_t block_dim = 0;
};

/// The split extension of a simple algebra by its adjoint module with zero
/// right action, together with the two complements S and S1. All stated
/// relations are checked before returning. Throws Errc::UnknownName.
CounterexampleBundle counterexample(std::string_view name);

/// S_lambda = span{(b_i, lambda b_i')}.
Subspace diagonal_complement(const CounterexampleBundle& bundle, const Scalar& lambda);

/// Basis of {phi : V1 -> V2 | phi rho1(x) = rho2(x) phi}; each entry is a
/// space2_dim x space1_dim matrix.
std::vector<Matrix> equivariant_hom_basis(const ModuleAction& from, const ModuleAction& to);

}  // namespace leibniz
