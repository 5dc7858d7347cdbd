#pragma once

// Levi decompositions.
//
// For a Lie algebra the complement to the radical is built by recursion on the
// derived series of the radical; each abelian step is one linear system. For a
// Leibniz algebra L with kernel K the pipeline is: take a Levi subalgebra of
// the Lie algebra L/K, form its preimage S*, then split S* over K as a left
// module for the semisimple quotient S*/K.

#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

/// Left module for a Lie algebra: rho[i] is the action of basis element i.
struct ModuleAction {
  std::size_t acting_dim = 0;
  std::size_t space_dim = 0;
  std::vector<LinearMap> rho;
};

/// rho([b_i, b_j]) = rho_i rho_j - rho_j rho_i on all basis pairs.
bool is_left_module(const LeibnizAlgebra& acting, const ModuleAction& act);

struct LeviWitnesses {
  bool spans = false;                // S + R = L
  bool trivial_intersection = false; // S n R = 0
  bool closed = false;               // S S inside S
  bool semisimple = false;           // S is a semisimple Lie algebra

  bool all() const { return spans && trivial_intersection && closed && semisimple; }
};

struct LeviDecomposition {
  Subspace semisimple_part;
  Subspace radical;
  LeviWitnesses witnesses;
};

/// A semisimple subalgebra complementing the radical of a Lie algebra.
/// Throws Errc::NotLie.
Subspace lie_levi(const LeibnizAlgebra& alg);

/// Action of A/K on A by left multiplication, where K = leibniz_kernel(A).
/// Throws Errc::NotReducedCase unless soluble_radical(A) = K.
ModuleAction module_from_kernel(const LeibnizAlgebra& alg);

/// Same, for an explicit ideal K with K A = 0 and soluble_radical(A) = K.
/// The acting algebra is quotient(A, K).algebra.
ModuleAction module_from_kernel(const LeibnizAlgebra& alg, const Subspace& kernel);

/// Kernel of an equivariant projection onto the submodule K: a submodule W
/// with V = K + W, K n W = 0. Throws Errc::NoSolution when no such
/// projection exists and Errc::Precondition when K is not a submodule.
Subspace module_complement(const ModuleAction& act, const Subspace& submodule);

LeviDecomposition leibniz_levi(const LeibnizAlgebra& alg);

/// Recomputes the radical and checks the four Levi conditions for S.
LeviWitnesses verify_levi(const LeibnizAlgebra& alg, const Subspace& s);

}  // namespace leibniz
