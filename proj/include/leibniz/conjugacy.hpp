#pragma once

// Inner derivations and the certificate that two Levi complements are not
// related by any product of exponentials of inner derivations.
//
// The argument: if d_x(S) lies in S for every x, then exp(d_x) maps S onto S
// whenever d_x is nilpotent, and so does every finite product of such maps.
// A vector of S1 outside S then shows no such product carries S to S1.

#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

bool is_derivation(const LeibnizAlgebra& alg, const LinearMap& d);

/// d_x, the left multiplication by x.
LinearMap inner_derivation(const LeibnizAlgebra& alg, const Vector& x);

struct InvarianceRow {
  std::size_t basis_index = 0;  // the x = b_i whose derivation is checked
  bool pass = true;
  std::optional<std::size_t> escaping_vector;  // index into U's basis of the first failure
};

struct InvarianceReport {
  std::vector<InvarianceRow> rows;

  bool all_pass() const;
  /// First failing (basis element, U basis vector) pair in index order.
  std::optional<InvarianceRow> first_failure() const;
};

/// For every basis element b_i, whether d_{b_i}(U) lies in U.
InvarianceReport invariance_check(const LeibnizAlgebra& alg, const Subspace& u);

/// exp(d_x), checked to be an automorphism on basis pairs.
/// Throws Errc::NotNilpotent.
LinearMap exp_inner_automorphism(const LeibnizAlgebra& alg, const Vector& x);

struct ExpCheck {
  std::size_t basis_index = 0;
  LinearMap automorphism;
  bool maps_onto = false;  // exp(d)(S) = S
};

struct NonConjugacyCertificate {
  std::string algebra_digest;
  Subspace s;
  Subspace s1;
  Vector distinctness;  // in S1, not in S
  InvarianceReport invariance;
  std::vector<ExpCheck> exp_checks;  // nonzero nilpotent basis derivations
  std::string conclusion;
};

/// Throws Errc::Precondition if either subspace fails verify_levi,
/// Errc::NotDistinct if S1 lies in S, and Errc::InvarianceFailed if some
/// d_{b_i} does not preserve S.
NonConjugacyCertificate non_conjugacy_certificate(const LeibnizAlgebra& alg, const Subspace& s, const Subspace& s1);

}  // namespace leibniz
