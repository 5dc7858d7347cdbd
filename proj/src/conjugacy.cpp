#include "leibniz/conjugacy.hpp"

#include <stdexcept>

#include "leibniz/levi.hpp"

namespace leibniz {

bool is_derivation(const LeibnizAlgebra& alg, const LinearMap& d) {
  const std::size_t n = alg.dim();
  if (d.dim() != n) throw Error(Errc::DimensionMismatch, "derivation dimension");
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = d.matrix().column(i);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector bi = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector bj = unit_vector(n, j);
      if (d(alg.basis_product(i, j)) != product(alg, images[i], bj) + product(alg, bi, images[j])) return false;
    }
  }
  return true;
}

LinearMap inner_derivation(const LeibnizAlgebra& alg, const Vector& x) { return left_multiplication(alg, x); }

bool InvarianceReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::optional<InvarianceRow> InvarianceReport::first_failure() const {
  for (const auto& r : rows)
    if (!r.pass) return r;
  return std::nullopt;
}

InvarianceReport invariance_check(const LeibnizAlgebra& alg, const Subspace& u) {
  const std::size_t n = alg.dim();
  if (u.ambient_dim() != n) throw Error(Errc::DimensionMismatch, "subspace ambient dimension");
  const auto basis = u.basis_vectors();
  InvarianceReport report;
  for (std::size_t i = 0; i < n; ++i) {
    const LinearMap d = inner_derivation(alg, unit_vector(n, i));
    InvarianceRow row;
    row.basis_index = i;
    for (std::size_t v = 0; v < basis.size(); ++v) {
      if (!u.contains(d(basis[v]))) {
        row.pass = false;
        row.escaping_vector = v;
        break;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

LinearMap exp_inner_automorphism(const LeibnizAlgebra& alg, const Vector& x) {
  const LinearMap g = exp_nilpotent(inner_derivation(alg, x));
  const std::size_t n = alg.dim();
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = g.matrix().column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(alg.basis_product(i, j)) != product(alg, images[i], images[j]))
        throw std::logic_error("exp of an inner derivation is not multiplicative");
  return g;
}

NonConjugacyCertificate non_conjugacy_certificate(const LeibnizAlgebra& alg, const Subspace& s, const Subspace& s1) {
  if (!verify_levi(alg, s).all()) throw Error(Errc::Precondition, "first subspace is not a Levi complement");
  if (!verify_levi(alg, s1).all()) throw Error(Errc::Precondition, "second subspace is not a Levi complement");

  NonConjugacyCertificate cert;
  cert.algebra_digest = digest(alg);
  cert.s = s;
  cert.s1 = s1;
  bool found = false;
  for (const auto& v : s1.basis_vectors()) {
    if (!s.contains(v)) {
      cert.distinctness = v;
      found = true;
      break;
    }
  }
  if (!found) throw Error(Errc::NotDistinct, "second complement lies inside the first");

  cert.invariance = invariance_check(alg, s);
  if (!cert.invariance.all_pass()) {
    const auto f = *cert.invariance.first_failure();
    throw Error(Errc::InvarianceFailed,
                "d_" + alg.labels()[f.basis_index] + " moves basis vector " + std::to_string(*f.escaping_vector) +
                    " of the first complement out of it");
  }

  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const LinearMap d = inner_derivation(alg, unit_vector(n, i));
    if (d.is_zero() || !nilpotency_index(d)) continue;
    ExpCheck check;
    check.basis_index = i;
    check.automorphism = exp_inner_automorphism(alg, unit_vector(n, i));
    check.maps_onto = check.automorphism.image_of(s) == s;
    cert.exp_checks.push_back(std::move(check));
  }
  cert.conclusion =
      "Every inner derivation d_x maps the first complement into itself, so every product of "
      "exponentials of nilpotent inner derivations maps it onto itself; the distinctness vector lies in "
      "the second complement but not the first. Hence the complements are not conjugate under such maps.";
  return cert;
}

}  // namespace leibniz
