#include "leibniz/levi.hpp"

namespace leibniz {

bool is_left_module(const LeibnizAlgebra& acting, const ModuleAction& act) {
  const std::size_t m = acting.dim();
  if (act.acting_dim != m || act.rho.size() != m) return false;
  for (const auto& r : act.rho)
    if (r.dim() != act.space_dim) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      LinearMap bracket = LinearMap::zero(act.space_dim);
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& c = acting.table()(i, j, k);
        if (sgn(c) != 0) bracket = bracket + c * act.rho[k];
      }
      if (bracket != act.rho[i] * act.rho[j] - act.rho[j] * act.rho[i]) return false;
    }
  }
  return true;
}

namespace {

// Levi complement when the radical is abelian. With coset representatives
// u_i of a basis of A/R, find a_i in R with
//   (u_i + a_i)(u_j + a_j) = sum_k c_ij^k (u_k + a_k);
// the a_i a_j term vanishes because R R = 0, so the system is linear.
Subspace abelian_radical_complement(const LeibnizAlgebra& alg, const Subspace& radical) {
  const std::size_t n = alg.dim();
  const Quotient q = quotient(alg, radical);
  const std::size_t m = q.algebra.dim();
  const std::size_t p = radical.dim();
  const StructureTable& c = q.algebra.table();

  std::vector<Vector> reps(m);
  for (std::size_t i = 0; i < m; ++i) reps[i] = q.section.column(i);
  const auto rad = radical.basis_vectors();
  std::vector<std::vector<Vector>> rep_times_rad(m, std::vector<Vector>(p));
  std::vector<std::vector<Vector>> rad_times_rep(p, std::vector<Vector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < p; ++r) {
      rep_times_rad[i][r] = product(alg, reps[i], rad[r]);
      rad_times_rep[r][i] = product(alg, rad[r], reps[i]);
    }

  // Unknown (l, r) is the coefficient of rad[r] in a_l.
  Matrix system(m * m * n, m * p);
  Vector rhs(m * m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t row0 = (i * m + j) * n;
      Vector target = zero_vector(n) - product(alg, reps[i], reps[j]);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(c(i, j, k)) != 0) target = target + c(i, j, k) * reps[k];
      for (std::size_t e = 0; e < n; ++e) rhs[row0 + e] = target[e];
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t e = 0; e < n; ++e) {
          system(row0 + e, j * p + r) += rep_times_rad[i][r][e];
          system(row0 + e, i * p + r) += rad_times_rep[r][j][e];
          for (std::size_t l = 0; l < m; ++l)
            if (sgn(c(i, j, l)) != 0) system(row0 + e, l * p + r) -= c(i, j, l) * rad[r][e];
        }
      }
    }
  }
  const auto solution = solve_affine(system, rhs);
  if (!solution) throw Error(Errc::NoSolution, "no Levi complement for abelian radical");
  std::vector<Vector> lifted;
  for (std::size_t l = 0; l < m; ++l) {
    Vector v = reps[l];
    for (std::size_t r = 0; r < p; ++r)
      if (sgn(solution->particular[l * p + r]) != 0) v = v + solution->particular[l * p + r] * rad[r];
    lifted.push_back(std::move(v));
  }
  return Subspace::span(n, lifted);
}

}  // namespace

Subspace lie_levi(const LeibnizAlgebra& alg) {
  if (!is_lie(alg)) throw Error(Errc::NotLie, "lie_levi needs a Lie algebra");
  const std::size_t n = alg.dim();
  const Subspace radical = soluble_radical(alg);
  if (radical.is_zero()) return Subspace::full(n);
  if (radical.is_full()) return Subspace(n);
  const Subspace derived = subspace_product(alg, radical, radical);
  if (derived.is_zero()) return abelian_radical_complement(alg, radical);

  // Split A / (R R) first, then split the preimage A' of that complement,
  // whose radical R R has smaller derived length.
  const Quotient q = quotient(alg, derived);
  const Subspace upper = lie_levi(q.algebra);
  const Subspace pulled_back = preimage(q, derived, upper);
  const Restriction sub = restrict_to(alg, pulled_back);
  return map_subspace(sub.inclusion, lie_levi(sub.algebra));
}

ModuleAction module_from_kernel(const LeibnizAlgebra& alg, const Subspace& kernel) {
  const std::size_t n = alg.dim();
  if (kernel.ambient_dim() != n) throw Error(Errc::DimensionMismatch, "kernel ambient dimension");
  if (!subspace_product(alg, kernel, Subspace::full(n)).is_zero())
    throw Error(Errc::NotReducedCase, "kernel does not act as zero on the left");
  if (soluble_radical(alg) != kernel)
    throw Error(Errc::NotReducedCase, "soluble radical differs from the kernel");
  const Quotient q = quotient(alg, kernel);
  ModuleAction act;
  act.acting_dim = q.algebra.dim();
  act.space_dim = n;
  for (std::size_t i = 0; i < act.acting_dim; ++i) act.rho.push_back(left_multiplication(alg, q.section.column(i)));
  return act;
}

ModuleAction module_from_kernel(const LeibnizAlgebra& alg) { return module_from_kernel(alg, leibniz_kernel(alg)); }

Subspace module_complement(const ModuleAction& act, const Subspace& submodule) {
  const std::size_t n = act.space_dim;
  const std::size_t p = submodule.dim();
  if (submodule.ambient_dim() != n) throw Error(Errc::DimensionMismatch, "submodule ambient dimension");
  const auto basis = submodule.basis_vectors();

  // sigma[x](s, r): coordinate s of rho_x(k_r) in the submodule basis.
  std::vector<Matrix> sigma;
  for (const auto& rho : act.rho) {
    Matrix s(p, p);
    for (std::size_t r = 0; r < p; ++r) {
      const auto coords = submodule.coordinates(rho(basis[r]));
      if (!coords) throw Error(Errc::Precondition, "subspace is not invariant under the action");
      for (std::size_t t = 0; t < p; ++t) s(t, r) = (*coords)[t];
    }
    sigma.push_back(std::move(s));
  }

  // Unknown t(j, r) = coordinate r of pi(e_j), so pi maps into the submodule.
  // pi fixes k_s:            sum_j k_s[j] t(j, r) = [r == s]
  // pi rho_x = rho_x pi:     sum_j rho_x(j, b) t(j, s) - sum_r sigma_x(s, r) t(b, r) = 0
  const std::size_t unknowns = n * p;
  const std::size_t equations = p * p + act.rho.size() * n * p;
  Matrix system(equations, unknowns);
  Vector rhs(equations);
  std::size_t row = 0;
  for (std::size_t s = 0; s < p; ++s) {
    for (std::size_t r = 0; r < p; ++r, ++row) {
      for (std::size_t j = 0; j < n; ++j) system(row, j * p + r) = basis[s][j];
      rhs[row] = (r == s) ? 1 : 0;
    }
  }
  for (std::size_t x = 0; x < act.rho.size(); ++x) {
    const Matrix& rho = act.rho[x].matrix();
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t s = 0; s < p; ++s, ++row) {
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(rho(j, b)) != 0) system(row, j * p + s) += rho(j, b);
        for (std::size_t r = 0; r < p; ++r)
          if (sgn(sigma[x](s, r)) != 0) system(row, b * p + r) -= sigma[x](s, r);
      }
    }
  }
  const auto solution = solve_affine(system, rhs);
  if (!solution) throw Error(Errc::NoSolution, "no equivariant projection onto the submodule");

  Matrix projection(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < p; ++r) {
      const Scalar& t = solution->particular[j * p + r];
      if (sgn(t) == 0) continue;
      for (std::size_t a = 0; a < n; ++a) projection(a, j) += t * basis[r][a];
    }
  return kernel_basis(projection);
}

LeviWitnesses verify_levi(const LeibnizAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw Error(Errc::DimensionMismatch, "candidate ambient dimension");
  const Subspace radical = soluble_radical(alg);
  LeviWitnesses w;
  w.spans = subspace_sum(s, radical).is_full();
  w.trivial_intersection = subspace_intersection(s, radical).is_zero();
  w.closed = is_subalgebra(alg, s);
  w.semisimple = w.closed && is_semisimple(restrict_to(alg, s).algebra);
  return w;
}

LeviDecomposition leibniz_levi(const LeibnizAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Subspace kernel = leibniz_kernel(alg);
  const Subspace radical = soluble_radical(alg);

  const Quotient lie_part = quotient(alg, kernel);
  const Subspace lie_complement = lie_levi(lie_part.algebra);
  Subspace semisimple(n);
  if (!lie_complement.is_zero()) {
    // S* = K + lift of the Lie complement; K is its radical and acts as zero
    // on the left, so S* is a left module for S*/K and K is a submodule.
    const Subspace s_star = preimage(lie_part, kernel, lie_complement);
    const Restriction sub = restrict_to(alg, s_star);
    std::vector<Vector> kernel_coords;
    for (const auto& k : kernel.basis_vectors()) kernel_coords.push_back(*s_star.coordinates(k));
    const Subspace inner_kernel = Subspace::span(s_star.dim(), kernel_coords);
    const ModuleAction act = module_from_kernel(sub.algebra, inner_kernel);
    semisimple = map_subspace(sub.inclusion, module_complement(act, inner_kernel));
  }
  LeviDecomposition out{semisimple, radical, verify_levi(alg, semisimple)};
  return out;
}

}  // namespace leibniz
