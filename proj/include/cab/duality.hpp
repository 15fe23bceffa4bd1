#ifndef CAB_DUALITY_HPP
#define CAB_DUALITY_HPP

#include <optional>

#include "cab/ideal.hpp"

namespace cab {

/// Projective variety X-bar: a proper homogeneous ideal in x_0..x_n.
/// chart_var, when set, names the homogenizing coordinate (the hyperplane at
/// infinity is chart_var = 0); affine singular loci are read off there.
struct ProjectiveVariety {
  Ideal ideal;
  std::optional<int> chart_var;

  explicit ProjectiveVariety(Ideal i, std::optional<int> chart = std::nullopt);
  int ambient_dim() const { return static_cast<int>(ideal.ring()->nvars()) - 1; }
  int dim() const { return dimension(ideal); }
  int codim() const { return cab::codim(ideal); }
  mpz_class degree() const { return cab::degree(ideal); }
};

/// Conormal variety of V in P^n x (P^n)^dual.
struct Conormal {
  Ideal ideal; // in the product ring
  RingPtr ring;
  std::vector<int> primal_vars;
  std::vector<int> dual_vars;
};

/// Incidence-tangency ideal, saturated by the singular minors:
/// with e = codim V, saturate(I + minors(e+1, [Jac | u]) + <sum x_i u_i>,
///                            minors(e, Jac)).
Conormal conormal(const ProjectiveVariety& V, const std::vector<std::string>& dual_names);

/// Dual variety: eliminate the primal block from the conormal ideal.
/// The result lives in dual_ring (same number of variables as V's ring);
/// a principal result is squarefree-normalized.
Ideal dual_of_ideal(const Ideal& I, const RingPtr& dual_ring);
Ideal dual_variety(const ProjectiveVariety& V, const RingPtr& dual_ring);

/// default dual ring u0..un (fresh against V's ring)
RingPtr default_dual_ring(const RingPtr& primal);

/// (X^*)^* = X-bar, tested by mutual radical membership of generators.
bool check_biduality(const ProjectiveVariety& V);

} // namespace cab

#endif
