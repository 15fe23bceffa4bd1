#ifndef CAB_TANGENCY_HPP
#define CAB_TANGENCY_HPP

#include "cab/duality.hpp"

namespace cab {

struct TangencyVariety {
  int k = 0;
  Ideal ideal; // projective, in the dual ring
  RingPtr dual_ring;
  enum class Variant { Smooth, WithSingularities } variant = Variant::Smooth;

  int dim() const { return dimension(ideal); }
  mpz_class degree() const { return cab::degree(ideal); }
  bool empty() const { return ideal.is_unit() || dim() < 0; }
};

/// I + minors(e, Jac), with components at infinity removed when the variety
/// carries a chart variable (Theorem-2 strata use the affine singularities).
struct SingularLocus {
  Ideal ideal;
  bool is_finite = false; // projective dimension <= 0
};

SingularLocus singular_locus(const ProjectiveVariety& V);

/// Hyperplanes tangent to V at k regular points spanning a (k-1)-plane
/// (closure).  k point blocks, incidence + tangency minors per block,
/// saturation by per-block singular minors then by the spanning minors,
/// then elimination of all point blocks.
TangencyVariety k_tangency(const ProjectiveVariety& V, int k, const RingPtr& dual_ring);

/// Variant for varieties with isolated singularities: union over s of
/// strata with s incidence-only singular-point blocks and k-s tangency
/// blocks.  Rejects a positive-dimensional singular locus.
TangencyVariety k_tangency_singular(const ProjectiveVariety& V, int k, const RingPtr& dual_ring);

/// (X^[k])^* back in primal coordinates; unit ideal marks the empty dual.
Ideal tangency_dual(const TangencyVariety& T, const RingPtr& primal_ring);

/// dimension of the k-th secant variety, via the join elimination
int secant_dimension(const ProjectiveVariety& V, int k);

struct RNumber {
  int value = 0;
  bool exact = false; // false: certified lower bound only
};

int r_lower_bound(const ProjectiveVariety& V);

enum class RMode { Auto, BoundOnly, Exact };
RNumber r_of_x(const ProjectiveVariety& V, RMode mode = RMode::Auto);

} // namespace cab

#endif
