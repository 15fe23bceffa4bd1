#ifndef CAB_BOUNDARY_HPP
#define CAB_BOUNDARY_HPP

#include <optional>
#include <string>

#include "cab/tangency.hpp"

namespace cab {

/// One piece of the candidate boundary: the dual of a k-tangency variety,
/// back in primal coordinates.
struct BoundaryComponent {
  int k = 0;
  Ideal ideal;
  bool is_hypersurface = false;
  std::optional<Polynomial> defining_poly; // squarefree, canonical
  mpz_class degree;
};

struct BoundaryDiagnostic {
  int k = 0;
  std::string status; // ok | empty | timeout
  long elapsed_ms = 0;
};

struct BoundaryOptions {
  RMode r_mode = RMode::Auto;
  double per_k_budget_seconds = 0; // 0: no per-k limit beyond the ambient one
  bool parallel_k = false;
};

struct BoundaryReport {
  int n = 0;
  int dim = 0;
  mpz_class variety_degree;
  bool singular_variant = false;
  int r_lower = 0;
  int r_used = 0;
  bool r_exact = false;
  std::vector<BoundaryComponent> components;
  std::optional<Polynomial> product_poly; // squarefree product, hypersurfaces only
  std::vector<BoundaryDiagnostic> diagnostics;
};

/// The biduality superset of the boundary of the convex hull: components of
/// the duals of the k-tangency varieties for k = r..n, with the variety
/// itself as the k=1 piece when the input is a hypersurface.  Codimension
/// >= 2 duals stay listed but are kept out of the product polynomial.
BoundaryReport algebraic_boundary(const ProjectiveVariety& V, const BoundaryOptions& opts = {});

/// (d-3)(d-2)d(d+3)/2: complex bitangents of a smooth plane curve of degree d
mpz_class plucker_bitangent_count(int d);

struct SurfaceDegrees {
  mpz_class tangency2; // deg X^[2]
  mpz_class dual2;     // deg (X^[2])^*
  mpz_class tangency3; // deg X^[3]
};

/// classical degree formulas for a general smooth surface of degree d in P^3
SurfaceDegrees surface_degree_oracles(int d);

/// d + bitangent count: degree bound for the boundary of a plane curve hull
mpz_class curve_boundary_degree_bound(int d);

} // namespace cab

#endif
