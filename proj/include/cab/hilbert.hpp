#ifndef CAB_HILBERT_HPP
#define CAB_HILBERT_HPP

#include <gmpxx.h>

#include <vector>

#include "cab/ring.hpp"

namespace cab {

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/I for a monomial
/// ideal I, as dense coefficient list (index = degree).
std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

struct DimDeg {
  int affine_dim;   // Krull dimension of the affine cone; -1 for the unit ideal
  mpz_class degree; // Hilbert numerator evaluated at 1 after cancelling (1-t)
};

DimDeg dim_degree_from_leading_terms(const std::vector<Monomial>& gens, std::size_t nvars);

} // namespace cab

#endif
