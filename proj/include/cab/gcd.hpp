#ifndef CAB_GCD_HPP
#define CAB_GCD_HPP

#include "cab/polynomial.hpp"

namespace cab {

/// Multivariate gcd over Q, canonical-normalized (integer, content 1,
/// positive lead).  Primitive PRS with a certified specialization shortcut
/// for the coprime case.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors of f, canonical-normalized:
/// f / gcd(f, df/dx_1, ..., df/dx_n).  Constant input yields 1.
Polynomial squarefree_part(const Polynomial& f);

} // namespace cab

#endif
