#ifndef CAB_GROEBNER_HPP
#define CAB_GROEBNER_HPP

#include <vector>

#include "cab/polynomial.hpp"

namespace cab {

struct GroebnerBasis {
  std::vector<Polynomial> gens; // canonical, sorted ascending by leading monomial
  MonomialOrder order;
  bool reduced = false;

  bool contains_one() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
  }
};

struct BuchbergerOptions {
  bool use_criteria = true; // coprimality + Gebauer-Moeller pruning
};

/// Fully reduced remainder of f modulo G (any generating set).  Exact:
/// f - result lies in <G>.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Reduced Groebner basis of <gens> w.r.t. order.  Deterministic.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});

} // namespace cab

#endif
