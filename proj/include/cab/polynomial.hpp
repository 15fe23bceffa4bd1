#ifndef CAB_POLYNOMIAL_HPP
#define CAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cab/ring.hpp"

namespace cab {

struct Term {
  mpq_class coeff;
  Monomial mono;
};

/// Sparse multivariate polynomial over Q.  Terms are kept strictly
/// descending in the carried monomial order; the zero polynomial is the
/// empty term list.  Immutable value type: all operations return new values.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(RingPtr ring, MonomialOrder order)
      : ring_(std::move(ring)), order_(std::move(order)) {}

  static Polynomial zero(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(RingPtr ring, const mpq_class& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(RingPtr ring, int var, uint32_t exp = 1,
                             MonomialOrder order = MonomialOrder::grevlex());
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t nterms() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const mpq_class& leading_coeff() const { return leading_term().coeff; }
  uint32_t total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpq_class& c) const;
  Polynomial term_mul(const mpq_class& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;

  /// c1*a + c2*(m*b), single sorted merge.  a and b must share ring/order.
  static Polynomial axpy(const mpq_class& c1, const Polynomial& a, const mpq_class& c2,
                         const Monomial& m, const Polynomial& b);

  Polynomial reordered(const MonomialOrder& order) const;

  /// Canonical normalization: integer coefficients, content 1, positive
  /// leading coefficient.  Zero stays zero.
  Polynomial normalized() const;
  /// gcd of integer coefficients after clearing denominators (positive)
  mpz_class integer_content() const;

  Polynomial derivative(int var) const;
  bool is_homogeneous() const;
  /// homogeneous in the given variable subset (other vars ignored)
  bool is_homogeneous_in(const std::vector<int>& vars) const;
  /// per-generator homogenization with variable hv (already in the ring)
  Polynomial homogenized(int hv) const;
  /// substitute variable := 1
  Polynomial substitute_one(int var) const;

  /// map into another ring: exponent of old var i goes to new var var_map[i]
  Polynomial map_vars(const RingPtr& target, const std::vector<int>& var_map,
                      const MonomialOrder& order) const;
  /// map into a ring that contains (at least) all variables used, by name
  Polynomial into_ring(const RingPtr& target, const MonomialOrder& order) const;

  std::optional<Polynomial> exact_divide(const Polynomial& q) const;

  std::string str() const; // canonical text form

private:
  void check_same(const Polynomial& o) const;

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

std::string format(const Polynomial& p);

} // namespace cab

#endif
