#ifndef CAB_IDEAL_HPP
#define CAB_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cab/groebner.hpp"
#include "cab/polynomial.hpp"

namespace cab {

/// Generator set with cached Groebner bases and dimension/degree.
/// Copies share the cache.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens, bool projective = false);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool projective() const { return projective_; }
  bool is_zero_ideal() const;

  /// reduced Groebner basis, cached per order
  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool contains(const Polynomial& f) const; // exact membership via normal form
  bool is_unit() const;                     // 1 in I
  bool gens_homogeneous() const;

  /// same ideal test via reduced grevlex bases
  bool equals(const Ideal& other) const;

private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<std::string, GroebnerBasis>> bases;
    std::optional<int> dim;
    std::optional<mpz_class> deg;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool projective_ = false;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

  friend int dimension(const Ideal&);
  friend mpz_class degree(const Ideal&);
};

struct PolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Polynomial> entries; // row-major
  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// I  cap  Q[vars minus front]: generators free of the front variables.
Ideal eliminate(const Ideal& I, const std::vector<int>& front_vars);

/// I : J^infty.  Tag-variable construction per generator.
Ideal saturate(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Polynomial& g);

Ideal intersect(const Ideal& I, const Ideal& J);

/// Krull dimension (projective when the ideal carries the projective flag;
/// then the affine cone dimension minus one).  Unit ideal: -1.
int dimension(const Ideal& I);
mpz_class degree(const Ideal& I);
int codim(const Ideal& I);

/// Projective closure: per-generator homogenization with a fresh variable
/// appended to the ring, then saturation by that variable.
Ideal homogenize(const Ideal& I, const std::string& homog_var);
Polynomial dehomogenize(const Polynomial& p, int var);

/// (#vars x #gens) matrix of partial derivatives
PolyMatrix jacobian(const Ideal& I, const std::vector<int>& vars);
PolyMatrix jacobian(const Ideal& I);

/// ideal of all r x r minors
Ideal minors(const PolyMatrix& M, int r);
Polynomial det(const PolyMatrix& M);

/// f in radical(I), tag-variable membership test on the affine cone
bool radical_membership(const Polynomial& f, const Ideal& I);

// ring plumbing
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);
std::string fresh_var_name(const RingPtr& ring, const std::string& base);
/// move I into a target ring containing all used variables (by name)
Ideal map_ideal(const Ideal& I, const RingPtr& target);
/// restrict I to the subring on the named variables; throws if a generator
/// uses a variable outside the subset
Ideal restrict_ideal(const Ideal& I, const std::vector<std::string>& vars, bool projective);

} // namespace cab

#endif
