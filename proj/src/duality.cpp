#include "cab/duality.hpp"

#include "cab/budget.hpp"
#include "cab/gcd.hpp"

namespace cab {

ProjectiveVariety::ProjectiveVariety(Ideal i, std::optional<int> chart)
    : ideal(std::move(i)), chart_var(chart) {
  if (!ideal.projective())
    throw structural_error("projective variety requires a homogeneous ideal");
  if (ideal.is_unit())
    throw invalid_argument_error("projective variety: unit ideal (empty variety)");
}

RingPtr default_dual_ring(const RingPtr& primal) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < primal->nvars(); ++i) {
    std::string n = "u" + std::to_string(i);
    while (primal->var_index(n) >= 0)
      n += "_";
    names.push_back(n);
  }
  return RingContext::make(names);
}

namespace {

struct DoubledRing {
  RingPtr ring;
  std::vector<int> primal; // indices of primal block in the product ring
  std::vector<int> dual;
};

DoubledRing make_doubled(const RingPtr& primal, const std::vector<std::string>& dual_names) {
  if (dual_names.size() != primal->nvars())
    throw structural_error("dual block size mismatch");
  std::vector<std::string> names = primal->var_names();
  for (auto& d : dual_names) {
    if (primal->var_index(d) >= 0)
      throw structural_error("dual variable collides with primal: " + d);
    names.push_back(d);
  }
  DoubledRing out;
  out.ring = RingContext::make(names);
  for (std::size_t i = 0; i < primal->nvars(); ++i) {
    out.primal.push_back(static_cast<int>(i));
    out.dual.push_back(static_cast<int>(primal->nvars() + i));
  }
  return out;
}

} // namespace

Conormal conormal(const ProjectiveVariety& V, const std::vector<std::string>& dual_names) {
  const Ideal& I = V.ideal;
  int e = V.codim();
  if (e <= 0)
    throw invalid_argument_error("conormal: variety must be proper");
  DoubledRing d = make_doubled(I.ring(), dual_names);
  MonomialOrder o = MonomialOrder::grevlex();

  std::vector<Polynomial> gens;
  std::vector<Polynomial> lifted; // generators of I in the product ring
  for (auto& g : I.gens()) {
    // repeated factors leave the Jacobian degenerate along the whole zero
    // set; the squarefree part cuts out the same variety with usable
    // differentials
    lifted.push_back(squarefree_part(g).into_ring(d.ring, o));
    gens.push_back(lifted.back());
  }
  // pairing sum x_i u_i
  Polynomial pairing = Polynomial::zero(d.ring, o);
  for (std::size_t i = 0; i < d.primal.size(); ++i)
    pairing = pairing + Polynomial::variable(d.ring, d.primal[i], 1, o) *
                            Polynomial::variable(d.ring, d.dual[i], 1, o);

  // Jacobian of I w.r.t. the primal block, augmented with the gradient of
  // the pairing (the u column)
  Ideal lifted_ideal(d.ring, lifted, false);
  PolyMatrix jac = jacobian(lifted_ideal, d.primal);
  PolyMatrix aug;
  aug.rows = jac.rows;
  aug.cols = jac.cols + 1;
  for (std::size_t r = 0; r < jac.rows; ++r) {
    for (std::size_t c = 0; c < jac.cols; ++c)
      aug.entries.push_back(jac.at(r, c));
    aug.entries.push_back(Polynomial::variable(d.ring, d.dual[r], 1, o));
  }

  Ideal tang = minors(aug, e + 1);
  for (auto& m : tang.gens())
    gens.push_back(m);
  gens.push_back(pairing);

  Ideal raw(d.ring, std::move(gens), false);
  Ideal sing = minors(jac, e);
  Ideal sat = sing.is_zero_ideal() ? raw : saturate(raw, sing);

  Conormal out;
  out.ideal = std::move(sat);
  out.ring = d.ring;
  out.primal_vars = d.primal;
  out.dual_vars = d.dual;
  return out;
}

Ideal dual_of_ideal(const Ideal& I, const RingPtr& dual_ring) {
  ProjectiveVariety V(I);
  Conormal cn = conormal(V, dual_ring->var_names());
  Ideal elim = eliminate(cn.ideal, cn.primal_vars);
  std::vector<Polynomial> gens;
  for (auto& g : elim.gens())
    gens.push_back(g.into_ring(dual_ring, MonomialOrder::grevlex()));
  if (gens.size() == 1)
    gens[0] = squarefree_part(gens[0]);
  return Ideal(dual_ring, std::move(gens), true);
}

Ideal dual_variety(const ProjectiveVariety& V, const RingPtr& dual_ring) {
  return dual_of_ideal(V.ideal, dual_ring);
}

bool check_biduality(const ProjectiveVariety& V) {
  RingPtr dual_ring = default_dual_ring(V.ideal.ring());
  Ideal star = dual_variety(V, dual_ring);
  if (star.is_zero_ideal())
    return false;
  Ideal back_ring_ideal = dual_of_ideal(star, V.ideal.ring());
  // mutual radical membership
  for (auto& g : back_ring_ideal.gens())
    if (!radical_membership(g, V.ideal))
      return false;
  for (auto& g : V.ideal.gens())
    if (!radical_membership(g, back_ring_ideal))
      return false;
  return true;
}

} // namespace cab
