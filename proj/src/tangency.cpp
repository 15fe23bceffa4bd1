#include "cab/tangency.hpp"

#include <algorithm>
#include <map>

#include "cab/budget.hpp"
#include "cab/duality.hpp"
#include "cab/gcd.hpp"

namespace cab {

SingularLocus singular_locus(const ProjectiveVariety& V) {
  const Ideal& I = V.ideal;
  int e = V.codim();
  std::vector<Polynomial> gens = I.gens();
  Ideal jac_minors = minors(jacobian(I), e);
  for (auto& m : jac_minors.gens())
    gens.push_back(m);
  Ideal raw(I.ring(), std::move(gens), false);
  Ideal sat;
  if (V.chart_var) {
    // affine singularities only: drop everything on the hyperplane at infinity
    sat = saturate(raw, Polynomial::variable(I.ring(), *V.chart_var));
  } else {
    std::vector<Polynomial> irrelevant;
    for (std::size_t i = 0; i < I.ring()->nvars(); ++i)
      irrelevant.push_back(Polynomial::variable(I.ring(), static_cast<int>(i)));
    sat = saturate(raw, Ideal(I.ring(), std::move(irrelevant), true));
  }
  // The tag-variable saturation may hand back non-homogeneous generators of
  // the (homogeneous) result; replace each by its graded pieces.
  std::vector<Polynomial> hom_gens;
  for (auto& g : sat.gens()) {
    std::map<uint32_t, std::vector<Term>> by_deg;
    for (auto& t : g.terms())
      by_deg[t.mono.degree()].push_back(t);
    for (auto& [d, ts] : by_deg)
      hom_gens.push_back(Polynomial::from_terms(I.ring(), g.order(), ts));
  }
  SingularLocus out;
  // finite <=> the affine cone is at most a union of lines through 0
  Ideal affine(I.ring(), hom_gens, false);
  out.is_finite = dimension(affine) <= 1;
  out.ideal = Ideal(I.ring(), std::move(hom_gens), true);
  return out;
}

namespace {

struct TangencyRing {
  RingPtr ring;
  std::vector<std::vector<int>> blocks; // point blocks, each n+1 vars
  std::vector<int> dual;                // u block
  std::vector<int> all_points;          // union of the point blocks
};

TangencyRing make_tangency_ring(const RingPtr& primal, int k,
                                const std::vector<std::string>& dual_names) {
  std::vector<std::string> names;
  TangencyRing out;
  std::size_t n1 = primal->nvars();
  for (int i = 1; i <= k; ++i) {
    std::vector<int> blk;
    for (std::size_t j = 0; j < n1; ++j) {
      blk.push_back(static_cast<int>(names.size()));
      names.push_back("p" + std::to_string(i) + "_" + primal->var_name(j));
    }
    out.blocks.push_back(std::move(blk));
  }
  for (auto& d : dual_names) {
    out.dual.push_back(static_cast<int>(names.size()));
    names.push_back(d);
  }
  out.ring = RingContext::make(names);
  for (auto& b : out.blocks)
    for (int v : b)
      out.all_points.push_back(v);
  return out;
}

Polynomial move_to_block(const Polynomial& f, const TangencyRing& tr, int block) {
  std::vector<int> var_map(f.ring()->nvars());
  for (std::size_t j = 0; j < var_map.size(); ++j)
    var_map[j] = tr.blocks[static_cast<std::size_t>(block)][j];
  return f.map_vars(tr.ring, var_map, MonomialOrder::grevlex());
}

/// stratum with s singular-incidence blocks (1..s) and k-s tangency blocks
Ideal tangency_stratum(const ProjectiveVariety& V, int k, int s, const Ideal* sing_locus,
                       const RingPtr& dual_ring) {
  const Ideal& I = V.ideal;
  std::size_t n1 = I.ring()->nvars();
  TangencyRing tr = make_tangency_ring(I.ring(), k, dual_ring->var_names());
  MonomialOrder o = MonomialOrder::grevlex();

  // Every tangency block carries the same incidence-tangency equations,
  // already saturated by its own singular minors: the conormal ideal of V.
  // Compute it once in the small product ring and map it into each block;
  // only the spanning-minor saturation then runs in the big ring.
  std::vector<Polynomial> conormal_piece;
  std::vector<int> cn_primal, cn_dual;
  RingPtr cn_ring;
  if (s < k) {
    Conormal cn = conormal(V, dual_ring->var_names());
    cn_ring = cn.ring;
    cn_primal = cn.primal_vars;
    cn_dual = cn.dual_vars;
    // the tag saturation may present the (multihomogeneous) conormal ideal
    // with non-multihomogeneous generators; split them into bidegree pieces
    for (auto& g : cn.ideal.gens()) {
      std::map<std::pair<uint32_t, uint32_t>, std::vector<Term>> by_bideg;
      for (auto& t : g.terms()) {
        uint32_t dp = 0, du = 0;
        for (int v : cn_primal)
          dp += t.mono[static_cast<std::size_t>(v)];
        for (int v : cn_dual)
          du += t.mono[static_cast<std::size_t>(v)];
        by_bideg[{dp, du}].push_back(t);
      }
      for (auto& [bd, ts] : by_bideg)
        conormal_piece.push_back(Polynomial::from_terms(cn_ring, g.order(), ts));
    }
  }

  std::vector<Polynomial> gens;
  for (int i = 0; i < k; ++i) {
    bool singular_block = i < s;
    if (singular_block) {
      for (auto& g : sing_locus->gens())
        gens.push_back(move_to_block(g, tr, i));
      // incidence: the hyperplane u passes through the point
      Polynomial inc = Polynomial::zero(tr.ring, o);
      for (std::size_t j = 0; j < n1; ++j)
        inc = inc + Polynomial::variable(tr.ring, tr.blocks[static_cast<std::size_t>(i)][j], 1, o) *
                        Polynomial::variable(tr.ring, tr.dual[j], 1, o);
      gens.push_back(inc);
    } else {
      std::vector<int> var_map(cn_ring->nvars(), -1);
      for (std::size_t j = 0; j < n1; ++j) {
        var_map[static_cast<std::size_t>(cn_primal[j])] =
            tr.blocks[static_cast<std::size_t>(i)][j];
        var_map[static_cast<std::size_t>(cn_dual[j])] = tr.dual[j];
      }
      for (auto& g : conormal_piece)
        gens.push_back(g.map_vars(tr.ring, var_map, o));
    }
  }

  // block-homogeneity sanity check on the incidence ideal
  for (auto& g : gens) {
    for (auto& blk : tr.blocks)
      if (!g.is_homogeneous_in(blk))
        throw structural_error("tangency construction produced a non-multihomogeneous generator");
    if (!g.is_homogeneous_in(tr.dual))
      throw structural_error("tangency construction produced a non-multihomogeneous generator");
  }

  Ideal cur(tr.ring, std::move(gens), false);
  // conormal() already removed the over-singular components block by block,
  // but the blocks share u: joint limits whose points all sit over the
  // singular locus can survive.  Remove them by saturating the joint ideal,
  // per tangency block, by the full projective singular locus (the whole of
  // it, not the affine-chart restriction).
  if (s < k) {
    ProjectiveVariety full(I);
    SingularLocus S = singular_locus(full);
    if (!S.ideal.is_unit()) {
      for (int i = s; i < k; ++i) {
        Budget::check();
        std::vector<Polynomial> mv;
        for (auto& m : S.ideal.gens())
          mv.push_back(move_to_block(m, tr, i));
        cur = saturate(cur, Ideal(tr.ring, std::move(mv), false));
      }
    }
  }
  if (k >= 2) {
    PolyMatrix pts;
    pts.rows = static_cast<std::size_t>(k);
    pts.cols = n1;
    for (int i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n1; ++j)
        pts.entries.push_back(
            Polynomial::variable(tr.ring, tr.blocks[static_cast<std::size_t>(i)][j], 1, o));
    cur = saturate(cur, minors(pts, k));
  }

  Ideal elim = eliminate(cur, tr.all_points);
  std::vector<Polynomial> out;
  for (auto& g : elim.gens())
    out.push_back(g.into_ring(dual_ring, MonomialOrder::grevlex()));
  Ideal result(dual_ring, std::move(out), true);
  // affine input: the hyperplane family is read in the chart where the
  // homogenizing coordinate of the plane is nonzero, so components made of
  // planes through the origin (dual chart's hyperplane at infinity) are
  // outside the parameterization and get removed
  if (V.chart_var)
    result = saturate(result, Polynomial::variable(dual_ring, *V.chart_var));
  return result;
}

} // namespace

TangencyVariety k_tangency(const ProjectiveVariety& V, int k, const RingPtr& dual_ring) {
  int n = V.ambient_dim();
  if (k < 1 || k > n)
    throw invalid_argument_error("k_tangency: k out of range");
  TangencyVariety out;
  out.k = k;
  out.dual_ring = dual_ring;
  out.variant = TangencyVariety::Variant::Smooth;
  out.ideal = tangency_stratum(V, k, 0, nullptr, dual_ring);
  return out;
}

TangencyVariety k_tangency_singular(const ProjectiveVariety& V, int k, const RingPtr& dual_ring) {
  int n = V.ambient_dim();
  if (k < 1 || k > n)
    throw invalid_argument_error("k_tangency_singular: k out of range");
  SingularLocus S = singular_locus(V);
  bool no_singularities = S.ideal.is_unit();
  if (!no_singularities && !S.is_finite)
    throw invalid_argument_error(
        "k_tangency_singular: positive-dimensional singular locus unsupported");

  TangencyVariety out;
  out.k = k;
  out.dual_ring = dual_ring;
  out.variant = TangencyVariety::Variant::WithSingularities;
  Ideal acc;
  bool have = false;
  int smax = no_singularities ? 0 : k;
  for (int s = 0; s <= smax; ++s) {
    Budget::check();
    Ideal stratum = tangency_stratum(V, k, s, &S.ideal, dual_ring);
    if (stratum.is_unit())
      continue; // empty stratum
    if (!have) {
      acc = std::move(stratum);
      have = true;
    } else {
      acc = intersect(acc, stratum);
    }
  }
  if (!have)
    acc = Ideal(dual_ring, {Polynomial::constant(dual_ring, 1)}, true);
  out.ideal = std::move(acc);
  return out;
}

Ideal tangency_dual(const TangencyVariety& T, const RingPtr& primal_ring) {
  if (T.ideal.is_unit() || dimension(T.ideal) < 0) {
    // empty tangency variety dualizes to the empty variety
    return Ideal(primal_ring, {Polynomial::constant(primal_ring, 1)}, true);
  }
  return dual_of_ideal(T.ideal, primal_ring);
}

int secant_dimension(const ProjectiveVariety& V, int k) {
  if (k < 1)
    throw invalid_argument_error("secant_dimension: k must be positive");
  const Ideal& I = V.ideal;
  std::size_t n1 = I.ring()->nvars();
  // ring: k point blocks, k join coefficients, then the ambient copy
  std::vector<std::string> names;
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= k; ++i) {
    std::vector<int> blk;
    for (std::size_t j = 0; j < n1; ++j) {
      blk.push_back(static_cast<int>(names.size()));
      names.push_back("p" + std::to_string(i) + "_" + I.ring()->var_name(j));
    }
    blocks.push_back(std::move(blk));
  }
  std::vector<int> lambda;
  for (int i = 1; i <= k; ++i) {
    lambda.push_back(static_cast<int>(names.size()));
    names.push_back("l" + std::to_string(i));
  }
  std::vector<int> zvars;
  for (std::size_t j = 0; j < n1; ++j) {
    zvars.push_back(static_cast<int>(names.size()));
    names.push_back(I.ring()->var_name(j));
  }
  RingPtr big = RingContext::make(names);
  MonomialOrder o = MonomialOrder::grevlex();

  std::vector<Polynomial> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> var_map(n1);
    for (std::size_t j = 0; j < n1; ++j)
      var_map[j] = blocks[static_cast<std::size_t>(i)][j];
    for (auto& g : I.gens())
      gens.push_back(g.map_vars(big, var_map, o));
  }
  for (std::size_t j = 0; j < n1; ++j) {
    Polynomial rhs = Polynomial::zero(big, o);
    for (int i = 0; i < k; ++i)
      rhs = rhs + Polynomial::variable(big, lambda[static_cast<std::size_t>(i)], 1, o) *
                      Polynomial::variable(big, blocks[static_cast<std::size_t>(i)][j], 1, o);
    gens.push_back(Polynomial::variable(big, zvars[j], 1, o) - rhs);
  }
  std::vector<int> front;
  for (auto& b : blocks)
    for (int v : b)
      front.push_back(v);
  for (int v : lambda)
    front.push_back(v);
  Ideal join(big, std::move(gens), false);
  Ideal elim = eliminate(join, front);
  Ideal secant = restrict_ideal(elim, I.ring()->var_names(), true);
  return dimension(secant);
}

int r_lower_bound(const ProjectiveVariety& V) {
  int n = V.ambient_dim();
  int d = V.dim();
  return (n + d) / (d + 1); // ceil(n / (dim+1))
}

RNumber r_of_x(const ProjectiveVariety& V, RMode mode) {
  int n = V.ambient_dim();
  int lb = r_lower_bound(V);
  bool bound_only = mode == RMode::BoundOnly ||
                    (mode == RMode::Auto && (V.dim() >= 2 || n >= 5));
  if (bound_only)
    return {lb, false};
  try {
    for (int k = lb; k <= n; ++k) {
      if (secant_dimension(V, k) >= n - 1)
        return {k, true};
    }
  } catch (const budget_exceeded&) {
    return {lb, false};
  }
  return {n, true};
}

} // namespace cab
