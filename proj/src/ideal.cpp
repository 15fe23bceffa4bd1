#include "cab/ideal.hpp"

#include <algorithm>
#include <map>

#include "cab/budget.hpp"
#include "cab/hilbert.hpp"

namespace cab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, bool projective)
    : ring_(std::move(ring)), projective_(projective) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.ring() != ring_)
      throw structural_error("ideal generator from a different ring");
    if (!g.is_zero())
      gens_.push_back(std::move(g));
  }
  if (projective_)
    for (auto& g : gens_)
      if (!g.is_homogeneous())
        throw structural_error("projective ideal with inhomogeneous generator");
}

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  std::string key = order.key();
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (auto& [k, b] : cache_->bases)
    if (k == key)
      return b;
  GroebnerBasis basis;
  {
    // compute outside the lock would be nicer; contention is not a concern here
    basis = buchberger(gens_, order);
  }
  cache_->bases.emplace_back(std::move(key), std::move(basis));
  return cache_->bases.back().second;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.ring() != ring_)
    throw structural_error("membership: ring mismatch");
  if (f.is_zero())
    return true;
  if (gens_.empty())
    return false;
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::is_unit() const { return !gens_.empty() && groebner().contains_one(); }

bool Ideal::gens_homogeneous() const {
  for (auto& g : gens_)
    if (!g.is_homogeneous())
      return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  if (ring_ != other.ring_)
    return false;
  const auto& a = groebner().gens;
  const auto& b = other.groebner().gens;
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i]))
      return false;
  return true;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& front_vars) {
  if (front_vars.empty())
    return I;
  for (int v : front_vars)
    if (v < 0 || static_cast<std::size_t>(v) >= I.ring()->nvars())
      throw structural_error("eliminate: variable index out of range");
  MonomialOrder order = MonomialOrder::block_elim(front_vars, I.ring()->nvars());
  const GroebnerBasis& gb = I.groebner(order);
  std::vector<bool> is_front(I.ring()->nvars(), false);
  for (int v : front_vars)
    is_front[static_cast<std::size_t>(v)] = true;
  std::vector<Polynomial> kept;
  for (auto& g : gb.gens) {
    bool free_of_front = true;
    for (auto& t : g.terms()) {
      for (std::size_t i = 0; i < is_front.size() && free_of_front; ++i)
        if (is_front[i] && t.mono[i] != 0)
          free_of_front = false;
      if (!free_of_front)
        break;
    }
    if (free_of_front)
      kept.push_back(g.reordered(MonomialOrder::grevlex()));
  }
  bool proj = I.projective();
  for (auto& g : kept)
    proj = proj && g.is_homogeneous();
  return Ideal(I.ring(), std::move(kept), proj);
}

Ideal saturate(const Ideal& I, const Polynomial& g) {
  if (g.is_zero())
    throw invalid_argument_error("saturation by the zero polynomial");
  if (g.ring() != I.ring())
    throw structural_error("saturate: ring mismatch");
  if (g.is_constant())
    return I;
  std::string tname = fresh_var_name(I.ring(), "t");
  RingPtr ext = extend_ring(I.ring(), {tname});
  int tv = ext->var_index(tname);
  MonomialOrder order = MonomialOrder::block_elim({tv}, ext->nvars());
  std::vector<Polynomial> gens;
  for (auto& f : I.gens())
    gens.push_back(f.into_ring(ext, order));
  // 1 - t*g
  Polynomial tg = Polynomial::variable(ext, tv, 1, order) * g.into_ring(ext, order);
  gens.push_back(Polynomial::constant(ext, 1, order) - tg);
  Ideal tagged(ext, std::move(gens), false);
  Ideal elim = eliminate(tagged, {tv});
  // back to the original ring
  std::vector<Polynomial> out;
  for (auto& f : elim.gens())
    out.push_back(f.into_ring(I.ring(), MonomialOrder::grevlex()));
  bool proj = I.projective();
  for (auto& f : out)
    proj = proj && f.is_homogeneous();
  return Ideal(I.ring(), std::move(out), proj);
}


Ideal saturate(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring())
    throw structural_error("saturate: ring mismatch");
  if (J.is_zero_ideal())
    throw invalid_argument_error("saturation by the zero ideal");
  std::vector<Polynomial> jg = J.gens();
  if (jg.size() == 1)
    return saturate(I, jg[0]);

  // I:J^infty is the intersection of the single-generator saturations.
  // Work through the generators sparsest-first (short polynomials keep the
  // tag elimination small) and keep a running intersection R; each new piece
  // C is only intersected in when R is not already inside it, which a few
  // normal forms of R's generators against C decide exactly.
  std::sort(jg.begin(), jg.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.terms().size() < b.terms().size();
  });
  Ideal R;
  bool have = false;
  for (auto& g : jg) {
    Budget::check();
    Ideal C = saturate(I, g);
    if (!have) {
      R = std::move(C);
      have = true;
      continue;
    }
    const GroebnerBasis& gb = C.groebner();
    bool contained = true;
    for (auto& f : R.gens()) {
      Budget::check();
      if (!normal_form(f.reordered(MonomialOrder::grevlex()), gb).is_zero()) {
        contained = false;
        break;
      }
    }
    if (!contained)
      R = intersect(R, C);
  }
  return R;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring())
    throw structural_error("intersect: ring mismatch");
  if (I.is_zero_ideal())
    return I;
  if (J.is_zero_ideal())
    return J;
  std::string tname = fresh_var_name(I.ring(), "t");
  RingPtr ext = extend_ring(I.ring(), {tname});
  int tv = ext->var_index(tname);
  MonomialOrder order = MonomialOrder::block_elim({tv}, ext->nvars());
  Polynomial t = Polynomial::variable(ext, tv, 1, order);
  Polynomial one_minus_t = Polynomial::constant(ext, 1, order) - t;
  std::vector<Polynomial> gens;
  for (auto& f : I.gens())
    gens.push_back(t * f.into_ring(ext, order));
  for (auto& f : J.gens())
    gens.push_back(one_minus_t * f.into_ring(ext, order));
  Ideal tagged(ext, std::move(gens), false);
  Ideal elim = eliminate(tagged, {tv});
  std::vector<Polynomial> out;
  for (auto& f : elim.gens())
    out.push_back(f.into_ring(I.ring(), MonomialOrder::grevlex()));
  bool proj = I.projective() && J.projective();
  for (auto& f : out)
    proj = proj && f.is_homogeneous();
  return Ideal(I.ring(), std::move(out), proj);
}

namespace {

DimDeg dim_degree(const Ideal& I) {
  const GroebnerBasis& gb = I.groebner(MonomialOrder::grevlex());
  std::vector<Monomial> lts;
  lts.reserve(gb.gens.size());
  for (auto& g : gb.gens)
    lts.push_back(g.leading_monomial());
  return dim_degree_from_leading_terms(lts, I.ring()->nvars());
}

} // namespace

int dimension(const Ideal& I) {
  {
    std::lock_guard<std::mutex> lock(I.cache_->mu);
    if (I.cache_->dim)
      return *I.cache_->dim;
  }
  DimDeg dd = dim_degree(I);
  int d = dd.affine_dim;
  if (I.projective())
    d = d - 1; // cone dimension minus one; empty cone stays the -1 sentinel
  if (dd.affine_dim < 0)
    d = -1;
  std::lock_guard<std::mutex> lock(I.cache_->mu);
  I.cache_->dim = d;
  I.cache_->deg = dd.degree;
  return d;
}

mpz_class degree(const Ideal& I) {
  {
    std::lock_guard<std::mutex> lock(I.cache_->mu);
    if (I.cache_->deg)
      return *I.cache_->deg;
  }
  dimension(I);
  std::lock_guard<std::mutex> lock(I.cache_->mu);
  return *I.cache_->deg;
}

int codim(const Ideal& I) {
  int n = static_cast<int>(I.ring()->nvars());
  if (I.projective())
    return (n - 1) - dimension(I);
  return n - dimension(I);
}

Ideal homogenize(const Ideal& I, const std::string& homog_var) {
  if (I.ring()->var_index(homog_var) >= 0)
    throw structural_error("homogenize: variable already in ring: " + homog_var);
  RingPtr ext = extend_ring(I.ring(), {homog_var});
  int hv = ext->var_index(homog_var);
  std::vector<Polynomial> gens;
  for (auto& f : I.gens())
    gens.push_back(f.into_ring(ext, MonomialOrder::grevlex()).homogenized(hv));
  Ideal H(ext, std::move(gens), true);
  Ideal sat = saturate(H, Polynomial::variable(ext, hv));
  return Ideal(ext, sat.gens(), true);
}

Polynomial dehomogenize(const Polynomial& p, int var) { return p.substitute_one(var); }

PolyMatrix jacobian(const Ideal& I, const std::vector<int>& vars) {
  PolyMatrix M;
  M.rows = vars.size();
  M.cols = I.gens().size();
  M.entries.reserve(M.rows * M.cols);
  for (int v : vars)
    for (auto& g : I.gens())
      M.entries.push_back(g.derivative(v));
  return M;
}

PolyMatrix jacobian(const Ideal& I) {
  std::vector<int> vars(I.ring()->nvars());
  for (std::size_t i = 0; i < vars.size(); ++i)
    vars[i] = static_cast<int>(i);
  return jacobian(I, vars);
}

namespace {

// determinant of the submatrix (rows, cols) by cofactor expansion with
// memoization on the column subset
Polynomial minor_det(const PolyMatrix& M, const std::vector<int>& rows, std::vector<int> cols,
                     std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial>& memo) {
  if (rows.size() == 1)
    return M.at(static_cast<std::size_t>(rows[0]), static_cast<std::size_t>(cols[0]));
  auto key = std::make_pair(rows, cols);
  auto it = memo.find(key);
  if (it != memo.end())
    return it->second;
  Polynomial acc = Polynomial::zero(M.entries[0].ring(), M.entries[0].order());
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& e = M.at(static_cast<std::size_t>(rows[0]), static_cast<std::size_t>(cols[j]));
    if (e.is_zero())
      continue;
    std::vector<int> subcols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j)
        subcols.push_back(cols[k]);
    Polynomial sub = minor_det(M, subrows, std::move(subcols), memo);
    Polynomial prod = e * sub;
    acc = (j % 2 == 0) ? acc + prod : acc - prod;
  }
  memo.emplace(std::move(key), acc);
  return acc;
}

} // namespace

Ideal minors(const PolyMatrix& M, int r) {
  if (r <= 0)
    throw invalid_argument_error("minors: size must be positive");
  if (M.entries.empty())
    throw invalid_argument_error("minors of an empty matrix");
  if (r > 6)
    throw invalid_argument_error("minors larger than 6x6 are not supported");
  RingPtr ring = M.entries[0].ring();
  if (static_cast<std::size_t>(r) > M.rows || static_cast<std::size_t>(r) > M.cols)
    return Ideal(ring, {}, false);
  std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo;
  std::vector<Polynomial> gens;
  // enumerate row and column subsets of size r
  std::vector<int> rsel(static_cast<std::size_t>(r)), csel(static_cast<std::size_t>(r));
  std::vector<int> ridx(M.rows), cidx(M.cols);
  for (std::size_t i = 0; i < M.rows; ++i)
    ridx[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < M.cols; ++i)
    cidx[i] = static_cast<int>(i);
  std::vector<std::vector<int>> rsets, csets;
  auto subsets = [](const std::vector<int>& idx, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == static_cast<std::size_t>(k)) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < idx.size(); ++i) {
        cur.push_back(idx[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  rsets = subsets(ridx, r);
  csets = subsets(cidx, r);
  for (auto& rs : rsets)
    for (auto& cs : csets) {
      Polynomial d = minor_det(M, rs, cs, memo);
      if (!d.is_zero())
        gens.push_back(d.normalized());
    }
  return Ideal(ring, std::move(gens), false);
}

Polynomial det(const PolyMatrix& M) {
  if (M.rows != M.cols || M.rows == 0)
    throw invalid_argument_error("det: square nonempty matrix required");
  std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo;
  std::vector<int> rs(M.rows), cs(M.cols);
  for (std::size_t i = 0; i < M.rows; ++i)
    rs[i] = cs[i] = static_cast<int>(i);
  return minor_det(M, rs, cs, memo);
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  if (f.ring() != I.ring())
    throw structural_error("radical membership: ring mismatch");
  if (f.is_zero())
    return true;
  if (I.is_zero_ideal())
    return false;
  std::string tname = fresh_var_name(I.ring(), "t");
  RingPtr ext = extend_ring(I.ring(), {tname});
  int tv = ext->var_index(tname);
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (auto& g : I.gens())
    gens.push_back(g.into_ring(ext, order));
  Polynomial tf = Polynomial::variable(ext, tv, 1, order) * f.into_ring(ext, order);
  gens.push_back(Polynomial::constant(ext, 1, order) - tf);
  return buchberger(gens, order).contains_one();
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = ring->var_names();
  for (auto& v : extra)
    vars.push_back(v);
  return RingContext::make(std::move(vars));
}

std::string fresh_var_name(const RingPtr& ring, const std::string& base) {
  std::string name = base;
  while (ring->var_index(name) >= 0)
    name += "_";
  return name;
}

Ideal map_ideal(const Ideal& I, const RingPtr& target) {
  std::vector<Polynomial> gens;
  for (auto& g : I.gens())
    gens.push_back(g.into_ring(target, MonomialOrder::grevlex()));
  return Ideal(target, std::move(gens), I.projective());
}

Ideal restrict_ideal(const Ideal& I, const std::vector<std::string>& vars, bool projective) {
  RingPtr sub = RingContext::make(vars);
  std::vector<Polynomial> gens;
  for (auto& g : I.gens())
    gens.push_back(g.into_ring(sub, MonomialOrder::grevlex()));
  return Ideal(sub, std::move(gens), projective);
}

} // namespace cab
