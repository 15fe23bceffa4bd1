#include "cab/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>

#include "cab/budget.hpp"

namespace cab {

namespace {

// fraction-free full reduction.  On return, remainder = scale * (f mod G)
// for some positive rational scale; if scale_out is given it receives the
// exact accumulated multiplier so the true remainder is result / *scale_out.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G,
                       mpq_class* scale_out) {
  // clear denominators up front
  mpz_class den(1);
  for (auto& t : f.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  Polynomial r = f.scaled(mpq_class(den));
  mpq_class scale(den);

  std::size_t idx = 0;
  int steps_since_content = 0;
  while (idx < r.terms().size()) {
    Budget::check();
    const Term& t = r.terms()[idx];
    // among applicable reducers prefer the sparsest: less fill-in per step
    const Polynomial* g = nullptr;
    for (auto& cand : G) {
      if (cand.leading_monomial().divides(t.mono) &&
          (!g || cand.terms().size() < g->terms().size()))
        g = &cand;
    }
    if (!g) {
      ++idx;
      continue;
    }
    // r <- (a/gamma) * r - (b/gamma) * m * g,  a = lc(g), b = coeff(t)
    mpz_class a = g->leading_coeff().get_num(); // generators are integer-normalized
    mpz_class b = t.coeff.get_num();
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class c1 = a / gamma, c2 = -b / gamma;
    Monomial m = t.mono / g->leading_monomial();
    r = Polynomial::axpy(mpq_class(c1), r, mpq_class(c2), m, *g);
    scale *= c1;
    if (++steps_since_content >= 6) {
      steps_since_content = 0;
      mpz_class cont = r.integer_content();
      if (cont > 1) {
        r = r.scaled(mpq_class(mpz_class(1), cont));
        scale /= cont;
      }
    }
  }
  if (scale_out)
    *scale_out = scale;
  return r;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  mpz_class a = f.leading_coeff().get_num();
  mpz_class b = g.leading_coeff().get_num();
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Monomial u = L / f.leading_monomial();
  Monomial v = L / g.leading_monomial();
  return Polynomial::axpy(1, f.term_mul(mpq_class(b / gamma), u), mpq_class(-a / gamma), v, g);
}

struct Pair {
  int i, j;
  Monomial lcm;
};

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  basis.reserve(G.size());
  for (auto& g : G) {
    if (g.is_zero())
      continue;
    if (g.ring() != f.ring())
      throw structural_error("normal_form: ring mismatch");
    basis.push_back(g.reordered(order).normalized());
  }
  mpq_class scale;
  Polynomial r = reduce_full(f.reordered(order), basis, &scale);
  return r.scaled(1 / scale);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G.gens, G.order);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  if (gens.empty())
    return out;
  static const bool trace = std::getenv("CAB_TRACE") != nullptr;
  auto t0 = std::chrono::steady_clock::now();
  long reductions = 0;
  if (trace)
    std::fprintf(stderr, "[gb] start: in=%zu, nvars=%zu, order=%s\n", gens.size(),
                 gens.front().ring()->nvars(),
                 order.kind() == MonomialOrder::Kind::Block
                     ? "block"
                     : (order.kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex"));

  std::vector<Polynomial> inputs;
  for (auto& g : gens)
    if (!g.is_zero())
      inputs.push_back(g.reordered(order).normalized());
  std::sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });

  std::vector<Polynomial> G;
  std::deque<Pair> pairs;

  auto update = [&](Polynomial h) {
    int s = static_cast<int>(G.size());
    const Monomial& lts = h.leading_monomial();
    std::vector<Pair> fresh;
    fresh.reserve(G.size());
    for (int i = 0; i < s; ++i)
      fresh.push_back({i, s, Monomial::lcm(G[static_cast<std::size_t>(i)].leading_monomial(), lts)});

    if (opts.use_criteria) {
      // Gebauer-Moeller: drop new pairs whose lcm is a proper multiple of
      // another new pair's lcm
      std::vector<bool> drop(fresh.size(), false);
      for (std::size_t a = 0; a < fresh.size(); ++a)
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          if (a == b || drop[a])
            continue;
          if (!(fresh[b].lcm == fresh[a].lcm) && fresh[b].lcm.divides(fresh[a].lcm) && !drop[b])
            drop[a] = true;
        }
      // equal-lcm groups: coprime leading monomials kill the whole group,
      // otherwise keep a single representative
      std::vector<Pair> kept;
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a])
          continue;
        bool group_coprime = false, first_of_group = true;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          if (drop[b] || b == a)
            continue;
          if (fresh[b].lcm == fresh[a].lcm) {
            if (b < a)
              first_of_group = false;
            if (G[static_cast<std::size_t>(fresh[b].i)].leading_monomial().coprime(lts))
              group_coprime = true;
          }
        }
        if (G[static_cast<std::size_t>(fresh[a].i)].leading_monomial().coprime(lts))
          group_coprime = true;
        if (!group_coprime && first_of_group)
          kept.push_back(fresh[a]);
      }
      fresh = std::move(kept);
      // prune old pairs superseded by the new element (chain criterion)
      std::deque<Pair> remaining;
      for (auto& p : pairs) {
        const Monomial& li = G[static_cast<std::size_t>(p.i)].leading_monomial();
        const Monomial& lj = G[static_cast<std::size_t>(p.j)].leading_monomial();
        if (lts.divides(p.lcm) && !(Monomial::lcm(li, lts) == p.lcm) &&
            !(Monomial::lcm(lj, lts) == p.lcm))
          continue;
        remaining.push_back(p);
      }
      pairs = std::move(remaining);
    }
    for (auto& p : fresh)
      pairs.push_back(p);
    G.push_back(std::move(h));
  };

  for (auto& f : inputs) {
    Polynomial r = reduce_full(f, G, nullptr);
    if (!r.is_zero())
      update(r.normalized());
  }

  while (!pairs.empty()) {
    Budget::check();
    // normal strategy: minimal lcm degree, then order on lcm, then indices
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      const Pair& p = pairs[a];
      const Pair& q = pairs[best];
      if (p.lcm.degree() != q.lcm.degree()) {
        if (p.lcm.degree() < q.lcm.degree())
          best = a;
        continue;
      }
      auto c = order.compare(p.lcm, q.lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal &&
           std::pair(p.i, p.j) < std::pair(q.i, q.j)))
        best = a;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Polynomial s = spoly(G[static_cast<std::size_t>(p.i)], G[static_cast<std::size_t>(p.j)]);
    if (s.is_zero())
      continue;
    Polynomial r = reduce_full(s, G, nullptr);
    ++reductions;
    if (!r.is_zero())
      update(r.normalized());
    if (trace && reductions % 200 == 0)
      std::fprintf(stderr, "[gb] %lds: %ld reductions, |G|=%zu, pairs=%zu\n",
                   static_cast<long>(std::chrono::duration_cast<std::chrono::seconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count()),
                   reductions, G.size(), pairs.size());
  }

  if (trace)
    std::fprintf(stderr, "[gb] done in %lds: %ld reductions, |G|=%zu, nvars=%zu, in=%zu\n",
                 static_cast<long>(std::chrono::duration_cast<std::chrono::seconds>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count()),
                 reductions, G.size(), gens.front().ring()->nvars(), gens.size());

  // minimalize: ascending by leading monomial, drop redundant leads
  std::vector<std::size_t> idx(G.size());
  for (std::size_t i = 0; i < G.size(); ++i)
    idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto c = order.compare(G[a].leading_monomial(), G[b].leading_monomial());
    return c == std::strong_ordering::less || (c == std::strong_ordering::equal && a < b);
  });
  std::vector<Polynomial> minimal;
  for (std::size_t i : idx) {
    bool redundant = false;
    for (auto& m : minimal)
      if (m.leading_monomial().divides(G[i].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant)
      minimal.push_back(G[i]);
  }
  // tail-reduce each element against the rest
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back(minimal[j]);
    minimal[i] = reduce_full(minimal[i], others, nullptr).normalized();
  }
  out.gens = std::move(minimal);
  return out;
}

} // namespace cab
