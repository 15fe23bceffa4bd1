#include "cab/gcd.hpp"

#include <algorithm>
#include <map>

#include "cab/budget.hpp"

namespace cab {

namespace {

uint32_t deg_in(const Polynomial& p, std::size_t v) {
  uint32_t d = 0;
  for (auto& t : p.terms())
    d = std::max(d, t.mono[v]);
  return d;
}

// coefficients of p as a univariate polynomial in v (index = v-degree)
std::vector<Polynomial> coeffs_in(const Polynomial& p, std::size_t v) {
  std::vector<std::vector<Term>> buckets(deg_in(p, v) + 1);
  for (auto& t : p.terms()) {
    Monomial m = t.mono;
    uint32_t e = m[v];
    m.set(v, 0);
    buckets[e].push_back({t.coeff, std::move(m)});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets)
    out.push_back(Polynomial::from_terms(p.ring(), p.order(), std::move(b)));
  return out;
}

// leading coefficient of p viewed in v
Polynomial lc_in(const Polynomial& p, std::size_t v) {
  uint32_t d = deg_in(p, v);
  std::vector<Term> terms;
  for (auto& t : p.terms())
    if (t.mono[v] == d) {
      Monomial m = t.mono;
      m.set(v, 0);
      terms.push_back({t.coeff, std::move(m)});
    }
  return Polynomial::from_terms(p.ring(), p.order(), std::move(terms));
}

// substitute integer values for every variable except v
std::vector<mpq_class> specialize(const Polynomial& p, std::size_t v,
                                  const std::vector<mpz_class>& vals) {
  std::vector<mpq_class> out(deg_in(p, v) + 1, mpq_class(0));
  for (auto& t : p.terms()) {
    mpq_class c = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (i == v || t.mono[i] == 0)
        continue;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), vals[i].get_mpz_t(), t.mono[i]);
      c *= pw;
    }
    out[t.mono[v]] += c;
  }
  while (out.size() > 1 && out.back() == 0)
    out.pop_back();
  return out;
}

int uni_gcd_degree(std::vector<mpq_class> f, std::vector<mpq_class> g) {
  auto trim = [](std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0)
      p.pop_back();
  };
  trim(f);
  trim(g);
  while (!g.empty()) {
    Budget::check();
    // f mod g, monic division
    while (f.size() >= g.size() && !f.empty()) {
      mpq_class c = f.back() / g.back();
      std::size_t off = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i)
        f[off + i] -= c * g[i];
      trim(f);
    }
    std::swap(f, g);
  }
  return f.empty() ? -1 : static_cast<int>(f.size()) - 1;
}

// proves gcd(a, b) is constant via specializations; false = inconclusive
bool certified_coprime(const Polynomial& a, const Polynomial& b) {
  std::size_t n = a.ring()->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    uint32_t da = deg_in(a, v), db = deg_in(b, v);
    if (da == 0 || db == 0)
      continue; // a common factor cannot involve v
    const Polynomial& lead_src = da <= db ? a : b;
    const Polynomial& small = da <= db ? a : b;
    const Polynomial& other = da <= db ? b : a;
    Polynomial lead = lc_in(lead_src, v);
    bool proven = false;
    for (int attempt = 0; attempt < 6 && !proven; ++attempt) {
      std::vector<mpz_class> vals(n);
      for (std::size_t i = 0; i < n; ++i)
        vals[i] = mpz_class(2 + 3 * attempt + static_cast<long>(5 * i) % 17) *
                  ((i + static_cast<std::size_t>(attempt)) % 2 ? 1 : -1);
      // degree in v must be preserved for the divisibility bound to apply
      auto ls = specialize(lead, v, vals);
      if (ls.size() == 1 && ls[0] == 0)
        continue;
      if (uni_gcd_degree(specialize(small, v, vals), specialize(other, v, vals)) == 0)
        proven = true;
    }
    if (!proven)
      return false;
  }
  return true;
}

Polynomial pseudo_rem(Polynomial f, const Polynomial& g, std::size_t v) {
  uint32_t dg = deg_in(g, v);
  Polynomial lg = lc_in(g, v);
  while (!f.is_zero()) {
    Budget::check();
    uint32_t df = deg_in(f, v);
    if (df < dg)
      break;
    Polynomial lf = lc_in(f, v);
    Monomial shift(f.ring()->nvars());
    shift.set(v, df - dg);
    // f <- lg*f - lf*v^(df-dg)*g
    Polynomial shifted;
    {
      Polynomial prod = lf * g;
      std::vector<Term> ts;
      for (auto& t : prod.terms()) {
        Monomial m = t.mono * shift;
        ts.push_back({t.coeff, std::move(m)});
      }
      shifted = Polynomial::from_terms(f.ring(), f.order(), std::move(ts));
    }
    f = lg * f - shifted;
  }
  return f;
}

Polynomial one_of(const Polynomial& p) { return Polynomial::constant(p.ring(), 1, p.order()); }

Polynomial content_in(const Polynomial& p, std::size_t v);

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  Budget::check();
  if (a.is_zero())
    return b.normalized();
  if (b.is_zero())
    return a.normalized();
  if (a.is_constant() || b.is_constant())
    return one_of(a);
  if (certified_coprime(a, b))
    return one_of(a);

  std::size_t n = a.ring()->nvars();
  // main variable: shared, of lowest maximal degree
  int v = -1;
  uint32_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    uint32_t da = deg_in(a, i), db = deg_in(b, i);
    if (da == 0 && db == 0)
      continue;
    if (da == 0 || db == 0)
      continue;
    uint32_t d = std::max(da, db);
    if (v < 0 || d < best) {
      v = static_cast<int>(i);
      best = d;
    }
  }
  if (v < 0) {
    // no shared variable: the gcd divides the v-content of a for any v in a
    for (std::size_t i = 0; i < n; ++i)
      if (deg_in(a, i) > 0)
        return gcd_impl(content_in(a, i), b);
    return one_of(a);
  }
  auto vv = static_cast<std::size_t>(v);
  Polynomial ca = content_in(a, vv);
  Polynomial cb = content_in(b, vv);
  Polynomial pa = *a.exact_divide(ca);
  Polynomial pb = *b.exact_divide(cb);
  Polynomial c = gcd_impl(ca, cb);

  if (deg_in(pa, vv) < deg_in(pb, vv))
    std::swap(pa, pb);
  while (!pb.is_zero()) {
    Budget::check();
    Polynomial r = pseudo_rem(pa, pb, vv);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = r;
    } else {
      pb = *r.exact_divide(content_in(r, vv));
    }
  }
  if (deg_in(pa, vv) == 0)
    return c.normalized();
  return (c * *pa.exact_divide(content_in(pa, vv))).normalized();
}

Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial g = Polynomial::zero(p.ring(), p.order());
  for (auto& c : coeffs_in(p, v)) {
    if (c.is_zero())
      continue;
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero())
      return one_of(p);
  }
  return g.normalized();
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring())
    throw structural_error("gcd: ring mismatch");
  return gcd_impl(a, b.reordered(a.order())).normalized();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero())
    throw invalid_argument_error("squarefree_part of zero");
  if (f.is_constant())
    return Polynomial::constant(f.ring(), 1, f.order());
  Polynomial g = f;
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
    if (deg_in(f, v) == 0)
      continue;
    g = poly_gcd(g, f.derivative(static_cast<int>(v)));
    if (g.is_constant())
      break;
  }
  if (g.is_constant())
    return f.normalized();
  return (*f.exact_divide(g)).normalized();
}

} // namespace cab
