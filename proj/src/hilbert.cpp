#include "cab/hilbert.hpp"

#include <algorithm>

#include "cab/budget.hpp"

namespace cab {

namespace {

using ZPoly = std::vector<mpz_class>; // dense, index = degree

ZPoly zp_one() { return {mpz_class(1)}; }

void zp_add(ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size())
    a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] += b[i];
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty())
    return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

// a *= t^d
void zp_shift(ZPoly& a, uint32_t d) { a.insert(a.begin(), d, mpz_class(0)); }

// 1 - t^d
ZPoly zp_one_minus_td(uint32_t d) {
  ZPoly r(d + 1);
  r[0] = 1;
  r[d] = -1;
  return r;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool red = false;
    for (auto& k : out)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red)
      out.push_back(m);
  }
  gens = std::move(out);
}

ZPoly numerator(std::vector<Monomial> gens, std::size_t nvars) {
  Budget::check();
  minimalize(gens);
  if (gens.empty())
    return zp_one();
  if (gens.size() == 1 && gens[0].is_one())
    return {};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    ZPoly r = zp_one();
    for (auto& m : gens)
      r = zp_mul(r, zp_one_minus_td(m.degree()));
    return r;
  }
  // pivot: most frequent variable, smallest positive exponent among its users
  std::vector<int> count(nvars, 0);
  for (auto& m : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (m[v])
        ++count[v];
  std::size_t pv = 0;
  for (std::size_t v = 1; v < nvars; ++v)
    if (count[v] > count[pv])
      pv = v;
  uint32_t e = 0;
  for (auto& m : gens)
    if (m[pv] && (e == 0 || m[pv] < e))
      e = m[pv];
  Monomial pivot(nvars);
  pivot.set(pv, e);

  // N(I) = N(I + <p>) + t^deg(p) * N(I : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (auto& m : gens) {
    Monomial q = m;
    q.set(pv, m[pv] >= e ? m[pv] - e : 0);
    colon.push_back(std::move(q));
  }
  ZPoly a = numerator(std::move(plus), nvars);
  ZPoly b = numerator(std::move(colon), nvars);
  zp_shift(b, e);
  zp_add(a, b);
  return a;
}

} // namespace

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  return numerator(std::move(gens), nvars);
}

DimDeg dim_degree_from_leading_terms(const std::vector<Monomial>& gens, std::size_t nvars) {
  ZPoly n = hilbert_numerator(gens, nvars);
  while (!n.empty() && n.back() == 0)
    n.pop_back();
  if (n.empty())
    return {-1, mpz_class(0)}; // unit ideal, empty variety
  // cancel factors of (1 - t)
  int s = 0;
  for (;;) {
    mpz_class at1(0);
    for (auto& c : n)
      at1 += c;
    if (at1 != 0)
      break;
    // synthetic division by (1 - t): q_i = sum_{j<=i} n_j
    ZPoly q(n.size() - 1);
    mpz_class acc(0);
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      acc += n[i];
      q[i] = acc;
    }
    n = std::move(q);
    ++s;
    if (n.empty())
      return {-1, mpz_class(0)};
  }
  mpz_class deg(0);
  for (auto& c : n)
    deg += c;
  return {static_cast<int>(nvars) - s, deg};
}

} // namespace cab
