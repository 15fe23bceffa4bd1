#include "cab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cab {

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder order) {
  return Polynomial(std::move(ring), std::move(order));
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c, MonomialOrder order) {
  Polynomial p(ring, std::move(order));
  if (c != 0)
    p.terms_.push_back({c, Monomial(ring->nvars())});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var, uint32_t exp, MonomialOrder order) {
  if (var < 0 || static_cast<std::size_t>(var) >= ring->nvars())
    throw structural_error("variable index out of range");
  Polynomial p(ring, std::move(order));
  Monomial m(ring->nvars());
  m.set(static_cast<std::size_t>(var), exp);
  p.terms_.push_back({mpq_class(1), std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(std::move(ring), order);
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) == std::strong_ordering::greater;
  });
  for (auto& t : terms) {
    if (t.coeff == 0)
      continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0)
        p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw structural_error("leading term of zero polynomial");
  return terms_.front();
}

uint32_t Polynomial::total_degree() const {
  uint32_t d = 0;
  for (auto& t : terms_)
    d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_same(const Polynomial& o) const {
  if (ring_ != o.ring_)
    throw structural_error("ring mismatch");
  if (!(order_ == o.order_))
    throw structural_error("monomial order mismatch");
}

Polynomial Polynomial::axpy(const mpq_class& c1, const Polynomial& a, const mpq_class& c2,
                            const Monomial& m, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.ring_, a.order_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  mpq_class tmp;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    Monomial bm = b.terms_[j].mono * m;
    auto c = a.order_.compare(a.terms_[i].mono, bm);
    if (c == std::strong_ordering::greater) {
      if (c1 != 0)
        r.terms_.push_back({c1 * a.terms_[i].coeff, a.terms_[i].mono});
      ++i;
    } else if (c == std::strong_ordering::less) {
      if (c2 != 0)
        r.terms_.push_back({c2 * b.terms_[j].coeff, std::move(bm)});
      ++j;
    } else {
      tmp = c1 * a.terms_[i].coeff + c2 * b.terms_[j].coeff;
      if (tmp != 0)
        r.terms_.push_back({tmp, std::move(bm)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i)
    if (c1 != 0)
      r.terms_.push_back({c1 * a.terms_[i].coeff, a.terms_[i].mono});
  for (; j < b.terms_.size(); ++j)
    if (c2 != 0)
      r.terms_.push_back({c2 * b.terms_[j].coeff, b.terms_[j].mono * m});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return axpy(1, *this, 1, Monomial(ring_->nvars()), o);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return axpy(1, *this, -1, Monomial(ring_->nvars()), o);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial r(ring_, order_);
  if (c == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_)
    r.terms_.push_back({c * t.coeff, t.mono});
  return r;
}

Polynomial Polynomial::term_mul(const mpq_class& c, const Monomial& m) const {
  Polynomial r(ring_, order_);
  if (c == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_)
    r.terms_.push_back({c * t.coeff, t.mono * m});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  Polynomial r = zero(ring_, order_);
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
  for (auto& t : small.terms_)
    r = axpy(1, r, t.coeff, t.mono, big);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1, order_);
  Polynomial base = *this;
  while (e) {
    if (e & 1u)
      r = r * base;
    base = (e >>= 1u) ? base * base : base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono))
      return false;
  return true;
}

Polynomial Polynomial::reordered(const MonomialOrder& order) const {
  if (order == order_)
    return *this;
  return from_terms(ring_, order, terms_);
}

mpz_class Polynomial::integer_content() const {
  mpz_class den(1), g(0);
  for (auto& t : terms_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  for (auto& t : terms_) {
    mpz_class n = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1 && den == 1)
      break;
  }
  return g; // content of den-cleared form; caller pairs with den
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty())
    return *this;
  mpz_class den(1);
  for (auto& t : terms_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  mpz_class g(0);
  std::vector<mpz_class> nums;
  nums.reserve(terms_.size());
  for (auto& t : terms_) {
    nums.push_back(t.coeff.get_num() * (den / t.coeff.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums.back().get_mpz_t());
  }
  if (nums.front() < 0)
    g = -g;
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i)
    r.terms_.push_back({mpq_class(nums[i] / g), terms_[i].mono});
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(ring_, order_);
  auto v = static_cast<std::size_t>(var);
  std::vector<Term> out;
  for (auto& t : terms_) {
    uint32_t e = t.mono[v];
    if (e == 0)
      continue;
    Monomial m = t.mono;
    m.set(v, e - 1);
    out.push_back({t.coeff * e, std::move(m)});
  }
  return from_terms(ring_, order_, std::move(out));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty())
    return true;
  uint32_t d = terms_.front().mono.degree();
  for (auto& t : terms_)
    if (t.mono.degree() != d)
      return false;
  return true;
}

bool Polynomial::is_homogeneous_in(const std::vector<int>& vars) const {
  if (terms_.empty())
    return true;
  auto bdeg = [&](const Monomial& m) {
    uint32_t d = 0;
    for (int v : vars)
      d += m[static_cast<std::size_t>(v)];
    return d;
  };
  uint32_t d = bdeg(terms_.front().mono);
  for (auto& t : terms_)
    if (bdeg(t.mono) != d)
      return false;
  return true;
}

Polynomial Polynomial::homogenized(int hv) const {
  uint32_t d = total_degree();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    Monomial m = t.mono;
    m.set(static_cast<std::size_t>(hv), m[static_cast<std::size_t>(hv)] + d - t.mono.degree());
    out.push_back({t.coeff, std::move(m)});
  }
  return from_terms(ring_, order_, std::move(out));
}

Polynomial Polynomial::substitute_one(int var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    Monomial m = t.mono;
    m.set(static_cast<std::size_t>(var), 0);
    out.push_back({t.coeff, std::move(m)});
  }
  return from_terms(ring_, order_, std::move(out));
}

Polynomial Polynomial::map_vars(const RingPtr& target, const std::vector<int>& var_map,
                                const MonomialOrder& order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0)
        continue;
      int j = var_map[i];
      if (j < 0)
        throw structural_error("map_vars: variable has no image: " + ring_->var_name(i));
      m.set(static_cast<std::size_t>(j), m[static_cast<std::size_t>(j)] + t.mono[i]);
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return from_terms(target, order, std::move(out));
}

Polynomial Polynomial::into_ring(const RingPtr& target, const MonomialOrder& order) const {
  // unused variables may be missing from the target; map_vars rejects used ones
  std::vector<int> var_map(ring_->nvars(), -1);
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    var_map[i] = target->var_index(ring_->var_name(i));
  return map_vars(target, var_map, order);
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& q) const {
  check_same(q);
  if (q.is_zero())
    throw invalid_argument_error("division by zero polynomial");
  Polynomial r = *this;
  Polynomial quot = zero(ring_, order_);
  const Monomial& qm = q.leading_monomial();
  const mpq_class& qc = q.leading_coeff();
  while (!r.is_zero()) {
    if (!qm.divides(r.leading_monomial()))
      return std::nullopt;
    mpq_class c = r.leading_coeff() / qc;
    Monomial m = r.leading_monomial() / qm;
    quot = axpy(1, quot, c, Monomial(ring_->nvars()),
                Polynomial::from_terms(ring_, order_, {{mpq_class(1), m}}));
    r = axpy(1, r, -c, m, q);
  }
  return quot;
}

std::string Polynomial::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    mpq_class c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? "-" : "+");
      if (c < 0)
        c = -c;
    }
    first = false;
    bool printed_coeff = false;
    if (c != 1 || t.mono.is_one()) {
      os << c;
      printed_coeff = true;
    }
    bool any_var = false;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0)
        continue;
      if (printed_coeff || any_var)
        os << "*";
      os << ring_->var_name(i);
      if (t.mono[i] > 1)
        os << "^" << t.mono[i];
      any_var = true;
    }
  }
  return os.str();
}

std::string format(const Polynomial& p) { return p.str(); }

} // namespace cab
