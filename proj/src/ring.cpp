#include "cab/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cab {

RingContext::RingContext(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty())
      throw structural_error("empty variable name");
    if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
      throw structural_error("duplicate variable name: " + vars_[i]);
  }
}

RingContext::RingContext(std::vector<std::string> vars,
                         std::vector<std::pair<std::string, std::vector<std::string>>> blocks)
    : RingContext(std::move(vars)) {
  std::set<std::string> seen;
  for (auto& [name, members] : blocks) {
    for (auto& v : members) {
      if (index_.find(v) == index_.end())
        throw structural_error("block variable not in ring: " + v);
      if (!seen.insert(v).second)
        throw structural_error("variable in two blocks: " + v);
    }
  }
  if (seen.size() != vars_.size())
    throw structural_error("blocks must partition the variables");
  blocks_ = std::move(blocks);
}

RingPtr RingContext::make(std::vector<std::string> vars) {
  return std::make_shared<const RingContext>(std::move(vars));
}

RingPtr RingContext::make(std::vector<std::string> vars,
                          std::vector<std::pair<std::string, std::vector<std::string>>> blocks) {
  return std::make_shared<const RingContext>(std::move(vars), std::move(blocks));
}

int RingContext::var_index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> RingContext::block_indices(const std::string& name) const {
  for (auto& [bname, members] : blocks_) {
    if (bname == name) {
      std::vector<int> out;
      out.reserve(members.size());
      for (auto& v : members)
        out.push_back(var_index(v));
      return out;
    }
  }
  throw structural_error("no such block: " + name);
}

Monomial::Monomial(std::vector<uint32_t> e) : e_(std::move(e)), deg_(0) {
  for (uint32_t x : e_)
    deg_ += x;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e_.size() != o.e_.size())
    throw structural_error("monomial length mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] += o.e_[i];
    if (r.e_[i] > (1u << 20))
      throw structural_error("exponent overflow");
  }
  r.deg_ += o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i])
      throw structural_error("monomial not divisible");
    r.e_[i] -= o.e_[i];
  }
  r.deg_ -= o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_)
    return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i])
      return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (b.e_[i] > r.e_[i]) {
      r.deg_ += b.e_[i] - r.e_[i];
      r.e_[i] = b.e_[i];
    }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (b.e_[i] < r.e_[i]) {
      r.deg_ -= r.e_[i] - b.e_[i];
      r.e_[i] = b.e_[i];
    }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i])
      return false;
  return true;
}

MonomialOrder MonomialOrder::block_elim(std::vector<int> front, std::size_t nvars) {
  std::sort(front.begin(), front.end());
  MonomialOrder o(Kind::Block, front);
  std::vector<bool> in_front(nvars, false);
  for (int i : front) {
    if (i < 0 || static_cast<std::size_t>(i) >= nvars)
      throw structural_error("block order: variable index out of range");
    in_front[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < nvars; ++i)
    if (!in_front[i])
      o.back_.push_back(static_cast<int>(i));
  return o;
}

namespace {

// grevlex on the full vector
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i])
      return b[i] <=> a[i]; // smaller last exponent is larger
  }
  return std::strong_ordering::equal;
}

// grevlex restricted to an index subset
std::strong_ordering grevlex_cmp_sub(const Monomial& a, const Monomial& b,
                                     const std::vector<int>& idx) {
  uint32_t da = 0, db = 0;
  for (int i : idx) {
    da += a[static_cast<std::size_t>(i)];
    db += b[static_cast<std::size_t>(i)];
  }
  if (da != db)
    return da <=> db;
  for (std::size_t j = idx.size(); j-- > 0;) {
    auto i = static_cast<std::size_t>(idx[j]);
    if (a[i] != b[i])
      return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size())
    throw structural_error("compare: exponent length mismatch");
  switch (kind_) {
  case Kind::Lex:
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i])
        return a[i] <=> b[i];
    return std::strong_ordering::equal;
  case Kind::GrevLex:
    return grevlex_cmp(a, b);
  case Kind::Block: {
    auto c = grevlex_cmp_sub(a, b, front_);
    if (c != std::strong_ordering::equal)
      return c;
    return grevlex_cmp_sub(a, b, back_);
  }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  switch (kind_) {
  case Kind::Lex:
    os << "lex";
    break;
  case Kind::GrevLex:
    os << "grevlex";
    break;
  case Kind::Block:
    os << "block";
    for (int i : front_)
      os << ":" << i;
    break;
  }
  return os.str();
}

} // namespace cab
