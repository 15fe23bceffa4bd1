#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cab/groebner.hpp"
#include "cab/parse.hpp"

using namespace cab;

namespace {

RingPtr xyz() { return RingContext::make({"x", "y", "z"}); }

Polynomial P(const std::string& s, const RingPtr& r, const MonomialOrder& o) {
  return parse(s, r, o);
}

Polynomial spoly_of(const Polynomial& f, const Polynomial& g) {
  // fraction-free S-polynomial, for oracle checks only
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return Polynomial::axpy(g.leading_coeff(), f.term_mul(1, l / f.leading_monomial()),
                          -f.leading_coeff(), l / g.leading_monomial(), g);
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& r, const MonomialOrder& o) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expd(0, 2);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<Term> ts;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(r->nvars());
    for (std::size_t j = 0; j < r->nvars(); ++j)
      m.set(j, static_cast<uint32_t>(expd(rng)));
    int c = coeff(rng);
    ts.push_back({mpq_class(c == 0 ? 1 : c), m});
  }
  return Polynomial::from_terms(r, o, std::move(ts));
}

} // namespace

TEST_CASE("normal form basics") {
  auto r = xyz();
  auto o = MonomialOrder::grevlex();
  std::vector<Polynomial> G = {P("x^2-y", r, o)};
  CHECK(normal_form(P("x^2", r, o), G, o) == P("y", r, o));
  CHECK(normal_form(G[0], G, o).is_zero());
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    Polynomial f = random_poly(rng, r, o);
    Polynomial n1 = normal_form(f, G, o);
    CHECK(normal_form(n1, G, o) == n1);
  }
}

TEST_CASE("lex basis of a plane curve intersection") {
  // reference basis checked independently: every S-polynomial of the
  // claimed basis reduces to zero against it, each claimed element reduces
  // to zero against the computed basis, and vice versa
  auto r = xyz();
  auto o = MonomialOrder::lex();
  GroebnerBasis gb = buchberger({P("x^2-y", r, o), P("x^3-z", r, o)}, o);
  std::vector<Polynomial> expect = {P("x^2-y", r, o), P("x*y-z", r, o), P("x*z-y^2", r, o),
                                    P("y^3-z^2", r, o)};
  // oracle part 1: expect is itself a Groebner basis (Buchberger criterion)
  for (std::size_t i = 0; i < expect.size(); ++i)
    for (std::size_t j = i + 1; j < expect.size(); ++j)
      CHECK(normal_form(spoly_of(expect[i], expect[j]), expect, o).is_zero());
  // oracle part 2: both bases generate the same ideal
  for (auto& g : gb.gens)
    CHECK(normal_form(g, expect, o).is_zero());
  for (auto& g : expect)
    CHECK(normal_form(g, gb.gens, o).is_zero());
  REQUIRE(gb.gens.size() == 4);
  // basis is reported ascending in the leading monomial
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(gb.gens[i] == expect[3 - i].normalized());
}

TEST_CASE("degenerate inputs") {
  auto r = xyz();
  auto o = MonomialOrder::grevlex();
  GroebnerBasis single = buchberger({P("2*x^2-4*y", r, o)}, o);
  REQUIRE(single.gens.size() == 1);
  CHECK(single.gens[0] == P("x^2-2*y", r, o));
  GroebnerBasis pair = buchberger({P("x", r, o), P("y", r, o)}, o);
  REQUIRE(pair.gens.size() == 2);
  CHECK(pair.gens[0] == P("y", r, o));
  CHECK(pair.gens[1] == P("x", r, o));
  CHECK(buchberger({}, o).gens.empty());
}

TEST_CASE("membership") {
  auto r = xyz();
  auto o = MonomialOrder::grevlex();
  GroebnerBasis g1 = buchberger({P("x-y", r, o)}, o);
  CHECK(normal_form(P("x^2-y^2", r, o), g1).is_zero());
  GroebnerBasis g2 = buchberger({P("x^2", r, o)}, o);
  CHECK(!normal_form(P("x", r, o), g2).is_zero());
  std::mt19937 rng(5);
  std::vector<Polynomial> gens = {P("x^2-y", r, o), P("y*z-1", r, o)};
  GroebnerBasis g3 = buchberger(gens, o);
  for (int i = 0; i < 10; ++i) {
    Polynomial f = random_poly(rng, r, o) * gens[0] + random_poly(rng, r, o) * gens[1];
    CHECK(normal_form(f, g3).is_zero());
  }
}

TEST_CASE("basis invariants on random systems") {
  auto r = xyz();
  auto o = MonomialOrder::grevlex();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(random_poly(rng, r, o));
    GroebnerBasis gb = buchberger(gens, o);
    for (auto& g : gens)
      CHECK(normal_form(g, gb).is_zero());
    if (gb.contains_one())
      continue;
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
      for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
        CHECK(normal_form(spoly_of(gb.gens[i], gb.gens[j]), gb).is_zero());
    // criteria must not change the reduced basis
    GroebnerBasis plain = buchberger(gens, o, {.use_criteria = false});
    REQUIRE(plain.gens.size() == gb.gens.size());
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
      CHECK(plain.gens[i] == gb.gens[i]);
  }
}

TEST_CASE("determinism") {
  auto r = RingContext::make({"x", "y", "z", "w"});
  auto o = MonomialOrder::grevlex();
  std::vector<Polynomial> gens = {P("x^2+y^2+z^2+w^2", r, o), P("x*y*z-w^3", r, o)};
  GroebnerBasis a = buchberger(gens, o), b = buchberger(gens, o);
  REQUIRE(a.gens.size() == b.gens.size());
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    CHECK(a.gens[i].str() == b.gens[i].str());
}
