#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cab/duality.hpp"
#include "cab/parse.hpp"

using namespace cab;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse(s, r); }

Ideal I(const RingPtr& r, std::vector<std::string> gens) {
  std::vector<Polynomial> ps;
  for (auto& g : gens)
    ps.push_back(P(g, r));
  return Ideal(r, std::move(ps), true);
}

ProjectiveVariety V(const RingPtr& r, std::vector<std::string> gens) {
  return ProjectiveVariety(I(r, std::move(gens)));
}

} // namespace

TEST_CASE("conic is self-dual") {
  auto r = RingContext::make({"x", "y", "z"});
  auto v = V(r, {"x^2+y^2-z^2"});
  auto du = default_dual_ring(r);
  Ideal d = dual_variety(v, du);
  CHECK(d.equals(I(du, {"u0^2+u1^2-u2^2"})));
  CHECK(check_biduality(v));
}

TEST_CASE("dual of a point is a hyperplane") {
  auto r = RingContext::make({"x", "y", "z"});
  auto v = V(r, {"y", "z"}); // the point [1:0:0]
  auto du = default_dual_ring(r);
  Ideal d = dual_variety(v, du);
  CHECK(d.equals(I(du, {"u0"}))); // hyperplanes through the point
  // and back again
  Ideal back = dual_of_ideal(d, r);
  CHECK(back.equals(v.ideal));
}

TEST_CASE("twisted cubic dualizes to the binary cubic discriminant") {
  auto r = RingContext::make({"x", "y", "z", "w"});
  auto v = V(r, {"x*z-y^2", "y*w-z^2", "x*w-y*z"});
  auto du = default_dual_ring(r);
  Ideal d = dual_variety(v, du);
  // independent oracle: the discriminant of u0 + u1 t + u2 t^2 + u3 t^3,
  // expanded from the classical formula 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
  Polynomial disc = P("18*u3*u2*u1*u0 - 4*u2^3*u0 + u2^2*u1^2 - 4*u3*u1^3 - 27*u3^2*u0^2", du);
  CHECK(d.equals(Ideal(du, {disc}, true)));
  CHECK(check_biduality(v));
}

TEST_CASE("biduality for a smooth plane cubic") {
  auto r = RingContext::make({"x", "y", "z"});
  auto v = V(r, {"x^3+y^3+z^3"});
  auto du = default_dual_ring(r);
  Ideal d = dual_variety(v, du);
  // Pluecker class of a smooth plane curve of degree d is d(d-1)
  REQUIRE(d.gens().size() == 1);
  CHECK(d.gens()[0].total_degree() == 6);
  CHECK(check_biduality(v));
}

TEST_CASE("dual degree of the conic matches the class formula") {
  auto r = RingContext::make({"x", "y", "z"});
  Ideal d = dual_variety(V(r, {"x^2+2*y^2-3*z^2"}), default_dual_ring(r));
  REQUIRE(d.gens().size() == 1);
  CHECK(d.gens()[0].total_degree() == 2);
}

TEST_CASE("dual is presentation-independent") {
  auto r = RingContext::make({"x", "y", "z", "w"});
  auto du = default_dual_ring(r);
  Ideal d1 = dual_variety(V(r, {"x*z-y^2", "y*w-z^2", "x*w-y*z"}), du);
  // duplicate a generator and add a combination of the others
  Ideal d2 = dual_variety(
      V(r, {"x*z-y^2", "y*w-z^2", "x*w-y*z", "x*z-y^2", "(x*z-y^2)+(y*w-z^2)"}), du);
  auto& g1 = d1.groebner().gens;
  auto& g2 = d2.groebner().gens;
  REQUIRE(g1.size() == g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i)
    CHECK(g1[i] == g2[i]);
}

TEST_CASE("conormal dimension") {
  auto r = RingContext::make({"x", "y", "z"});
  Conormal cn = conormal(V(r, {"x^2+y^2-z^2"}), default_dual_ring(r)->var_names());
  // biprojective dimension n-1 = 1: affine cone dimension 1 + 2
  Ideal cone(cn.ring, cn.ideal.gens(), false);
  CHECK(dimension(cone) == 3);
}
