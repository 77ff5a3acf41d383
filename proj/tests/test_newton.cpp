#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "spectre/errors.hpp"
#include "spectre/newton.hpp"
#include "spectre/quasihomogeneous.hpp"

using namespace spectre;

namespace {

Rat q(long p, long r) { return Rat(BigInt(p), BigInt(r)); }

NewtonPolyhedron polyhedron(const std::string& text) { return newton_polyhedron(support(parse_polynomial(text))); }

}  // namespace

TEST_CASE("Newton polyhedron of x^2y^2+x^5+y^5") {
  const NewtonPolyhedron p = polyhedron("x^2*y^2+x^5+y^5");
  CHECK(p.convenient());
  CHECK(p.facets() == std::vector<Facet>{{{2, 3}, 10}, {{3, 2}, 10}});
  CHECK(p.vertices().size() == 3);
}

TEST_CASE("Newton weights") {
  const NewtonPolyhedron p = polyhedron("x^2*y^2+x^5+y^5");
  CHECK(newton_weight(p, {Rat(2), Rat(2)}) == Rat(1));
  CHECK(newton_weight(p, {Rat(5), Rat(0) + q(1, 1000)}) > Rat(0));
  CHECK(newton_weight(p, {Rat(1), Rat(1)}) == q(1, 2));
  CHECK(form_weight(p, ExpVec{0, 0}) == q(1, 2));
  CHECK(form_weight(p, ExpVec{1, 0}) == q(7, 10));
  CHECK_THROWS(newton_weight(p, {Rat(0), Rat(1)}));
}

TEST_CASE("log canonical threshold") {
  CHECK(lct(polyhedron("x^2*y^2+x^5+y^5")) == q(1, 2));
  CHECK(lct(polyhedron("x^2+y^3")) == q(5, 6));
  CHECK(lct(polyhedron("x^3+y^3+z^3")) == Rat(1));
  CHECK(lct(polyhedron("x^3+y^5")) == q(8, 15));
}

TEST_CASE("non-convenient germs") {
  const NewtonPolyhedron p = polyhedron("x^3+x*y^3");
  CHECK_FALSE(p.convenient());
  try {
    lct(p);
    FAIL("expected NotConvenient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConvenient);
  }
  CHECK_THROWS(newton_polyhedron({ExpVec{0, 0}, ExpVec{2, 0}}));
}

TEST_CASE("A'Campo germ spectrum") {
  const Poly f = parse_polynomial("x^2*y^2+x^5+y^5");
  const SpectralSet s = nondegenerate_spectrum(f);
  CHECK(s.mu() == 11);
  CHECK(s.values() == std::vector<Rat>{q(1, 2), q(7, 10), q(7, 10), q(9, 10), q(9, 10), Rat(1), q(11, 10),
                                       q(11, 10), q(13, 10), q(13, 10), q(3, 2)});
  CHECK(check_symmetry(s));
  CHECK(check_range(s));
  CHECK(s.restricted(Rat(0), Rat(1)) == spectrum_unit_part(newton_polyhedron(support(f))));
}

TEST_CASE("unit part of a Brieskorn-Pham germ") {
  const SpectralSet unit = spectrum_unit_part(polyhedron("x^3+y^3+z^3"));
  CHECK(unit.values() == std::vector<Rat>{Rat(1)});
  CHECK(spectrum_unit_part(polyhedron("x^4+y^4")) == bp_spectrum({4, 4}).restricted(Rat(0), Rat(1)));
}

TEST_CASE("Newton and weight routes agree on quasi-homogeneous germs") {
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 20) {
    const auto a = oracle::random_exponents(rng, 3, 5);
    const Poly f = parse_polynomial(oracle::random_qh_polynomial(rng, a));
    if (!milnor_number(f).isolated()) continue;
    CHECK(nondegenerate_spectrum(f) == qh_spectrum(detect_weights(f)));
    ++checked;
  }
}

TEST_CASE("E6 and E8 through the Newton route") {
  CHECK(nondegenerate_spectrum(parse_polynomial("x^3+y^4")) == bp_spectrum({3, 4}));
  CHECK(nondegenerate_spectrum(parse_polynomial("x^3+y^5")) == bp_spectrum({3, 5}));
}

TEST_CASE("mismatched Newton weights raise BasisIncompatible") {
  // Degenerate: the principal part is a square.
  try {
    nondegenerate_spectrum(parse_polynomial("x^2+2*x*y+y^2+y^3"));
    FAIL("expected BasisIncompatible");
  } catch (const BasisIncompatible& e) {
    CHECK(e.raw().mu() > 0);
  }
}
