#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "spectre/errors.hpp"
#include "spectre/local_algebra.hpp"
#include "spectre/quasihomogeneous.hpp"

using namespace spectre;

namespace {

Rat q(long p, long r) { return Rat(BigInt(p), BigInt(r)); }

ErrorKind weight_error(const std::string& text) {
  try {
    detect_weights(parse_polynomial(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("weights of quasi-homogeneous germs") {
  CHECK(detect_weights(parse_polynomial("x^3+y^4")).weights() == std::vector<Rat>{q(1, 3), q(1, 4)});
  CHECK(detect_weights(parse_polynomial("x^3+x*y^3")).weights() == std::vector<Rat>{q(1, 3), q(2, 9)});
  CHECK(detect_weights(parse_polynomial("x^4+x*y^2")).weights() == std::vector<Rat>{q(1, 4), q(3, 8)});
}

TEST_CASE("weight detection errors") {
  CHECK(weight_error("x^2*y^2+x^5+y^5") == ErrorKind::NotQuasiHomogeneous);
  CHECK(weight_error("x^2*y^2") == ErrorKind::UnderdeterminedWeights);
  CHECK(weight_error("x+y^2") == ErrorKind::WeightOutOfRange);
}

TEST_CASE("weight vector invariants") {
  const WeightVector w({q(1, 3), q(1, 4)});
  CHECK(w.milnor_number() == Rat(6));
  CHECK(w.form_weight(ExpVec{0, 0}) == q(7, 12));
  CHECK_THROWS(WeightVector({Rat(1)}));
  CHECK_THROWS(WeightVector({Rat(0)}));
}

TEST_CASE("quasi-homogeneous spectra") {
  CHECK(qh_spectrum(WeightVector({q(1, 2), q(1, 3)})).values() == std::vector<Rat>{q(5, 6), q(7, 6)});
  const SpectralSet quartic = qh_spectrum(WeightVector({q(1, 4), q(1, 4)}));
  CHECK(quartic.values() ==
        std::vector<Rat>{q(1, 2), q(3, 4), q(3, 4), Rat(1), Rat(1), Rat(1), q(5, 4), q(5, 4), q(3, 2)});
  CHECK(qh_spectrum(WeightVector({q(1, 2), q(1, 2), q(1, 2)})).values() == std::vector<Rat>{q(3, 2)});
}

TEST_CASE("non-integral Milnor number is rejected") {
  try {
    qh_spectrum(WeightVector({q(2, 5), q(2, 5)}));
    FAIL("expected NonIntegralMu");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralMu);
  }
}

TEST_CASE("Brieskorn-Pham spectrum") {
  CHECK(bp_spectrum({2, 3}).values() == std::vector<Rat>{q(5, 6), q(7, 6)});
  CHECK(bp_spectrum({}).empty());
  CHECK(bp_spectrum({}).num_vars() == 0);
  CHECK_THROWS(bp_spectrum({1, 3}));
}

TEST_CASE("qh spectrum equals the weights of a Milnor basis") {
  // Weighted Hilbert series route: the form weights of the monomial basis.
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto a = oracle::random_exponents(rng, 3, 5);
    const Poly f = parse_polynomial(oracle::random_qh_polynomial(rng, a));
    const MilnorData md = milnor_number(f);
    if (!md.isolated()) continue;
    const WeightVector w = detect_weights(f);
    std::vector<Rat> expected;
    for (const auto& m : md.basis) expected.push_back(w.form_weight(m));
    CHECK(qh_spectrum(w) == SpectralSet::from_values(expected, static_cast<int>(a.size())));
  }
}

TEST_CASE("bp and qh routes agree") {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = oracle::random_exponents(rng, 4, 7);
    std::vector<Rat> w;
    for (int v : a) w.push_back(q(1, v));
    CHECK(qh_spectrum(WeightVector(w)) == bp_spectrum(a));
  }
}
