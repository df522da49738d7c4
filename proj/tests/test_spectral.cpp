// test_spectral.cpp
// Closed-form square integrals, extremal indices and Lambda values, the
// sup-Lambda lower bounds, the bound audits, and the maximality verdict.

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "lawson/diffgeo.hpp"
#include "lawson/elliptic.hpp"
#include "lawson/spectral.hpp"
#include "oracles.hpp"

using namespace lawson;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("square integral reference values") {
  // Equilateral torus: S(1,1,2) = 4 pi^2 / sqrt(3) after degree division,
  // so the raw integral is 8 pi^2 / sqrt(3).
  CHECK(std::fabs(S_abc(GeneralizedTriple(1, 1, 2)) - 8.0 * kPi * kPi / std::sqrt(3.0)) <
        1e-12);

  // Clifford torus with the metric halved.
  CHECK(S_abc(GeneralizedTriple(0, 0, 1)) == 2.0 * kPi * kPi);

  // Triples with one zero frequency: 2 S(0,a,c) = 8 pi (a+c) E(4ac/(a+c)^2).
  CHECK(std::fabs(2.0 * S_abc(GeneralizedTriple(0, 1, 2)) -
                  24.0 * kPi * elliptic_E(8.0 / 9.0)) < 1e-12);
}

TEST_CASE("square integral is symmetric in the first two slots") {
  CHECK(std::fabs(closed_square_integral(1, 2, 4) - closed_square_integral(2, 1, 4)) <
        1e-10);
  for (const auto& t : canonical_triples_with_sum_at_most(30)) {
    if (t.regime() != Regime::interior) continue;
    CAPTURE(t.a());
    CAPTURE(t.b());
    CAPTURE(t.c());
    CHECK(std::fabs(closed_square_integral(t.a(), t.b(), t.c()) -
                    closed_square_integral(t.b(), t.a(), t.c())) < 1e-10);
  }
}

TEST_CASE("square integral against an independent elliptic oracle") {
  // S(1,2,4): kappa^2 = 3/15 = 1/5, c^2 - a^2 = 15.
  const double kap2 = 0.2;
  const double expected =
      4.0 * kPi / std::sqrt(15.0) *
      (2.0 * 15.0 * test::oracle_E(kap2) - 11.0 * test::oracle_K(kap2));
  CHECK(std::fabs(closed_square_integral(1, 2, 4) - expected) < 1e-10);
}

TEST_CASE("square integral matches quadrature") {
  for (const auto& t : canonical_triples_with_sum_at_most(9)) {
    if (t.regime() != Regime::interior) continue;
    const double s = S_abc(t);
    const double q = square_integral_quadrature(t, 256, 256);
    CAPTURE(t.a());
    CAPTURE(t.b());
    CAPTURE(t.c());
    CHECK(std::fabs(s - q) < 1e-8);
  }
}

TEST_CASE("raw closed form guards its domain") {
  CHECK_THROWS_AS(closed_square_integral(2, 1, 2), DomainError);
  CHECK_THROWS_AS(closed_square_integral(3, 0, 2), DomainError);
}

TEST_CASE("sup-Lambda lower bounds") {
  CHECK(std::fabs(prop1_bound(Topology::torus, 1) - 8.0 * kPi * kPi / std::sqrt(3.0)) <
        1e-13);
  CHECK(std::fabs(prop1_bound(Topology::torus, 2) -
                  8.0 * kPi * (1.0 + kPi / std::sqrt(3.0))) < 1e-12);
  CHECK(std::fabs(prop1_bound(Topology::klein_bottle, 1) -
                  12.0 * kPi * elliptic_E(8.0 / 9.0)) < 1e-13);
  CHECK(std::fabs(prop1_bound(Topology::klein_bottle, 3) -
                  (16.0 * kPi + 12.0 * kPi * elliptic_E(8.0 / 9.0))) < 1e-12);
  CHECK_THROWS_AS(prop1_bound(Topology::torus, 0), DomainError);
}

TEST_CASE("mixed parity threshold lands between 10 and 11") {
  const double thr = prop2_threshold();
  CHECK(thr > 10.0);
  CHECK(thr < 11.0);
  CHECK(thr == doctest::Approx(10.854466039564617).epsilon(1e-14));
}

TEST_CASE("tau spectral records") {
  const TauSpectralRecord t11 = tau_spectral_record(1, 1);
  CHECK(t11.index_j == 1);
  CHECK(t11.lambda_value == 4.0 * kPi * kPi);
  CHECK(t11.topology == Topology::torus);

  const TauSpectralRecord t34 = tau_spectral_record(3, 4);
  CHECK(t34.index_j == 10);
  CHECK(t34.lambda_value ==
        doctest::Approx(8.0 * kPi * 4.0 *
                        elliptic_E((16.0 - 9.0) / 16.0))
            .epsilon(1e-14));
}

TEST_CASE("spectral record for the bipolar klein bottle (0,1,2)") {
  const SpectralRecord rec = spectral_record(GeneralizedTriple(0, 1, 2));
  CHECK(rec.topology == Topology::klein_bottle);
  CHECK(rec.index_j == 1);
  REQUIRE(rec.bipolar_pair.has_value());
  CHECK(rec.bipolar_pair->r() == 3);
  CHECK(rec.bipolar_pair->m() == 1);
  CHECK(std::fabs(rec.lambda_value - 12.0 * kPi * elliptic_E(8.0 / 9.0)) < 1e-13);
  CHECK(rec.verdict == Verdict::maximal);
  CHECK(rec.lambda_value == prop1_bound(Topology::klein_bottle, 1));
}

TEST_CASE("spectral record for the equilateral torus (1,1,2)") {
  const SpectralRecord rec = spectral_record(GeneralizedTriple(1, 1, 2));
  CHECK(rec.topology == Topology::torus);
  CHECK(rec.regime == Regime::interior);
  CHECK(rec.index_j == 1);
  CHECK_FALSE(rec.bipolar_pair.has_value());
  CHECK(std::fabs(rec.lambda_value - 8.0 * kPi * kPi / std::sqrt(3.0)) < 1e-12);
  CHECK(rec.verdict == Verdict::maximal);
  CHECK(rec.lambda_value == prop1_bound(Topology::torus, 1));
}

TEST_CASE("spectral record for a generic interior triple (1,2,4)") {
  const SpectralRecord rec = spectral_record(GeneralizedTriple(1, 2, 4));
  CHECK(rec.topology == Topology::klein_bottle);
  CHECK(rec.index_j == 4);  // a+b+c-3 when c is even
  CHECK(std::fabs(rec.lambda_value - S_abc(GeneralizedTriple(1, 2, 4))) < 1e-12);
  CHECK(rec.verdict == Verdict::not_maximal);
  for (const auto& e : rec.evidence) CHECK(e.pass);
}

TEST_CASE("spectral record for an odd-c triple (1,1,3)") {
  const SpectralRecord rec = spectral_record(GeneralizedTriple(1, 1, 3));
  CHECK(rec.topology == Topology::torus);
  CHECK(rec.index_j == 7);  // 2(a+b+c)-3 when c is odd
  CHECK(std::fabs(rec.lambda_value - 2.0 * S_abc(GeneralizedTriple(1, 1, 3))) < 1e-12);
  CHECK(rec.verdict == Verdict::not_maximal);
}

TEST_CASE("spectral record for the halved clifford torus (0,0,1)") {
  const SpectralRecord rec = spectral_record(GeneralizedTriple(0, 0, 1));
  CHECK(rec.index_j == 1);
  CHECK(rec.lambda_value == 4.0 * kPi * kPi);
  CHECK(rec.verdict == Verdict::not_maximal);
  CHECK_FALSE(rec.bipolar_pair.has_value());
  CHECK(rec.annotation.find("Clifford") != std::string::npos);
  REQUIRE_FALSE(rec.evidence.empty());
  CHECK(rec.evidence.front().equality_witness);
  CHECK(rec.evidence.front().margin == 0.0);
  CHECK(rec.evidence.front().pass);
}

TEST_CASE("spectral record for the bipolar torus (0,1,3)") {
  const SpectralRecord rec = spectral_record(GeneralizedTriple(0, 1, 3));
  CHECK(rec.topology == Topology::torus);
  REQUIRE(rec.bipolar_pair.has_value());
  CHECK(*rec.bipolar_pair == LawsonPair(2, 1));
  CHECK(rec.index_j == 6);  // 4r - 2 at r = 2
  CHECK(std::fabs(rec.lambda_value - 2.0 * S_abc(GeneralizedTriple(0, 1, 3))) < 1e-10);
  CHECK(rec.verdict == Verdict::not_maximal);
}

TEST_CASE("boundary triples carry tau data") {
  const SpectralRecord rec = spectral_record(GeneralizedTriple(3, 4, 5));
  CHECK(rec.regime == Regime::lawson_boundary);
  CHECK(rec.topology == Topology::klein_bottle);
  const TauSpectralRecord tau = tau_spectral_record(3, 4);
  CHECK(rec.index_j == tau.index_j);
  CHECK(rec.lambda_value == tau.lambda_value);
  CHECK(rec.verdict == Verdict::not_maximal);
}

TEST_CASE("zero-frequency lambda values agree with the doubled square integral") {
  // Interior (0,a0,c): Lambda from the bipolar catalog must match the area
  // route lambda = 2S for torus cases and S for klein cases.
  for (int c = 2; c <= 25; ++c) {
    for (int b = 1; b < c; ++b) {
      if (std::gcd(b, c) != 1) continue;
      const GeneralizedTriple t(0, b, c);
      const SpectralRecord rec = spectral_record(t);
      const double s = S_abc(t);
      const double expect = (c % 2 == 0) ? s : 2.0 * s;
      CAPTURE(b);
      CAPTURE(c);
      CHECK(std::fabs(rec.lambda_value - expect) < 1e-10);
    }
  }
}

TEST_CASE("exceptional small-sum triples are settled by direct evaluation") {
  const auto checks = exceptional_triple_checks();
  CHECK(checks.size() == 10);
  for (const auto& e : checks) {
    CAPTURE(e.name);
    CHECK(e.exceptional);
    CHECK(e.pass);
    CHECK(e.margin > 0.0);
  }
}

TEST_CASE("triple enumeration is canonical and sorted") {
  const auto triples = canonical_triples_with_sum_at_most(12);
  REQUIRE_FALSE(triples.empty());
  CHECK(triples.front() == GeneralizedTriple(0, 0, 1));
  for (std::size_t i = 1; i < triples.size(); ++i) {
    const auto& x = triples[i - 1];
    const auto& y = triples[i];
    const auto key = [](const GeneralizedTriple& t) {
      return std::array<int, 4>{t.sum(), t.a(), t.b(), t.c()};
    };
    CHECK(key(x) < key(y));
  }
  // (3,4,5) is the first boundary triple.
  bool found_boundary = false;
  for (const auto& t : triples)
    if (t.regime() == Regime::lawson_boundary) {
      CHECK(t == GeneralizedTriple(3, 4, 5));
      found_boundary = true;
    }
  CHECK(found_boundary);
}

TEST_CASE("audit sweep up to sum 60") {
  const auto triples = canonical_triples_with_sum_at_most(60);
  int maximal = 0;
  int equalities = 0;
  for (const auto& t : triples) {
    const SpectralRecord rec = spectral_record(t);
    for (const auto& e : rec.evidence) {
      CAPTURE(t.a());
      CAPTURE(t.b());
      CAPTURE(t.c());
      CAPTURE(e.name);
      CHECK(e.pass);
      if (e.equality_witness) ++equalities;
    }
    if (rec.verdict == Verdict::maximal) ++maximal;
  }
  CHECK(maximal == 2);
  // Exactly three places attain a bound: the halved Clifford torus square
  // integral, the equilateral torus index bound, and the maximal Klein
  // bottle's Lambda_1.
  CHECK(equalities == 3);
}

TEST_CASE("lambda equals twice the quadrature area on small interior triples") {
  for (const auto& t : canonical_triples_with_sum_at_most(9)) {
    if (t.regime() != Regime::interior) continue;
    const SpectralRecord rec = spectral_record(t);
    const double area = area_quadrature(t, 256, 256);
    // Both parities give lambda = 2 area: even c trades the doubled index
    // formula for the doubled covering, odd c the other way round.
    CAPTURE(t.a());
    CAPTURE(t.b());
    CAPTURE(t.c());
    CHECK(std::fabs(rec.lambda_value - 2.0 * area) < 1e-7);
  }
}
