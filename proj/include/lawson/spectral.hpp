// spectral.hpp
// Closed-form spectral data: the square integral S(a,b,c), extremal indices
// and Lambda values for the three families, the sup-Lambda lower bounds, the
// bound audits behind the maximality classification, and the verdict itself.

#ifndef LAWSON_SPECTRAL_HPP
#define LAWSON_SPECTRAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lawson/surfaces.hpp"

namespace lawson {

enum class Verdict { maximal, not_maximal };

std::string to_string(Verdict v);

// One audited inequality lhs < rhs (or lhs <= rhs when strictness is not
// required).  margin = rhs - lhs.  equality_witness marks the places where
// the two sides agree by construction and strictness is waived.
struct EvidenceItem {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool strict_required = true;
  bool exceptional = false;       // inside a small-sum list settled by direct evaluation
  bool equality_witness = false;  // the bound is attained exactly
  bool pass = false;
  std::string note;
};

// Spectral data for a Lawson pair tau_{a,b}: topology, the functional index
//   j = 2 floor(sqrt(a^2+b^2)/2) + a + b - 1,
// and Lambda_j = 8 pi A E((A^2-B^2)/A^2) with A = max(a,b), B = min(a,b).
struct TauSpectralRecord {
  int a = 0, b = 0;
  Topology topology = Topology::torus;
  int index_j = 0;
  double lambda_value = 0.0;
};

struct SpectralRecord {
  GeneralizedTriple triple;
  Topology topology;
  Regime regime;
  int index_j = 0;
  double lambda_value = 0.0;
  Verdict verdict = Verdict::not_maximal;
  std::optional<LawsonPair> bipolar_pair;  // set on interior triples with a zero frequency
  std::string annotation;
  std::vector<EvidenceItem> evidence;
};

// Raw closed form
//   S(a,b,c) = 4 pi / sqrt(c^2-a^2) (2 (c^2-a^2) E(kappa) - (c^2-a^2-b^2) K(kappa)),
// elliptic parameter kappa^2 = (b^2-a^2)/(c^2-a^2), negative when a > b.
// Arguments are taken in the given order; no canonicalization.
// Throws DomainError when c^2 <= a^2.
double closed_square_integral(int a, int b, int c);

// Canonical wrapper; interior regime only.
double S_abc(const GeneralizedTriple& t);

// Lower bound for sup Lambda_n over metrics on the torus or Klein bottle:
//   torus:        8 pi (n - 1 + pi/sqrt(3))
//   Klein bottle: 8 pi (n - 1) + 12 pi E(8/9)
// Throws DomainError when n < 1.
double prop1_bound(Topology topology, int n);

// (16 - 6 E(8/9)) / (4 - pi): sums a+b+c past this value make the mixed
// parity bound hold automatically.  Lands between 10 and 11.
double prop2_threshold();

TauSpectralRecord tau_spectral_record(int a, int b);

// Bound audit for one canonical triple.  Every triple gets the square
// integral bound S < 2 pi^2 (a+b+c) (non-strict on the Lawson boundary and
// at (0,0,1) where the bound is attained).  Interior triples with all three
// frequencies nonzero also get the index bound at their extremal index.
std::vector<EvidenceItem> prop2_prop3_audit(const GeneralizedTriple& t);

// Direct evaluations of the index bound for the ten small-sum triples the
// sum threshold does not cover.  Computed from the raw closed form so the
// list may include (3,3,4), which is not an admissible triple.
std::vector<EvidenceItem> exceptional_triple_checks();

Verdict maximality_verdict(const GeneralizedTriple& t);

SpectralRecord spectral_record(const GeneralizedTriple& t);

// All canonical triples (interior and Lawson boundary) with a+b+c <= n,
// sorted by (a+b+c, a, b, c).
std::vector<GeneralizedTriple> canonical_triples_with_sum_at_most(int n);

}  // namespace lawson

#endif
