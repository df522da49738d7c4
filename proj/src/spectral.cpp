// spectral.cpp

#include "lawson/spectral.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lawson/elliptic.hpp"
#include "lawson/errors.hpp"

namespace lawson {

namespace {

constexpr double kPi = std::numbers::pi;

// Parameter 8/9 is the square of the modulus 2 sqrt(2)/3 appearing in the
// Klein bottle bound.
double e_eight_ninths() {
  static const double value = elliptic_E(8.0 / 9.0);
  return value;
}

struct RawTriple {
  int a, b, c;
};

constexpr std::array<RawTriple, 3> kMixedParityList = {RawTriple{1, 2, 4}, {1, 2, 6}, {2, 3, 4}};
constexpr std::array<RawTriple, 6> kOddPairList = {RawTriple{1, 1, 4}, {1, 1, 6}, {1, 1, 8},
                                                   {1, 3, 4},          {1, 3, 6}, {3, 3, 4}};
constexpr std::array<RawTriple, 1> kOddCList = {RawTriple{1, 1, 3}};

template <std::size_t N>
bool in_list(const std::array<RawTriple, N>& list, int a, int b, int c) {
  for (const RawTriple& t : list)
    if (t.a == a && t.b == b && t.c == c) return true;
  return false;
}

std::string triple_tag(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Index bound for one raw triple, branch chosen by the stated parities.
EvidenceItem index_bound_item(int a, int b, int c) {
  const int sum = a + b + c;
  const double s = closed_square_integral(a, b, c);
  EvidenceItem item;
  if (c % 2 == 0) {
    const int idx = sum - 3;
    item.lhs = s;
    if ((a + b) % 2 == 1) {
      item.rhs = prop1_bound(Topology::klein_bottle, idx);
      item.name = triple_tag(a, b, c) + " Lambda_" + std::to_string(idx) +
                  " below the Klein bottle bound";
    } else {
      item.rhs = prop1_bound(Topology::torus, idx);
      item.name =
          triple_tag(a, b, c) + " Lambda_" + std::to_string(idx) + " below the torus bound";
    }
  } else {
    const int idx = 2 * sum - 3;
    item.lhs = 2.0 * s;
    item.rhs = prop1_bound(Topology::torus, idx);
    item.name =
        triple_tag(a, b, c) + " Lambda_" + std::to_string(idx) + " below the torus bound";
  }
  item.margin = item.rhs - item.lhs;
  item.exceptional = in_list(kMixedParityList, a, b, c) || in_list(kOddPairList, a, b, c) ||
                     in_list(kOddCList, a, b, c);
  if (a == 1 && b == 1 && c == 2) {
    item.equality_witness = true;
    item.strict_required = false;
    item.pass = std::fabs(item.margin) < 1e-9;
    item.note = "bound attained: the equilateral torus";
  } else {
    item.pass = item.margin > 0.0;
  }
  return item;
}

EvidenceItem citation_item(const std::string& note) {
  EvidenceItem item;
  item.name = "external classification";
  item.strict_required = false;
  item.pass = true;
  item.note = note;
  return item;
}

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::maximal ? "maximal" : "not_maximal";
}

double closed_square_integral(int a, int b, int c) {
  const double a2 = static_cast<double>(a) * a;
  const double b2 = static_cast<double>(b) * b;
  const double c2 = static_cast<double>(c) * c;
  const double ca = c2 - a2;
  if (ca <= 0.0) throw DomainError("square integral needs c^2 > a^2");
  const double kappa = (b2 - a2) / ca;
  return 4.0 * kPi / std::sqrt(ca) *
         (2.0 * ca * elliptic_E(kappa) - (ca - b2) * elliptic_K(kappa));
}

double S_abc(const GeneralizedTriple& t) {
  if (t.regime() != Regime::interior)
    throw DomainError("square integral closed form applies to the interior regime");
  return closed_square_integral(t.a(), t.b(), t.c());
}

double prop1_bound(Topology topology, int n) {
  if (n < 1) throw DomainError("sup-Lambda bound needs n >= 1");
  if (topology == Topology::torus) return 8.0 * kPi * (n - 1 + kPi / std::sqrt(3.0));
  return 8.0 * kPi * (n - 1) + 12.0 * kPi * e_eight_ninths();
}

double prop2_threshold() { return (16.0 - 6.0 * e_eight_ninths()) / (4.0 - kPi); }

TauSpectralRecord tau_spectral_record(int a, int b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw InvalidParams("Lawson pair needs coprime a, b >= 1");
  TauSpectralRecord rec;
  rec.a = a;
  rec.b = b;
  rec.topology = (a % 2 == 1 && b % 2 == 1) ? Topology::torus : Topology::klein_bottle;
  const double hyp = std::sqrt(static_cast<double>(a) * a + static_cast<double>(b) * b);
  rec.index_j = 2 * static_cast<int>(std::floor(hyp / 2.0)) + a + b - 1;
  const int big = a > b ? a : b, small = a > b ? b : a;
  const double big2 = static_cast<double>(big) * big;
  const double param = (big2 - static_cast<double>(small) * small) / big2;
  rec.lambda_value = 8.0 * kPi * big * elliptic_E(param);
  return rec;
}

std::vector<EvidenceItem> prop2_prop3_audit(const GeneralizedTriple& t) {
  std::vector<EvidenceItem> items;
  const int a = t.a(), b = t.b(), c = t.c();
  const int sum = a + b + c;

  EvidenceItem sq;
  sq.name = "square integral below 2 pi^2 (a+b+c)";
  sq.lhs = closed_square_integral(a, b, c);
  sq.rhs = 2.0 * kPi * kPi * sum;
  sq.margin = sq.rhs - sq.lhs;
  if (t.regime() == Regime::lawson_boundary) {
    sq.strict_required = false;
    sq.pass = sq.margin >= 0.0;
    sq.note = "boundary family: the bound holds non-strictly";
  } else if (a == 0 && b == 0) {
    sq.strict_required = false;
    sq.equality_witness = true;
    sq.pass = sq.margin == 0.0;
    sq.note = "bound attained: zero frequencies collapse every estimate in the chain";
  } else {
    sq.pass = sq.margin > 0.0;
  }
  items.push_back(sq);

  if (t.regime() == Regime::interior && a >= 1) items.push_back(index_bound_item(a, b, c));
  return items;
}

std::vector<EvidenceItem> exceptional_triple_checks() {
  std::vector<EvidenceItem> items;
  for (const RawTriple& t : kMixedParityList) items.push_back(index_bound_item(t.a, t.b, t.c));
  for (const RawTriple& t : kOddPairList) {
    EvidenceItem item = index_bound_item(t.a, t.b, t.c);
    if (t.a == 3 && t.b == 3 && t.c == 4)
      item.note = "not an admissible triple (c^2 < a^2 + b^2); evaluated formally from the "
                  "closed form";
    items.push_back(item);
  }
  for (const RawTriple& t : kOddCList) items.push_back(index_bound_item(t.a, t.b, t.c));
  return items;
}

Verdict maximality_verdict(const GeneralizedTriple& t) {
  const bool max = (t.a() == 0 && t.b() == 1 && t.c() == 2) ||
                   (t.a() == 1 && t.b() == 1 && t.c() == 2);
  return max ? Verdict::maximal : Verdict::not_maximal;
}

SpectralRecord spectral_record(const GeneralizedTriple& t) {
  SpectralRecord rec{.triple = t,
                     .topology = t.topology(),
                     .regime = t.regime(),
                     .index_j = 0,
                     .lambda_value = 0.0,
                     .verdict = maximality_verdict(t),
                     .bipolar_pair = {},
                     .annotation = {},
                     .evidence = prop2_prop3_audit(t)};

  if (t.regime() == Regime::lawson_boundary) {
    const TauSpectralRecord tr = tau_spectral_record(t.a(), t.b());
    rec.index_j = tr.index_j;
    rec.lambda_value = tr.lambda_value;
    rec.evidence.push_back(citation_item(
        "nonmaximality of the Lawson pair metrics is a literature result; recorded as a "
        "citation"));
    return rec;
  }

  if (t.a() == 0 && t.b() == 0) {
    rec.index_j = 1;
    rec.lambda_value = 2.0 * closed_square_integral(0, 0, 1);
    rec.annotation = "Clifford torus with the metric multiplied by 1/2";
    rec.evidence.push_back(citation_item(
        "nonmaximality of the half-metric Clifford torus is a literature result; recorded as "
        "a citation"));
    return rec;
  }

  if (t.a() == 0) {
    const std::optional<LawsonPair> pair = to_bipolar_pair(t);
    if (!pair) throw InvalidParams("zero-frequency triple without a bipolar preimage");
    rec.bipolar_pair = pair;
    const int r = pair->r();
    const double r2 = static_cast<double>(r) * r;
    const double m2 = static_cast<double>(pair->m()) * pair->m();
    const double e = elliptic_E((r2 - m2) / r2);
    switch (pair->parity_case()) {
      case PairCase::rm_even:
        rec.index_j = 4 * r - 2;
        rec.lambda_value = 16.0 * kPi * r * e;
        break;
      case PairCase::rm_1_mod_4:
        rec.index_j = 2 * r - 2;
        rec.lambda_value = 8.0 * kPi * r * e;
        break;
      case PairCase::rm_3_mod_4:
        rec.index_j = r - 2;
        rec.lambda_value = 4.0 * kPi * r * e;
        break;
    }
    if (rec.verdict == Verdict::maximal) {
      EvidenceItem attained;
      attained.name = "Lambda_1 attains the Klein bottle bound at n = 1";
      attained.lhs = rec.lambda_value;
      attained.rhs = prop1_bound(Topology::klein_bottle, 1);
      attained.margin = attained.rhs - attained.lhs;
      attained.strict_required = false;
      attained.equality_witness = true;
      attained.pass = std::fabs(attained.margin) < 1e-12;
      rec.evidence.push_back(attained);
    } else {
      rec.evidence.push_back(citation_item(
          "nonmaximality of the bipolar family metrics is a literature result; recorded as a "
          "citation"));
    }
    return rec;
  }

  const double s = closed_square_integral(t.a(), t.b(), t.c());
  const int sum = t.a() + t.b() + t.c();
  if (t.c() % 2 == 0) {
    rec.index_j = sum - 3;
    rec.lambda_value = s;
  } else {
    rec.index_j = 2 * sum - 3;
    rec.lambda_value = 2.0 * s;
  }
  return rec;
}

std::vector<GeneralizedTriple> canonical_triples_with_sum_at_most(int n) {
  std::vector<GeneralizedTriple> out;
  for (int sum = 1; sum <= n; ++sum) {
    for (int a = 0; 3 * a < sum; ++a) {
      for (int b = a; a + 2 * b < sum; ++b) {
        const int c = sum - a - b;
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        const long long cc = static_cast<long long>(c) * c;
        const long long ab = static_cast<long long>(a) * a + static_cast<long long>(b) * b;
        if (cc < ab) continue;
        if (cc == ab && a == 0) continue;
        out.emplace_back(a, b, c);
      }
    }
  }
  return out;
}

}  // namespace lawson
