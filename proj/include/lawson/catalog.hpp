// catalog.hpp
// Spectral catalog over all canonical triples up to a frequency-sum cap,
// with deterministic CSV/JSON serialization.

#ifndef LAWSON_CATALOG_HPP
#define LAWSON_CATALOG_HPP

#include <string>
#include <vector>

#include "lawson/exec.hpp"
#include "lawson/spectral.hpp"

namespace lawson {

struct CatalogRow {
  int a = 0, b = 0, c = 0;
  Topology topology = Topology::torus;
  Regime regime = Regime::interior;
  int index_j = 0;
  double lambda_value = 0.0;
  double lambda_over_bound = 0.0;  // ratio to the sup-Lambda bound at index_j
  Verdict verdict = Verdict::not_maximal;
  double prop3_margin = 0.0;       // 2 pi^2 (a+b+c) - S
};

CatalogRow catalog_row(const GeneralizedTriple& t);

// One row per canonical triple with a+b+c <= max_sum, sorted by
// (a+b+c, a, b, c).  Rows are written by triple index, so parallel runs
// produce byte-identical output.  Throws InvalidParams when max_sum < 3.
std::vector<CatalogRow> build_catalog(int max_sum, Exec exec = Exec::serial);

// Header "a,b,c,topology,regime,index_j,lambda,lambda_over_bound,verdict,prop3_margin",
// floats at 17 significant digits.
std::string catalog_to_csv(const std::vector<CatalogRow>& rows);
std::string catalog_to_json(const std::vector<CatalogRow>& rows);

}  // namespace lawson

#endif
