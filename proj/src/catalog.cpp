// catalog.cpp

#include "lawson/catalog.hpp"

#include <cstdio>

#include "lawson/errors.hpp"

namespace lawson {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

CatalogRow catalog_row(const GeneralizedTriple& t) {
  const SpectralRecord rec = spectral_record(t);
  CatalogRow row;
  row.a = t.a();
  row.b = t.b();
  row.c = t.c();
  row.topology = rec.topology;
  row.regime = rec.regime;
  row.index_j = rec.index_j;
  row.lambda_value = rec.lambda_value;
  row.lambda_over_bound = rec.lambda_value / prop1_bound(rec.topology, rec.index_j);
  row.verdict = rec.verdict;
  row.prop3_margin = rec.evidence.front().margin;  // square-integral item is always first
  return row;
}

std::vector<CatalogRow> build_catalog(int max_sum, Exec exec) {
  if (max_sum < 3) throw InvalidParams("catalog needs max_sum >= 3");
  const std::vector<GeneralizedTriple> triples = canonical_triples_with_sum_at_most(max_sum);
  std::vector<CatalogRow> rows(triples.size());
  const int n = static_cast<int>(triples.size());
  static_cast<void>(exec);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] = catalog_row(triples[static_cast<std::size_t>(i)]);
  return rows;
}

std::string catalog_to_csv(const std::vector<CatalogRow>& rows) {
  std::string out = "a,b,c,topology,regime,index_j,lambda,lambda_over_bound,verdict,prop3_margin\n";
  for (const CatalogRow& r : rows) {
    out += std::to_string(r.a) + ',' + std::to_string(r.b) + ',' + std::to_string(r.c) + ',';
    out += to_string(r.topology);
    out += ',';
    out += to_string(r.regime);
    out += ',' + std::to_string(r.index_j) + ',' + fmt17(r.lambda_value) + ',' +
           fmt17(r.lambda_over_bound) + ',' + to_string(r.verdict) + ',' +
           fmt17(r.prop3_margin) + '\n';
  }
  return out;
}

std::string catalog_to_json(const std::vector<CatalogRow>& rows) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CatalogRow& r = rows[i];
    out += "  {\"a\":" + std::to_string(r.a) + ",\"b\":" + std::to_string(r.b) +
           ",\"c\":" + std::to_string(r.c) + ",\"topology\":\"" + to_string(r.topology) +
           "\",\"regime\":\"" + to_string(r.regime) +
           "\",\"index_j\":" + std::to_string(r.index_j) + ",\"lambda\":" +
           fmt17(r.lambda_value) + ",\"lambda_over_bound\":" + fmt17(r.lambda_over_bound) +
           ",\"verdict\":\"" + to_string(r.verdict) + "\",\"prop3_margin\":" +
           fmt17(r.prop3_margin) + "}";
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

}  // namespace lawson
