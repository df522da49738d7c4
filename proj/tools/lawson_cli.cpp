// lawson_cli.cpp
// Front end: classify | catalog | verify | mesh.
// Exit codes: 0 success, 2 usage or parameter error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lawson/catalog.hpp"
#include "lawson/errors.hpp"
#include "lawson/mesh.hpp"
#include "lawson/spectral.hpp"
#include "lawson/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Empty path means stdout.
bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fputs(content.c_str(), stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

int run_classify(int a, int b, int c) {
  const lawson::GeneralizedTriple t(a, b, c);
  const lawson::SpectralRecord rec = lawson::spectral_record(t);
  std::string json = "{\"canonical\":[" + std::to_string(t.a()) + "," + std::to_string(t.b()) +
                     "," + std::to_string(t.c()) + "],\"topology\":\"" +
                     lawson::to_string(rec.topology) + "\",\"regime\":\"" +
                     lawson::to_string(rec.regime) +
                     "\",\"index\":" + std::to_string(rec.index_j) +
                     ",\"lambda\":" + fmt17(rec.lambda_value) + ",\"verdict\":\"" +
                     lawson::to_string(rec.verdict) + "\"";
  if (rec.bipolar_pair)
    json += ",\"bipolar_pair\":{\"r\":" + std::to_string(rec.bipolar_pair->r()) +
            ",\"m\":" + std::to_string(rec.bipolar_pair->m()) + "}";
  json += "}\n";
  std::fputs(json.c_str(), stdout);
  return kExitOk;
}

int run_catalog(int max_sum, const std::string& format, const std::string& out_path,
                bool parallel) {
  const std::vector<lawson::CatalogRow> rows =
      lawson::build_catalog(max_sum, parallel ? lawson::Exec::parallel : lawson::Exec::serial);
  const std::string content =
      format == "json" ? lawson::catalog_to_json(rows) : lawson::catalog_to_csv(rows);
  if (!write_output(out_path, content)) {
    std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
    return kExitIo;
  }
  return kExitOk;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw lawson::InvalidParams("not an integer: " + s);
  return v;
}

int run_verify(const std::string& suite, const std::vector<std::string>& params,
               std::optional<double> tol) {
  lawson::VerifyReport rep;
  if (suite == "elliptic") {
    rep = lawson::verify_elliptic(tol);
  } else if (suite == "minimal") {
    std::vector<lawson::NamedSurface> surfaces;
    if (params.empty()) {
      surfaces = lawson::default_minimal_surfaces();
    } else {
      const std::string& fam = params.front();
      if ((fam == "tau" || fam == "\xcf\x84") && params.size() == 3) {
        // Relaxed pair: any coprime positive frequencies immerse.
        surfaces.push_back({"tau(" + params[1] + "," + params[2] + ")",
                            lawson::lawson_surface(parse_int(params[1]), parse_int(params[2]))});
      } else if (fam == "bipolar" && params.size() == 3) {
        const lawson::LawsonPair p(parse_int(params[1]), parse_int(params[2]));
        surfaces.push_back({"bipolar(" + params[1] + "," + params[2] + ")",
                            lawson::bipolar_surface(p)});
      } else if (fam == "T" && params.size() == 4) {
        const lawson::GeneralizedTriple t(parse_int(params[1]), parse_int(params[2]),
                                          parse_int(params[3]));
        surfaces.push_back({"T(" + params[1] + "," + params[2] + "," + params[3] + ")",
                            lawson::generalized_surface(t)});
      } else {
        throw lawson::InvalidParams("minimal wants --params tau|bipolar r m or T a b c");
      }
    }
    rep = lawson::verify_minimal(surfaces, tol);
  } else if (suite == "isometry") {
    std::vector<lawson::LawsonPair> pairs;
    if (params.empty()) {
      pairs = lawson::default_isometry_pairs();
    } else if (params.size() == 2) {
      pairs.emplace_back(parse_int(params[0]), parse_int(params[1]));
    } else {
      throw lawson::InvalidParams("isometry wants --params r m");
    }
    rep = lawson::verify_isometry(pairs, tol);
  } else if (suite == "area") {
    std::vector<lawson::GeneralizedTriple> triples;
    if (params.empty()) {
      triples = lawson::default_area_triples();
    } else if (params.size() == 4 && params.front() == "T") {
      triples.emplace_back(parse_int(params[1]), parse_int(params[2]), parse_int(params[3]));
    } else if (params.size() == 3) {
      triples.emplace_back(parse_int(params[0]), parse_int(params[1]), parse_int(params[2]));
    } else {
      throw lawson::InvalidParams("area wants --params [T] a b c");
    }
    rep = lawson::verify_area(triples, tol);
  } else {
    std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
    return kExitUsage;
  }
  std::fputs(lawson::format_report(rep).c_str(), stdout);
  return rep.pass ? kExitOk : 1;
}

int run_mesh(const std::string& family, const std::vector<int>& params, int nx, int ny,
             const std::string& format, const std::string& out_path) {
  lawson::SurfaceFn fn;
  int dim = 0;
  if ((family == "tau" || family == "\xcf\x84") && params.size() == 2) {
    fn = lawson::lawson_surface(params[0], params[1]);
    dim = 4;
  } else if (family == "bipolar" && params.size() == 2) {
    fn = lawson::bipolar_surface(lawson::LawsonPair(params[0], params[1]));
    dim = 6;
  } else if (family == "T" && params.size() == 3) {
    fn = lawson::generalized_surface(lawson::GeneralizedTriple(params[0], params[1], params[2]));
    dim = 6;
  } else {
    throw lawson::InvalidParams("mesh wants tau|bipolar r m or T a b c");
  }
  const lawson::MeshGrid grid = lawson::sample_surface(fn, dim, nx, ny);
  const std::string content =
      format == "csv" ? lawson::mesh_to_csv(grid) : lawson::mesh_to_obj(grid);
  if (!write_output(out_path, content)) {
    std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lawson tau / bipolar / generalized surface toolkit"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "canonicalize a triple and report its data");
  std::vector<int> cl_abc;
  classify->add_option("abc", cl_abc, "frequencies a b c")->expected(3)->required();

  auto* catalog = app.add_subcommand("catalog", "spectral table over a+b+c <= N");
  int max_sum = 0;
  std::string cat_format = "csv", cat_out;
  bool cat_parallel = false;
  catalog->add_option("--max-sum", max_sum, "frequency sum cap")->required();
  catalog->add_option("--format", cat_format)->check(CLI::IsMember({"csv", "json"}));
  catalog->add_option("--out", cat_out, "output path (stdout when omitted)");
  catalog->add_flag("--parallel", cat_parallel, "fan the sweep out over threads");

  auto* verify = app.add_subcommand("verify", "run one invariant suite");
  std::string suite;
  std::vector<std::string> verify_params;
  double tol_value = 0.0;
  verify->add_option("suite", suite, "minimal | isometry | area | elliptic")->required();
  verify->add_option("--params", verify_params, "surface or pair selector")->expected(-1);
  auto* tol_opt = verify->add_option("--tol", tol_value, "tolerance override");

  auto* mesh = app.add_subcommand("mesh", "sample an immersion to OBJ or CSV");
  std::string family, mesh_format = "obj", mesh_out;
  std::vector<int> mesh_params;
  int nx = 64, ny = 64;
  mesh->add_option("family", family, "tau | bipolar | T")->required();
  mesh->add_option("params", mesh_params, "r m (pairs) or a b c (triples)")
      ->expected(-1)
      ->required();
  mesh->add_option("--nx", nx, "grid points in u");
  mesh->add_option("--ny", ny, "grid points in v");
  mesh->add_option("--format", mesh_format)->check(CLI::IsMember({"obj", "csv"}));
  mesh->add_option("--out", mesh_out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return run_classify(cl_abc[0], cl_abc[1], cl_abc[2]);
    if (catalog->parsed()) return run_catalog(max_sum, cat_format, cat_out, cat_parallel);
    if (verify->parsed()) {
      std::optional<double> tol;
      if (tol_opt->count() > 0) tol = tol_value;
      return run_verify(suite, verify_params, tol);
    }
    if (mesh->parsed()) return run_mesh(family, mesh_params, nx, ny, mesh_format, mesh_out);
  } catch (const lawson::InvalidParams& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return kExitUsage;
  } catch (const lawson::DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
