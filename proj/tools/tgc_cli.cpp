// tgc: command-line front end for connections, Wronskians, Nevanlinna
// functionals and the uniqueness checks.
//
// Exit status: 0 all verdicts pass, 1 some verdict fails, 2 bad input or a
// violated hypothesis.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tgc/algebra/parse.hpp"
#include "tgc/error.hpp"
#include "tgc/io.hpp"

namespace fs = std::filesystem;
using namespace tgc;

namespace {

enum class Format { Json, Csv, Both };

struct GlobalOptions {
  std::string outDir;
  std::string format = "json";
  std::optional<double> epsilon;
  double quadTol = 1e-9;
  std::uint64_t seed = 1;

  Format parsedFormat() const {
    if (format == "csv") return Format::Csv;
    if (format == "both") return Format::Both;
    return Format::Json;
  }
  QuadratureSettings quadrature() const {
    QuadratureSettings q;
    q.tolerance = quadTol;
    return q;
  }
};

void writeFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << text;
}

// Writes <name>.json / <name>.csv under --out, or prints to stdout.
void emit(const GlobalOptions& opts, const std::string& name, const Json& report, const std::string& csv) {
  Format f = opts.parsedFormat();
  bool json = f != Format::Csv;
  bool table = f != Format::Json && !csv.empty();
  if (opts.outDir.empty()) {
    if (json) std::cout << report.dump(2) << '\n';
    if (table) std::cout << csv;
    return;
  }
  fs::create_directories(opts.outDir);
  if (json) writeFile(fs::path(opts.outDir) / (name + ".json"), report.dump(2) + "\n");
  if (table) writeFile(fs::path(opts.outDir) / (name + ".csv"), csv);
}

Json withHeader(const Json& canonical, const Json& body) {
  Json out = reportHeader(canonical);
  out.update(body);
  return out;
}

// A basis document, or a scenario whose "basis" field holds one.
std::pair<Json, LinearSystemBasis> loadBasis(const std::string& file) {
  Json doc = readJsonFile(file);
  if (doc.is_object() && doc.contains("basis")) {
    Scenario s = scenarioFromJson(doc, fs::path(file).parent_path());
    if (!s.basis) throw Error(ErrorKind::Parse, "scenario has no basis");
    return {s.canonical.at("basis"), *s.basis};
  }
  return {doc, basisFromJson(doc)};
}

EulerCheckOptions eulerOptions(const GlobalOptions& opts) {
  EulerCheckOptions e;
  e.seed = opts.seed;
  return e;
}

int connectionBuild(const GlobalOptions& opts, const std::string& file) {
  auto [doc, basis] = loadBasis(file);
  ChristoffelTensor tensor = solveChristoffel(basis);
  EulerReport euler = checkEulerProperty(tensor, eulerOptions(opts));
  std::vector<GeodesicReport> geo;
  for (const auto& s : basis.members()) geo.push_back(verifyGeodesicIdentity(tensor, s));
  Json report = withHeader(doc, connectionReport(basis, tensor, euler, checkHomogeneityDegree(tensor), geo));
  emit(opts, "connection", report, "");
  return report.at("pass").get<bool>() ? 0 : 1;
}

int connectionCheck(const GlobalOptions& opts, const std::string& file, const std::vector<std::string>& sigmaTexts) {
  auto [doc, basis] = loadBasis(file);
  ChristoffelTensor tensor = solveChristoffel(basis);
  EulerReport euler = checkEulerProperty(tensor, eulerOptions(opts));
  bool homogeneous = checkHomogeneityDegree(tensor);
  std::vector<HomogeneousPolynomial> sigmas = basis.members();
  for (const auto& t : sigmaTexts) sigmas.push_back(parseHomogeneous(t, basis.numVars()));
  std::vector<ChartConnection> charts;
  for (int j = 0; j <= basis.k(); ++j) charts.push_back(chartRestrict(tensor, j));
  bool pass = homogeneous && euler.holds;
  Json rows = Json::array();
  for (const auto& s : sigmas) {
    bool member = basis.spanCoefficients(s).has_value();
    bool ambient = verifyGeodesicIdentity(tensor, s).holds;
    Json perChart = Json::array();
    bool chartsOk = true;
    for (const auto& c : charts) {
      bool ok = isTotallyGeodesicInChart(c, s);
      perChart.push_back(ok);
      chartsOk = chartsOk && ok;
    }
    // Members of the linear system must pass; other sigmas are informational.
    if (member) pass = pass && ambient && chartsOk;
    rows.push_back({{"sigma", s.toString()}, {"inLinearSystem", member}, {"geodesic", ambient}, {"charts", perChart}});
  }
  Json body = {{"k", basis.k()},
               {"d", basis.d()},
               {"homogeneity", homogeneous},
               {"euler", {{"holds", euler.holds}, {"worstResidual", euler.worstResidual}}},
               {"polarDegree", polarDegree(tensor).degree},
               {"sigmas", rows},
               {"pass", pass}};
  Json canonical = {{"basis", doc}, {"sigmas", sigmaTexts}};
  emit(opts, "connection_check", withHeader(canonical, body), "");
  return pass ? 0 : 1;
}

int curveWronskian(const GlobalOptions& opts, const std::string& file, const std::string& basisFile,
                   std::optional<int> chartFlag) {
  Json doc = readJsonFile(file);
  Json canonical;
  std::optional<ProjectiveCurve> curve;
  std::optional<LinearSystemBasis> basis;
  if (doc.is_object() && doc.contains("components")) {
    canonical = {{"curve", doc}};
    curve = curveFromJson(doc);
  } else {
    Scenario s = scenarioFromJson(doc, fs::path(file).parent_path());
    if (s.curves.size() != 1) throw Error(ErrorKind::Parse, "curve wronskian expects exactly one curve");
    canonical = s.canonical;
    curve = s.curves.front();
    basis = s.basis;
  }
  if (!basisFile.empty()) {
    auto [bdoc, b] = loadBasis(basisFile);
    canonical["basis"] = bdoc;
    basis = b;
  }
  ProjectiveCurve f = reduce(*curve);
  if (!basis) basis = LinearSystemBasis::fermat(f.k(), 1);
  if (basis->k() != f.k()) throw Error(ErrorKind::DegreeMismatch, "curve and basis disagree on k");
  ChristoffelTensor tensor = solveChristoffel(*basis);
  int chart = chartFlag.value_or(defaultChart(f));
  WronskianValue w = connectionWronskian(f, chartRestrict(tensor, chart));
  Json perChart = Json::array();
  bool agree = true;
  for (int j = 0; j <= f.k(); ++j) {
    if (f[j].isZero()) continue;
    bool zero = connectionWronskian(f, chartRestrict(tensor, j)).identicallyZero;
    agree = agree && zero == w.identicallyZero;
    perChart.push_back({{"chart", j}, {"identicallyZero", zero}});
  }
  Json body = {{"reducedCurve", [&] {
                  Json c = Json::array();
                  for (const auto& p : f.components()) c.push_back(p.toString());
                  return c;
                }()},
               {"frame", frameJson(w.frame)},
               {"wronskian", w.value.toString()},
               {"identicallyZero", w.identicallyZero},
               {"charts", perChart},
               {"chartsAgree", agree}};
  emit(opts, "wronskian", withHeader(canonical, body), "");
  return 0;
}

const RadiusGrid& requireGrid(const Scenario& s) {
  if (!s.grid) throw Error(ErrorKind::Parse, "scenario needs a \"grid\"");
  return *s.grid;
}

LinearSystemBasis scenarioBasis(const Scenario& s) {
  if (s.basis) return *s.basis;
  return LinearSystemBasis::fermat(s.curves.front().k(), 1);
}

int nevanlinnaEval(const GlobalOptions& opts, const std::string& file, std::optional<int> truncation) {
  Scenario s = loadScenario(file);
  if (s.curves.empty()) throw Error(ErrorKind::Parse, "scenario needs a curve");
  if (s.sigmas.empty()) throw Error(ErrorKind::Parse, "scenario needs sigmas");
  ProjectiveCurve f = reduce(s.curves.front());
  int trunc = truncation.value_or(s.truncation.value_or(f.k()));
  NevanlinnaTable table = evaluateNevanlinna(f, s.sigmas, requireGrid(s), trunc, opts.quadrature());
  emit(opts, "nevanlinna", withHeader(s.canonical, nevanlinnaJson(table, opts.quadrature())), nevanlinnaCsv(table));
  return 0;
}

double epsilonFor(const GlobalOptions& opts, const Scenario& s) { return opts.epsilon.value_or(s.epsilon.value_or(0.1)); }

int smtVerifyCmd(const GlobalOptions& opts, const std::string& file) {
  Scenario s = loadScenario(file);
  if (s.curves.size() != 1) throw Error(ErrorKind::Parse, "smt verify expects exactly one curve");
  if (s.sigmas.empty()) throw Error(ErrorKind::Parse, "scenario needs sigmas");
  const RadiusGrid& grid = requireGrid(s);
  SMTConfig config{scenarioBasis(s), s.sigmas,  s.curves.front(), grid,          epsilonFor(opts, s),
                   growthIndex(grid.outer(), s.growthIndex), s.logConstant, opts.quadrature(), opts.seed};
  SMTReport report = smtVerify(config);
  emit(opts, "smt", withHeader(s.canonical, smtReportJson(report)), smtCsv(report));
  return report.overall ? 0 : 1;
}

int uniquenessRun(const GlobalOptions& opts, const std::string& file) {
  Scenario s = loadScenario(file);
  if (s.curves.size() != 2) throw Error(ErrorKind::Parse, "uniqueness run expects two curves");
  if (s.sigmas.empty()) throw Error(ErrorKind::Parse, "scenario needs sigmas");
  const RadiusGrid& grid = requireGrid(s);
  if (curvesIdentical(reduce(s.curves[0]), reduce(s.curves[1]))) {
    throw Error(ErrorKind::CurvesIdentical, "f and g are the same projective curve");
  }
  HarnessInput input{scenarioBasis(s),
                     s.sigmas,
                     s.curves[0],
                     s.curves[1],
                     grid,
                     epsilonFor(opts, s),
                     growthIndex(grid.outer(), s.growthIndex).value,
                     s.logConstant,
                     opts.quadrature(),
                     opts.seed,
                     s.synthetic};
  HarnessReport report = uniquenessHarness(input);
  emit(opts, "uniqueness", withHeader(s.canonical, harnessJson(report)), harnessCsv(report));
  return report.failed.empty() ? 0 : 1;
}

int thresholdsCmd(const GlobalOptions& opts, int k, int d, double c) {
  ThresholdTable table = uniquenessThresholds(k, d, c);
  Json canonical = {{"k", k}, {"d", d}, {"c", table.c.get_str()}};
  Json report = withHeader(canonical, thresholdJson(table));
  if (!opts.outDir.empty()) {
    emit(opts, "thresholds", report, thresholdCsv(table));
    return 0;
  }
  Format f = opts.parsedFormat();
  if (f == Format::Json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << thresholdCsv(table);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tgc: meromorphic connections on P^k, connection Wronskians and Nevanlinna checks"};
  app.require_subcommand(1);
  GlobalOptions opts;
  app.add_option("--out", opts.outDir, "Directory for report files (stdout when omitted)");
  app.add_option("--format", opts.format, "json, csv or both")->check(CLI::IsMember({"json", "csv", "both"}));
  app.add_option("--epsilon", opts.epsilon, "epsilon in the error term (default 0.1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--quad-tol", opts.quadTol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "Seed for sampling checks");

  int status = 0;
  std::function<int()> action;

  auto* connection = app.add_subcommand("connection", "Christoffel symbols of a linear system");
  connection->require_subcommand(1);
  connection->fallthrough();
  std::string basisFile;
  auto* build = connection->add_subcommand("build", "Solve for the connection and run all checks");
  build->add_option("basis", basisFile, "Basis or scenario JSON")->required();
  build->fallthrough();
  build->callback([&] { action = [&] { return connectionBuild(opts, basisFile); }; });
  std::vector<std::string> sigmaTexts;
  auto* check = connection->add_subcommand("check", "Check homogeneity, Euler and geodesic properties");
  check->add_option("basis", basisFile, "Basis or scenario JSON")->required();
  check->add_option("--sigma", sigmaTexts, "Extra hypersurface to test");
  check->fallthrough();
  check->callback([&] { action = [&] { return connectionCheck(opts, basisFile, sigmaTexts); }; });

  auto* curve = app.add_subcommand("curve", "Curves and connection Wronskians");
  curve->require_subcommand(1);
  curve->fallthrough();
  std::string curveFile;
  std::string curveBasis;
  std::optional<int> chart;
  auto* wronskian = curve->add_subcommand("wronskian", "Covariant frame and Wronskian of a curve");
  wronskian->add_option("file", curveFile, "Curve or scenario JSON")->required();
  wronskian->add_option("--basis", curveBasis, "Basis JSON (flat connection when omitted)");
  wronskian->add_option("--chart", chart, "Affine chart index");
  wronskian->fallthrough();
  wronskian->callback([&] { action = [&] { return curveWronskian(opts, curveFile, curveBasis, chart); }; });

  auto* nevanlinna = app.add_subcommand("nevanlinna", "Nevanlinna functionals");
  nevanlinna->require_subcommand(1);
  nevanlinna->fallthrough();
  std::string nevFile;
  std::optional<int> truncation;
  auto* eval = nevanlinna->add_subcommand("eval", "Tabulate T, m, N, N_k and the first main theorem residual");
  eval->add_option("scenario", nevFile, "Scenario JSON")->required();
  eval->add_option("--truncation", truncation, "Truncation level (default k)")->check(CLI::PositiveNumber);
  eval->fallthrough();
  eval->callback([&] { action = [&] { return nevanlinnaEval(opts, nevFile, truncation); }; });

  auto* smt = app.add_subcommand("smt", "Second main theorem");
  smt->require_subcommand(1);
  smt->fallthrough();
  std::string smtFile;
  auto* verify = smt->add_subcommand("verify", "Check the inequality on a radius grid");
  verify->add_option("scenario", smtFile, "Scenario JSON")->required();
  verify->fallthrough();
  verify->callback([&] { action = [&] { return smtVerifyCmd(opts, smtFile); }; });

  auto* uniqueness = app.add_subcommand("uniqueness", "Uniqueness for curves sharing hypersurfaces");
  uniqueness->require_subcommand(1);
  uniqueness->fallthrough();
  std::string uniqFile;
  auto* run = uniqueness->add_subcommand("run", "Run every inequality of the uniqueness argument");
  run->add_option("scenario", uniqFile, "Scenario JSON with two curves")->required();
  run->fallthrough();
  run->callback([&] { action = [&] { return uniquenessRun(opts, uniqFile); }; });

  int k = 0;
  int d = 0;
  double c = 0.0;
  auto* thresholds = app.add_subcommand("thresholds", "Table of uniqueness thresholds");
  thresholds->add_option("--k", k, "Projective dimension")->required();
  thresholds->add_option("--d", d, "Degree")->required();
  thresholds->add_option("--c", c, "Growth index");
  thresholds->fallthrough();
  thresholds->callback([&] { action = [&] { return thresholdsCmd(opts, k, d, c); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    status = action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "tgc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tgc: invalid input: " << e.what() << '\n';
    return 2;
  }
  return status;
}
