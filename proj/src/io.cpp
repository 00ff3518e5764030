#include "tgc/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "tgc/algebra/parse.hpp"
#include "tgc/error.hpp"

namespace tgc {

namespace {

[[noreturn]] void schemaError(const std::string& message) { throw Error(ErrorKind::Parse, message); }

const Json& require(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) schemaError(where + ": missing \"" + key + "\"");
  return doc.at(key);
}

int requireInt(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) schemaError(where + ": expected an integer");
  return v.get<int>();
}

double requireNumber(const Json& v, const std::string& where) {
  if (!v.is_number()) schemaError(where + ": expected a number");
  return v.get<double>();
}

const std::string& requireString(const Json& v, const std::string& where) {
  if (!v.is_string()) schemaError(where + ": expected a string");
  return v.get_ref<const std::string&>();
}

// Re-raises a parse failure with the JSON location of the offending string.
template <class F>
auto withContext(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.detail(), e.line(), e.column());
  }
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    auto colon = what.find("syntax error");
    throw ParseError("malformed JSON: " + (colon == std::string::npos ? what : what.substr(colon)), line, column);
  }
}

Json readJsonFile(const std::filesystem::path& path) {
  try {
    return parseJson(readFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.detail(), e.line(), e.column());
  }
}

LinearSystemBasis basisFromJson(const Json& doc) {
  if (!doc.is_object()) schemaError("basis: expected an object");
  if (doc.contains("fermat")) {
    const Json& f = doc.at("fermat");
    int k = requireInt(require(f, "k", "basis.fermat"), "basis.fermat.k");
    int d = requireInt(require(f, "d", "basis.fermat"), "basis.fermat.d");
    if (k < 1 || d < 1) schemaError("basis.fermat: need k, d >= 1");
    return LinearSystemBasis::fermat(k, d);
  }
  const Json& s = require(doc, "S", "basis");
  if (!s.is_array() || s.size() < 2) schemaError("basis.S: expected an array of at least two polynomials");
  int n = static_cast<int>(s.size());
  if (doc.contains("k") && requireInt(doc.at("k"), "basis.k") != n - 1) {
    schemaError("basis.k does not match the " + std::to_string(n) + " members of basis.S");
  }
  std::vector<HomogeneousPolynomial> members;
  for (int mu = 0; mu < n; ++mu) {
    std::string where = "basis.S[" + std::to_string(mu) + "]";
    const std::string& text = requireString(s[mu], where);
    members.push_back(withContext(where, [&] { return parseHomogeneous(text, n); }));
  }
  LinearSystemBasis basis(std::move(members));
  if (doc.contains("d") && requireInt(doc.at("d"), "basis.d") != basis.d()) {
    throw Error(ErrorKind::DegreeMismatch, "basis.d does not match the degree of the members");
  }
  return basis;
}

ProjectiveCurve curveFromJson(const Json& doc) {
  const Json& c = require(doc, "components", "curve");
  if (!c.is_array() || c.size() < 2) schemaError("curve.components: expected at least two polynomials");
  std::vector<UniPolynomial> comps;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string where = "curve.components[" + std::to_string(i) + "]";
    const std::string& text = requireString(c[i], where);
    comps.push_back(withContext(where, [&] { return parseUniPolynomial(text); }));
  }
  return ProjectiveCurve(std::move(comps));
}

std::vector<HomogeneousPolynomial> sigmasFromJson(const Json& doc, int numVars, const LinearSystemBasis* basis) {
  if (!doc.is_array() || doc.empty()) schemaError("sigmas: expected a nonempty array");
  std::vector<HomogeneousPolynomial> out;
  for (std::size_t j = 0; j < doc.size(); ++j) {
    std::string where = "sigmas[" + std::to_string(j) + "]";
    const Json& e = doc[j];
    if (e.is_string()) {
      out.push_back(withContext(where, [&] { return parseHomogeneous(e.get<std::string>(), numVars); }));
      continue;
    }
    if (!e.is_array()) schemaError(where + ": expected a polynomial string or span coefficients");
    if (!basis) schemaError(where + ": span coefficients need a basis");
    if (static_cast<int>(e.size()) != basis->numVars()) {
      schemaError(where + ": expected " + std::to_string(basis->numVars()) + " span coefficients");
    }
    std::vector<GaussianRational> coeffs;
    for (std::size_t mu = 0; mu < e.size(); ++mu) {
      std::string at = where + "[" + std::to_string(mu) + "]";
      if (e[mu].is_number_integer()) {
        coeffs.emplace_back(e[mu].get<long>());
      } else if (e[mu].is_string()) {
        coeffs.push_back(withContext(at, [&] { return parseGaussianRational(e[mu].get<std::string>()); }));
      } else {
        schemaError(at + ": expected an integer or a string such as \"1/3\" or \"2+i\"");
      }
    }
    HomogeneousPolynomial sigma = basis->combination(coeffs);
    if (sigma.isZero()) throw Error(ErrorKind::InvalidInput, where + ": all span coefficients vanish");
    out.push_back(std::move(sigma));
  }
  return out;
}

RadiusGrid gridFromJson(const Json& doc) {
  if (!doc.is_object()) schemaError("grid: expected an object");
  double rMin = requireNumber(require(doc, "rMin", "grid"), "grid.rMin");
  double rMax = requireNumber(require(doc, "rMax", "grid"), "grid.rMax");
  int count = requireInt(require(doc, "count", "grid"), "grid.count");
  Spacing spacing = Spacing::Log;
  if (doc.contains("spacing")) {
    const std::string& s = requireString(doc.at("spacing"), "grid.spacing");
    if (s == "linear") {
      spacing = Spacing::Linear;
    } else if (s != "log") {
      schemaError("grid.spacing: expected \"log\" or \"linear\"");
    }
  }
  double outer = std::numeric_limits<double>::infinity();
  if (doc.contains("R") && !doc.at("R").is_null()) outer = requireNumber(doc.at("R"), "grid.R");
  try {
    return RadiusGrid::make(rMin, rMax, count, spacing, outer);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::InvalidInput, std::string("grid: ") + e.what());
  }
}

Scenario scenarioFromJson(Json doc, const std::filesystem::path& baseDir) {
  static const std::set<std::string> known = {"name",    "description", "basis",       "curve",
                                              "curves",  "sigmas",      "grid",        "epsilon",
                                              "growthIndex", "logConstant", "truncation", "synthetic",
                                              "outputs"};
  if (!doc.is_object()) schemaError("scenario: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) schemaError("scenario: unknown field \"" + key + "\"");
  }
  Scenario s;
  if (doc.contains("basis") && doc.at("basis").is_string()) {
    std::filesystem::path p = doc.at("basis").get<std::string>();
    doc["basis"] = readJsonFile(p.is_absolute() ? p : baseDir / p);
  }
  // Output locations do not change results and stay out of the digest.
  doc.erase("outputs");
  s.canonical = doc;
  if (doc.contains("basis")) s.basis = basisFromJson(doc.at("basis"));
  if (doc.contains("curve") && doc.contains("curves")) schemaError("scenario: give either \"curve\" or \"curves\"");
  if (doc.contains("curve")) s.curves.push_back(curveFromJson(doc.at("curve")));
  if (doc.contains("curves")) {
    const Json& cs = doc.at("curves");
    if (!cs.is_array() || cs.empty() || cs.size() > 2) schemaError("scenario.curves: expected one or two curves");
    for (const auto& c : cs) s.curves.push_back(curveFromJson(c));
  }
  int numVars = s.basis ? s.basis->numVars() : (s.curves.empty() ? 0 : s.curves.front().numComponents());
  for (const auto& c : s.curves) {
    if (numVars != c.numComponents()) {
      throw Error(ErrorKind::DegreeMismatch, "curve components do not match the projective dimension");
    }
  }
  if (doc.contains("sigmas")) {
    if (numVars == 0) schemaError("scenario: sigmas need a basis or a curve to fix the number of variables");
    s.sigmas = sigmasFromJson(doc.at("sigmas"), numVars, s.basis ? &*s.basis : nullptr);
  }
  if (doc.contains("grid")) s.grid = gridFromJson(doc.at("grid"));
  if (doc.contains("epsilon")) s.epsilon = requireNumber(doc.at("epsilon"), "epsilon");
  if (doc.contains("growthIndex") && !doc.at("growthIndex").is_null()) {
    s.growthIndex = requireNumber(doc.at("growthIndex"), "growthIndex");
  }
  if (doc.contains("logConstant")) s.logConstant = requireNumber(doc.at("logConstant"), "logConstant");
  if (doc.contains("truncation")) s.truncation = requireInt(doc.at("truncation"), "truncation");
  if (doc.contains("synthetic")) {
    if (!doc.at("synthetic").is_boolean()) schemaError("synthetic: expected true or false");
    s.synthetic = doc.at("synthetic").get<bool>();
  }
  return s;
}

Scenario loadScenario(const std::filesystem::path& path) {
  return scenarioFromJson(readJsonFile(path), path.parent_path());
}

std::string inputDigest(const Json& canonical) {
  std::string text = canonical.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

Json reportHeader(const Json& canonical) {
  return {{"version", kToolVersion}, {"inputDigest", inputDigest(canonical)}};
}

Json connectionReport(const LinearSystemBasis& basis, const ChristoffelTensor& tensor, const EulerReport& euler,
                      bool homogeneous, const std::vector<GeodesicReport>& geodesic) {
  int n = tensor.numVars();
  Json gamma = Json::array();
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const auto& g = tensor(l, i, j);
        if (!g.isZero()) gamma.push_back({{"lambda", l}, {"i", i}, {"j", j}, {"value", g.toString()}});
      }
    }
  }
  Json members = Json::array();
  for (const auto& s : basis.members()) members.push_back(s.toString());
  Json geo = Json::array();
  bool geodesicOk = true;
  for (std::size_t mu = 0; mu < geodesic.size(); ++mu) {
    geo.push_back({{"member", mu}, {"holds", geodesic[mu].holds}});
    geodesicOk = geodesicOk && geodesic[mu].holds;
  }
  PolarLocus polar = polarDegree(tensor);
  return {
      {"k", basis.k()},
      {"d", basis.d()},
      {"S", members},
      {"delta", polar.delta.toString()},
      {"deltaDegree", polar.degree},
      {"polarBound", basis.numVars() * (basis.d() - 1)},
      {"flat", tensor.isFlat()},
      {"gamma", gamma},
      {"checks",
       {{"homogeneity", homogeneous},
        {"euler",
         {{"holds", euler.holds},
          {"worstResidual", euler.worstResidual},
          {"samples", euler.samplesUsed},
          {"rejectedNearPolar", euler.rejectedNearPolar}}},
        {"geodesic", geo}}},
      {"pass", homogeneous && euler.holds && geodesicOk},
  };
}

Json frameJson(const CovariantFrame& frame) {
  Json vectors = Json::array();
  for (const auto& v : frame.vectors) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(c.toString());
    vectors.push_back(row);
  }
  return {{"chart", frame.chart}, {"vectors", vectors}};
}

Json smtReportJson(const SMTReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"r", r.r},
                    {"T", r.T},
                    {"lhs", r.lhs},
                    {"sumNk", r.sumNk},
                    {"errorTerm", r.errorTerm},
                    {"rhs", r.rhs},
                    {"margin", r.margin}});
  }
  return {
      {"k", report.k},
      {"d", report.d},
      {"q", report.q},
      {"chart", report.chart},
      {"coefficient", report.coefficient.get_str()},
      {"verdicts",
       {{"strict", report.strict},
        {"asymptotic", report.asymptotic ? Json(*report.asymptotic) : Json(nullptr)},
        {"fitted", report.fitted},
        {"fittedC", report.fittedC},
        {"overall", report.overall}}},
      {"warnings", report.warnings},
      {"rows", rows},
  };
}

Json sharingBoundJson(const SharingBoundReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"r", r.r}, {"Tf", r.Tf}, {"Tg", r.Tg}, {"NS", r.NS}, {"margin", r.margin}});
  }
  return {{"sharingLocus", report.sharing.locus.toString()},
          {"sharingPoints", report.sharing.points.points.size()},
          {"negativeSpread", report.negativeSpread},
          {"holds", report.holds},
          {"rows", rows}};
}

Json groupsJson(const GroupPartition& groups) {
  Json classes = Json::array();
  for (const auto& c : groups.classes) {
    Json one = Json::array();
    for (int i : c) one.push_back(i + 1);
    classes.push_back(one);
  }
  Json order = Json::array();
  for (int i : groups.order) order.push_back(i + 1);
  Json pairing = Json::array();
  for (int p : groups.pairing) pairing.push_back(p + 1);
  Json aux = Json::array();
  for (const auto& p : groups.auxiliaries) aux.push_back(p.toString());
  return {{"classes", classes},
          {"order", order},
          {"pairing", pairing},
          {"auxiliaries", aux},
          {"classesAtMostK", groups.classesAtMostK},
          {"auxiliariesNonzero", groups.auxiliariesNonzero}};
}

Json harnessJson(const HarnessReport& report) {
  Json out = {{"identical", report.identical},
              {"q", report.q},
              {"threshold", report.threshold.get_str()},
              {"aboveThreshold", report.aboveThreshold},
              {"failed", report.failed},
              {"verdict", report.verdict}};
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"r", r.r},
                    {"sharingMargin", r.sharingMargin},
                    {"smtMarginF", r.smtMarginF},
                    {"smtMarginG", r.smtMarginG},
                    {"dominationMargin", r.dominationMargin},
                    {"contradictionMargin", r.contradictionMargin}});
  }
  out["rows"] = rows;
  if (report.sharingBound) out["sharingBound"] = sharingBoundJson(*report.sharingBound);
  if (report.smtF) out["smtF"] = smtReportJson(*report.smtF);
  if (report.smtG) out["smtG"] = smtReportJson(*report.smtG);
  if (report.groups) out["groups"] = groupsJson(*report.groups);
  return out;
}

Json thresholdJson(const ThresholdTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"name", r.name}, {"bound", r.bound.get_str()}, {"value", r.bound.get_d()}, {"minQ", r.minQ}});
  }
  return {{"k", table.k}, {"d", table.d}, {"c", table.c.get_str()}, {"rows", rows}};
}

Json nevanlinnaJson(const NevanlinnaTable& table, const QuadratureSettings& settings) {
  std::size_t q = table.rows.empty() ? 0 : table.rows.front().residual.size();
  Json spreads = Json::array();
  for (std::size_t j = 0; j < q; ++j) {
    double lo = table.rows.front().residual[j];
    double hi = lo;
    for (const auto& row : table.rows) {
      lo = std::min(lo, row.residual[j]);
      hi = std::max(hi, row.residual[j]);
    }
    spreads.push_back(hi - lo);
  }
  return {{"anchor", table.anchor},
          {"truncation", table.truncation},
          {"quadrature",
           {{"tolerance", settings.tolerance},
            {"initialNodes", settings.initialNodes},
            {"maxNodes", settings.maxNodes}}},
          {"radii", table.rows.size()},
          {"residualSpread", spreads}};
}

std::string csvNumber(double value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

std::string smtCsv(const SMTReport& report) {
  std::ostringstream out;
  out << "r,T_f,lhs,sum_Nk,error_term,rhs,margin\n";
  for (const auto& r : report.rows) {
    out << csvNumber(r.r) << ',' << csvNumber(r.T) << ',' << csvNumber(r.lhs) << ',' << csvNumber(r.sumNk) << ','
        << csvNumber(r.errorTerm) << ',' << csvNumber(r.rhs) << ',' << csvNumber(r.margin) << '\n';
  }
  return out.str();
}

std::string harnessCsv(const HarnessReport& report) {
  std::ostringstream out;
  out << "r,sharing_margin,smt_margin_f,smt_margin_g,domination_margin,contradiction_margin\n";
  for (const auto& r : report.rows) {
    out << csvNumber(r.r) << ',' << csvNumber(r.sharingMargin) << ',' << csvNumber(r.smtMarginF) << ','
        << csvNumber(r.smtMarginG) << ',' << csvNumber(r.dominationMargin) << ',' << csvNumber(r.contradictionMargin)
        << '\n';
  }
  return out.str();
}

std::string thresholdCsv(const ThresholdTable& table) {
  std::ostringstream out;
  out << "name,bound,value,min_q\n";
  for (const auto& r : table.rows) {
    out << r.name << ',' << r.bound.get_str() << ',' << csvNumber(r.bound.get_d()) << ',' << r.minQ << '\n';
  }
  return out.str();
}

std::string nevanlinnaCsv(const NevanlinnaTable& table) {
  std::ostringstream out;
  table.writeCsv(out);
  return out.str();
}

}  // namespace tgc
