#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tgc/connection.hpp"
#include "tgc/curve.hpp"
#include "tgc/nevanlinna.hpp"
#include "tgc/theorems.hpp"

namespace tgc {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Throws ParseError carrying the line and column of malformed JSON.
Json parseJson(const std::string& text);
Json readJsonFile(const std::filesystem::path& path);

/// {"S": [poly, ...], "k": optional, "d": optional} or {"fermat": {"k": .., "d": ..}}.
LinearSystemBasis basisFromJson(const Json& doc);
/// {"components": [unipoly, ...]}.
ProjectiveCurve curveFromJson(const Json& doc);
/// Each entry is a polynomial string in numVars variables or an array of k+1
/// span coefficients (integers or Gaussian-rational strings) over the basis
/// members; the latter needs a basis.
std::vector<HomogeneousPolynomial> sigmasFromJson(const Json& doc, int numVars, const LinearSystemBasis* basis);
/// {"rMin", "rMax", "count", "spacing": "log"|"linear", "R": optional}.
RadiusGrid gridFromJson(const Json& doc);

struct Scenario {
  /// Canonical form with referenced files inlined; hashed for the digest.
  Json canonical;
  std::optional<LinearSystemBasis> basis;
  std::vector<ProjectiveCurve> curves;
  std::vector<HomogeneousPolynomial> sigmas;
  std::optional<RadiusGrid> grid;
  std::optional<double> epsilon;
  std::optional<double> growthIndex;
  double logConstant = 0.0;
  std::optional<int> truncation;
  bool synthetic = false;
};

/// A string "basis" is resolved relative to the scenario file.
Scenario loadScenario(const std::filesystem::path& path);
Scenario scenarioFromJson(Json doc, const std::filesystem::path& baseDir);

/// Hex SHA-256 of the canonical JSON dump.
std::string inputDigest(const Json& canonical);

/// "version" and "inputDigest" fields shared by every report.
Json reportHeader(const Json& canonical);

Json connectionReport(const LinearSystemBasis& basis, const ChristoffelTensor& tensor, const EulerReport& euler,
                      bool homogeneous, const std::vector<GeodesicReport>& geodesic);
Json frameJson(const CovariantFrame& frame);
Json smtReportJson(const SMTReport& report);
Json sharingBoundJson(const SharingBoundReport& report);
Json groupsJson(const GroupPartition& groups);
Json harnessJson(const HarnessReport& report);
Json thresholdJson(const ThresholdTable& table);
Json nevanlinnaJson(const NevanlinnaTable& table, const QuadratureSettings& settings);

std::string smtCsv(const SMTReport& report);
std::string harnessCsv(const HarnessReport& report);
std::string thresholdCsv(const ThresholdTable& table);
std::string nevanlinnaCsv(const NevanlinnaTable& table);

/// Fixed 12-significant-digit rendering used in CSV cells.
std::string csvNumber(double value);

}  // namespace tgc
