#include <gtest/gtest.h>
#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = TGC_FIXTURES;

int run(const std::string& args, const fs::path& out = {}) {
  std::string cmd = std::string(TGC_BINARY) + " " + args;
  if (!out.empty()) cmd += " --out " + out.string();
  cmd += " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() / ("tgc_capture_" + std::to_string(::getpid()));
  std::string cmd = std::string(TGC_BINARY) + " " + args + " > " + tmp.string() + " 2>&1";
  if (std::system(cmd.c_str()) == -1) return {};
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(tmp);
  return ss.str();
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = fs::temp_directory_path() / ("tgc_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, ConnectionCommands) {
  EXPECT_EQ(run("connection build " + fixture("flat_basis.json")), 0);
  EXPECT_EQ(run("connection build " + fixture("fermat_k2_d3.json")), 0);
  EXPECT_EQ(run("connection check " + fixture("perturbed_basis.json") + " --sigma 'X0^2 + X0 X1'"), 0);
  EXPECT_EQ(run("connection build " + fixture("duplicate_basis.json")), 2);
  EXPECT_EQ(run("connection build " + fixture("bad_polynomial.json")), 2);
  EXPECT_EQ(run("connection build " + fixture("missing.json")), 2);
}

TEST(Cli, FermatReportHasPolarDegree) {
  std::string out = capture("connection build " + fixture("fermat_k2_d3.json"));
  EXPECT_NE(out.find("27*X0^2 X1^2 X2^2"), std::string::npos) << out.substr(0, 400);
  EXPECT_NE(out.find("\"deltaDegree\": 6"), std::string::npos);
}

TEST(Cli, SmtExitCodes) {
  EXPECT_EQ(run("smt verify " + fixture("cartan.json")), 0);
  EXPECT_EQ(run("smt verify " + fixture("conic_lines.json")), 0);
  EXPECT_EQ(run("smt verify " + fixture("below_margin.json")), 0);
  EXPECT_EQ(run("smt verify " + fixture("far_roots.json")), 1);
  EXPECT_EQ(run("smt verify " + fixture("degenerate.json")), 2);
  EXPECT_EQ(run("smt verify " + fixture("malformed.json")), 2);
}

TEST(Cli, BelowMarginNote) {
  std::string out = capture("smt verify " + fixture("below_margin.json"));
  EXPECT_NE(out.find("holds trivially"), std::string::npos);
}

TEST(Cli, ParseErrorsCarryPosition) {
  std::string out = capture("smt verify " + fixture("malformed.json"));
  EXPECT_NE(out.find("line 3"), std::string::npos) << out;
  EXPECT_NE(out.find("column"), std::string::npos) << out;
}

TEST(Cli, UniquenessExitCodes) {
  EXPECT_EQ(run("uniqueness run " + fixture("sharing_pair.json")), 0);
  EXPECT_EQ(run("uniqueness run " + fixture("synthetic_pair.json")), 1);
  EXPECT_EQ(run("uniqueness run " + fixture("identical_pair.json")), 2);
  EXPECT_EQ(run("uniqueness run " + fixture("unshared_pair.json")), 2);
  EXPECT_EQ(run("uniqueness run " + fixture("cartan.json")), 2);
}

TEST(Cli, Thresholds) {
  std::string csv = capture("thresholds --k 1 --d 1 --c 0 --format csv");
  EXPECT_NE(csv.find("entire (ii),4,4,5"), std::string::npos) << csv;
  EXPECT_NE(csv.find("Chen-Yan,4,4,5"), std::string::npos);
  EXPECT_NE(csv.find("Dulock-Ru,37/2,18.5,19"), std::string::npos);
  std::string two = capture("thresholds --k 2 --d 2 --c 0 --format csv");
  EXPECT_NE(two.find("entire (i),5,5,6"), std::string::npos) << two;
  EXPECT_EQ(run("thresholds --k 0 --d 1"), 2);
  EXPECT_EQ(run("thresholds --k 1"), 2);
  EXPECT_EQ(run("thresholds --k 1 --d 1 --c -1"), 2);
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("nonsense"), 2);
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::vector<std::string> commands{
      "connection build " + fixture("perturbed_basis.json"),
      "curve wronskian " + fixture("conic_lines.json"),
      "nevanlinna eval " + fixture("nevanlinna.json"),
      "smt verify " + fixture("cartan.json"),
      "smt verify " + fixture("far_roots.json"),
      "uniqueness run " + fixture("sharing_pair.json"),
      "thresholds --k 3 --d 2 --c 0.5",
  };
  for (const auto& cmd : commands) {
    TempDir a("det_a");
    TempDir b("det_b");
    int first = run(cmd + " --format both", a.path());
    int second = run(cmd + " --format both", b.path());
    EXPECT_EQ(first, second) << cmd;
    int files = 0;
    for (const auto& entry : fs::directory_iterator(a.path())) {
      fs::path twin = b.path() / entry.path().filename();
      ASSERT_TRUE(fs::exists(twin)) << cmd << " " << twin;
      EXPECT_EQ(slurp(entry.path()), slurp(twin)) << cmd << " " << entry.path().filename();
      ++files;
    }
    EXPECT_GE(files, 1) << cmd;
  }
}
