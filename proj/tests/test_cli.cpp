#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cdv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& file, const std::string& text) const {
    std::ofstream(path / file) << text;
    return (path / file).string();
  }
};

const char* s3 = "group S3\norder 6 = 2 * 3\ndegrees 1:2, 2:1\nflags solvable\n";

}  // namespace

TEST_CASE("verify --all passes with ten reports") {
  Run r = cli({"verify", "--all"});
  CHECK(r.code == cdv::cli::exit_ok);
  CHECK(count(r.out, ": PASS") == 10);
  CHECK(r.out.find("10/10 scripts passed") != std::string::npos);
}

TEST_CASE("verify output formats agree on verdicts") {
  Run text = cli({"verify", "--all", "--jobs", "1"});
  Run jsonl = cli({"--format", "jsonl", "verify", "--all"});
  Run csv = cli({"verify", "--all", "--format", "csv"});
  CHECK(text.code == jsonl.code);
  CHECK(csv.code == jsonl.code);

  auto objs = json_lines(jsonl.out);
  std::size_t summaries = 0, assertions = 0, advisory = 0;
  for (const auto& j : objs) {
    if (j["record"] == "summary") {
      ++summaries;
      CHECK(j["passed"] == true);
    } else {
      ++assertions;
      if (j["severity"] == "advisory" && j["verdict"] != "pass") ++advisory;
    }
  }
  CHECK(summaries == 10);
  CHECK(count(csv.out, "\n") == assertions + 1);
  CHECK(csv.out.rfind("socle,H,step,kind,assertion,severity,verdict,witness,label\n", 0) == 0);
  CHECK(count(text.out, "] ") == assertions);
  CHECK(advisory > 0);
}

TEST_CASE("parallel and serial verify produce identical output") {
  CHECK(cli({"verify", "--all", "-j", "1"}).out == cli({"verify", "--all", "-j", "8"}).out);
}

TEST_CASE("verify accepts socle or automorphism group names") {
  CHECK(cli({"verify", "J3"}).code == 0);
  CHECK(cli({"verify", "J3.2"}).code == 0);
  Run bad = cli({"verify", "Co1"});
  CHECK(bad.code == cdv::cli::exit_usage);
  CHECK(bad.err.find("Fi24'") != std::string::npos);
  CHECK(cli({"verify"}).code == cdv::cli::exit_usage);
  CHECK(cli({"verify", "J2", "--all"}).code == cdv::cli::exit_usage);
}

TEST_CASE("tables") {
  Run t1 = cli({"tables", "1"});
  CHECK(t1.code == 0);
  CHECK(t1.out.find("Table 1.") == 0);
  CHECK(t1.out.find("U3(3)") != std::string::npos);
  CHECK(cli({"tables", "2", "--format", "csv"}).out.rfind("H,S\n", 0) == 0);
  CHECK(json_lines(cli({"tables", "3", "--format", "jsonl"}).out).size() >= 8);
  CHECK(cli({"tables", "6"}).code == cdv::cli::exit_usage);
  CHECK(cli({"tables"}).code == cdv::cli::exit_usage);
}

TEST_CASE("analyze and frobenius") {
  Run a = cli({"analyze", "J2.2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("isolated: 90; 160; 175; 225; 300") != std::string::npos);
  CHECK(a.out.find("perfect_powers: 36=6^2; 225=15^2") != std::string::npos);
  CHECK(cli({"analyze", "2.J2", "--format", "jsonl"}).code == 0);
  CHECK(cli({"analyze", "Nope"}).code == cdv::cli::exit_usage);

  CHECK(cli({"frobenius", "J2.2"}).code == 0);
  Run s3r = cli({"frobenius", "S3", "--format", "jsonl"});
  CHECK(s3r.code == cdv::cli::exit_failed);
  auto objs = json_lines(s3r.out);
  REQUIRE(objs.size() == 2);
  CHECK(objs[1]["f"] == "2");
  CHECK(objs[1]["r"] == "3");
  CHECK(objs[1]["a"] == "1");
  CHECK(cli({"frobenius", "Suz.2", "--trace"}).out.find("trace f = ") != std::string::npos);
}

TEST_CASE("corpus-check") {
  Run ok = cli({"corpus-check"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("55 records, all consistent") != std::string::npos);

  TempDir dir("cdv_cli_corpus");
  dir.write("S3.grp", s3);
  CHECK(cli({"corpus-check", "--corpus", dir.path.string()}).code == 0);
  dir.write("T.grp", "group T\norder 6 = 2 * 3\ndegrees 1:2, 2:2\n");
  Run bad = cli({"corpus-check", "--corpus", dir.path.string(), "--format", "csv"});
  CHECK(bad.code == cdv::cli::exit_failed);
  CHECK(bad.out.find("orthogonality violated") != std::string::npos);
  dir.write("U.grp", "group U\norder x\n");
  CHECK(cli({"corpus-check", "--corpus", dir.path.string()}).code == cdv::cli::exit_usage);
}

TEST_CASE("corpus root: flag wins over environment") {
  TempDir dir("cdv_cli_env");
  dir.write("S3.grp", s3);
  ::setenv(cdv::cli::corpus_env, dir.path.c_str(), 1);
  CHECK(cli({"verify", "J2"}).code == cdv::cli::exit_failed);  // J2 records absent
  CHECK(cli({"verify", "J2", "--corpus", CDV_CORPUS_DIR}).code == 0);
  ::setenv(cdv::cli::corpus_env, "/nonexistent/corpus", 1);
  CHECK(cli({"tables", "1"}).code == cdv::cli::exit_usage);
  ::unsetenv(cdv::cli::corpus_env);
  CHECK(cli({"tables", "1"}).code == 0);
}

TEST_CASE("script files") {
  TempDir dir("cdv_cli_script");
  std::string good = dir.write("good.txt", "script J2\nH J2.2\nstep 1 FrobeniusEliminated J2.2\n");
  std::string failing = dir.write("fail.txt", "script J2\nH J2.2\nstep 1 DegreePresent J2.2 29\n");
  std::string broken = dir.write("broken.txt", "script J2\nH J2.2\nstep 1 Bogus J2.2\n");
  CHECK(cli({"script", good}).code == 0);
  CHECK(cli({"script", failing}).code == cdv::cli::exit_failed);
  Run b = cli({"script", broken});
  CHECK(b.code == cdv::cli::exit_usage);
  CHECK(b.err.find("line 3") != std::string::npos);
  CHECK(cli({"script", (dir.path / "missing.txt").string()}).code == cdv::cli::exit_usage);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == cdv::cli::exit_usage);
  CHECK(cli({"frobnicate"}).code == cdv::cli::exit_usage);
  CHECK(cli({"tables", "1", "--bogus"}).code == cdv::cli::exit_usage);
  CHECK(cli({"tables", "1", "--format", "xml"}).code == cdv::cli::exit_usage);
  CHECK(cli({"corpus-check", "tables", "1"}).code == cdv::cli::exit_usage);
  Run h = cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("corpus-check") != std::string::npos);
}
