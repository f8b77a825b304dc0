#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "thinlie/cli.hpp"
#include "thinlie/io.hpp"

using namespace thinlie;
using io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "thinlie");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmpdir() {
  auto d = std::filesystem::temp_directory_path() / "thinlie_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

std::string write_tmp(const std::string& name, const std::string& text) {
  auto p = tmpdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}


struct EnvGuard {
  explicit EnvGuard(const char* v) { setenv("THINLIE_MAX_DEGREE", v, 1); }
  ~EnvGuard() { unsetenv("THINLIE_MAX_DEGREE"); }
};

}  // namespace

TEST_CASE("build --family a --q 7 --N 60") {
  auto r = run({"build", "--family", "a", "--q", "7", "--N", "60"});
  REQUIRE(r.code == cli::kOk);
  auto j = json::parse(r.out);
  CHECK(j["schema_version"] == io::kSchemaVersion);
  CHECK(j["report"]["passed"] == true);
  CHECK(j["structure"]["p"] == 7);
  CHECK(j["structure"]["q"] == 7);
  CHECK(j["structure"]["N"] == 60);
  CHECK(j["structure"]["components"].size() >= 60);
}

TEST_CASE("diagram --family a --q 7 --N 14") {
  auto r = run({"diagram", "--family", "a", "--q", "7", "--N", "14"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("diamond_1 [shape=diamond, label=\"\"") != std::string::npos);
  CHECK(r.out.find("diamond_7 [shape=diamond, label=\"-1\"") != std::string::npos);
  CHECK(r.out.find("diamond_13 [shape=diamond, label=\"-1\"") != std::string::npos);
  CHECK(r.out.find("diamond_19") == std::string::npos);
  CHECK(r.out == slurp(fixtures::golden("N7_diagram_14.dot")));
  auto t = run({"diagram", "--family", "L1q", "--q", "7", "--N", "30", "--format", "txt"});
  REQUIRE(t.code == cli::kOk);
  CHECK(t.out.find("L_13  dim 1") != std::string::npos);
  CHECK(t.out.find("fake 1") != std::string::npos);
}

TEST_CASE("roundtrip --family uniqueness --q 7 --s 1 --N 200") {
  auto r = run({"roundtrip", "--family", "uniqueness", "--q", "7", "--s", "1", "--N", "200"});
  REQUIRE(r.code == cli::kOk);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  const auto seq = j["extracted_sequence"].get<std::string>();
  CHECK(seq.size() > 20);
  CHECK(seq.substr(0, 13) == "YYYYYYYYYYYYX");
}

TEST_CASE("roundtrip on a non-T(q,2) algebra is a construction error") {
  auto r = run({"roundtrip", "--family", "a", "--N", "60"});
  CHECK(r.code == cli::kConstruction);
  CHECK(json::parse(r.out)["pass"] == false);
}

TEST_CASE("verify exit code is 0 iff every check passes") {
  auto ok = run({"verify", "--family", "uniqueness", "--N", "120"});
  CHECK(ok.code == cli::kOk);
  auto j = json::parse(ok.out);
  CHECK(j["passed"] == true);
  CHECK(j.contains("validation"));
  CHECK(j.contains("lemmas"));
  CHECK(j.contains("derivation"));

  // Finite(2) after the fake1 at 85 is inconsistent
  auto P = family_pattern(fixtures::spec("uniqueness"), 91);
  auto raw = P.entries;
  raw.push_back({92, DiamondType::finite(2)});
  for (int m = 98; m <= 122; m += 6) raw.push_back({m, DiamondType::infinite()});
  auto bad = io::pattern_to_json(normalize(7, 7, raw, 122));
  auto path = write_tmp("bad_pattern.json", bad.dump());
  auto r = run({"verify", "--pattern", path, "--N", "110", "--check", "jacobi"});
  CHECK(r.code == cli::kValidationFailure);
  CHECK(json::parse(r.out)["passed"] == false);

  auto dist = run({"verify", "--family", "L1q", "--N", "80", "--check", "distance"});
  CHECK(dist.code == cli::kOk);
  auto dj = json::parse(dist.out);
  CHECK(dj["lemmas"]["checks"].size() == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"build"}).code == cli::kUsage);
  CHECK(run({"build", "--family", "a", "--bogus"}).code == cli::kUsage);
  CHECK(run({"build", "--family", "a", "--q", "8"}).code == cli::kUsage);
  CHECK(run({"build", "--family", "a", "--q", "7", "--N", "5"}).code == cli::kUsage);
  CHECK(run({"build", "--family", "a", "--p", "4"}).code == cli::kUsage);
  CHECK(run({"verify", "--family", "a", "--check", "everything"}).code == cli::kUsage);
  CHECK(run({"diagram", "--family", "a", "--format", "png"}).code == cli::kUsage);
  CHECK(run({"build", "--family", "nope"}).code == cli::kUsage);
  CHECK(run({"build", "--family", "e", "--r", "7"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("degree budget") {
  {
    EnvGuard g("50");
    auto r = run({"build", "--family", "a", "--N", "60"});
    CHECK(r.code == cli::kBudget);
    CHECK(r.err.find("THINLIE_MAX_DEGREE") != std::string::npos);
  }
  {
    EnvGuard g("abc");
    CHECK(run({"build", "--family", "a", "--N", "20"}).code == cli::kUsage);
  }
  // deflation needs source degree 7 * (N + 2) + 1
  CHECK(run({"deflate", "--family", "a", "--q", "49", "--N", "200"}).code == cli::kBudget);
  EnvGuard g("2000");
  CHECK(run({"build", "--family", "a", "--N", "20"}).code == cli::kOk);
}

TEST_CASE("malformed inputs are construction errors") {
  auto spec = write_tmp("bad_spec.json", R"({"params": {"p": 7}})");
  CHECK(run({"build", "--spec", spec}).code == cli::kConstruction);
  auto notjson = write_tmp("bad.json", "{not json");
  CHECK(run({"build", "--pattern", notjson}).code == cli::kConstruction);
  auto pat = write_tmp("bad_type.json", R"({"p":7,"q":7,"entries":[{"degree":7,"type":"finite:-1"},{"degree":13,"type":"finite:1"}]})");
  CHECK(run({"build", "--pattern", pat, "--N", "20"}).code == cli::kConstruction);
  CHECK(run({"build", "--pattern", (tmpdir() / "missing.json").string()}).code == cli::kConstruction);
}

TEST_CASE("identical jobs give byte-identical artifacts") {
  const std::vector<std::string> job{"build", "--family", "c", "--N", "70"};
  auto a = run(job), b = run(job);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  auto path = (tmpdir() / "c.json").string();
  auto job_out = job;
  job_out.insert(job_out.end(), {"--out", path});
  CHECK(run(job_out).code == cli::kOk);
  CHECK(slurp(path) == a.out);
  CHECK(run({"build", "--family", "c", "--N", "70", "--serial"}).out == a.out);
}

TEST_CASE("inputs: spec, pattern, sequence and structure files") {
  SUBCASE("family spec file") {
    auto s = fixtures::spec("d");
    s.mu = 3;
    auto path = write_tmp("d3.json", io::family_to_json(s).dump());
    auto r = run({"detect", "--spec", path, "--N", "100"});
    REQUIRE(r.code == cli::kOk);
    CHECK(io::pattern_from_json(json::parse(r.out)) == family_pattern(s, 102).truncated(100));
  }
  SUBCASE("sequence file goes through the tensor construction") {
    auto path = write_tmp("seq.json", io::sequence_to_json(7, all_cy(40)).dump());
    auto r = run({"detect", "--sequence", path, "--N", "100"});
    REQUIRE(r.code == cli::kOk);
    CHECK(io::pattern_from_json(json::parse(r.out)) == family_pattern(fixtures::spec("e"), 102).truncated(100));
    auto short_seq = write_tmp("short.json", io::sequence_to_json(7, all_cy(5)).dump());
    CHECK(run({"detect", "--sequence", short_seq, "--N", "100"}).code == cli::kConstruction);
  }
  SUBCASE("structure export feeds verify and detect") {
    auto path = (tmpdir() / "uniq.json").string();
    REQUIRE(run({"export", "--family", "uniqueness", "--N", "100", "--out", path}).code == cli::kOk);
    CHECK(run({"verify", "--structure", path}).code == cli::kOk);
    auto d1 = run({"detect", "--structure", path});
    auto d2 = run({"detect", "--family", "uniqueness", "--N", "100"});
    CHECK(d1.out == d2.out);
    CHECK(run({"detect", "--structure", path, "--N", "150"}).code == cli::kBudget);
  }
  SUBCASE("N(7,7) through --r matches the golden file") {
    auto r = run({"detect", "--family", "a", "--q", "7", "--r", "7", "--N", "100"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out == slurp(fixtures::golden("N77_pattern.json")));
  }
}

TEST_CASE("deflate") {
  auto r = run({"deflate", "--family", "a", "--q", "49", "--N", "40"});
  REQUIRE(r.code == cli::kOk);
  auto j = json::parse(r.out);
  CHECK(j["regular"] == false);
  CHECK(j["report"]["passed"] == true);
  bool fake13 = false;
  for (const auto& e : j["pattern"]["entries"])
    if (e["degree"] == 13) fake13 = e["type"] == "fake1";
  CHECK(fake13);
}

TEST_CASE("JSON round trips") {
  SUBCASE("structure") {
    const auto& L = fixtures::corpus().get("b", 40);
    auto j = io::structure_to_json(L);
    auto L2 = io::structure_from_json(json::parse(j.dump()));
    CHECK(L2.top() == L.top());
    CHECK(L2.basis_size() == L.basis_size());
    for (int i = 0; i < L.basis_size(); ++i) {
      CHECK(L2.basis(i).word == L.basis(i).word);
      for (int k = 1; k < L.top(); ++k) CHECK(L2.ad_matrix('x', k) == L.ad_matrix('x', k));
    }
    CHECK(io::structure_to_json(L2) == j);
  }
  SUBCASE("pattern") {
    auto P = family_pattern(fixtures::spec("L0q"), 60);
    CHECK(io::pattern_from_json(io::pattern_to_json(P)) == P);
    auto j = json::parse(R"({"p":7,"q":7,"entries":[{"degree":7,"type":"finite:-1"},{"degree":13,"type":"finite:-1"}]})");
    auto Q = io::pattern_from_json(j);
    CHECK(Q.horizon == 13 + 5);
    CHECK(Q.at(13)->type == DiamondType::finite(6));
    j["entries"][1]["type"] = "finite:seven";
    CHECK_THROWS_AS(io::pattern_from_json(j), PatternError);
    CHECK_THROWS_AS(io::pattern_from_json(json::parse(R"({"q":7})")), PatternError);
  }
  SUBCASE("sequence and family") {
    auto s = uniqueness_sequence(7, 1, 30);
    auto [p, back] = io::sequence_from_json(io::sequence_to_json(7, s));
    CHECK(p == 7);
    CHECK(back == s);
    auto f = fixtures::spec("tq2");
    f.sequence = s;
    auto g = io::family_from_json(io::family_to_json(f));
    CHECK(g.family == "tq2");
    CHECK(g.sequence == s);
    CHECK(g.q == 7);
  }
}

TEST_CASE("the installed binary behaves like the in-process runner") {
  const char* exe = std::getenv("THINLIE_CLI");
  if (!exe) {
    MESSAGE("THINLIE_CLI not set; skipping subprocess check");
    return;
  }
  auto sh = [&](const std::string& args) {
    std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int status = pclose(p);
    return Run{WEXITSTATUS(status), out, ""};
  };
  auto a = sh("diagram --family a --q 7 --N 14");
  CHECK(a.code == 0);
  CHECK(a.out == run({"diagram", "--family", "a", "--q", "7", "--N", "14"}).out);
  CHECK(sh("build --family a --q 8").code == cli::kUsage);
  CHECK(sh("build --family a --N 20").code == 0);
}
