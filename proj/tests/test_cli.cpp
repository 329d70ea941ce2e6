#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sppq/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = sppq::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
  std::ifstream in(fs::path(SPPQ_GOLDEN_DIR) / name);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("spin json matches golden") {
  const Run r = run({"spin", "--weight", "2,0,0|7,6,6,6,6"});
  CHECK(r.code == sppq::cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc == golden("spin_kappa.json"));
  for (const char* key : {"p", "q", "weight", "result", "version"}) CHECK(doc.contains(key));
  CHECK(doc.size() == 5);
}

TEST_CASE("omega json and table") {
  const Run j = run({"omega", "--p", "2", "--q", "2", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(json::parse(j.out) == golden("omega_2_2.json"));

  const Run t = run({"omega", "--p", "3", "--q", "5", "--index", "35"});
  CHECK(t.code == 0);
  CHECK(t.out == "35: 4,0,0 | 3,2,2,2,2\n");

  const Run all = run({"omega", "--p", "1", "--q", "1"});
  CHECK(all.out == "0: 1 | 0\n1: 0 | 1\n");
}

TEST_CASE("deficient json matches golden") {
  const Run r = run({"deficient", "--weight", "2,0,0|7,6,6,6,6"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc == golden("deficient_kappa.json"));
  CHECK(doc["result"]["region"] == "LargeB");
  bool has35 = false;
  for (const auto& prof : doc["result"]["profiles"]) {
    if (prof["ell"] == 35) {
      has35 = true;
      CHECK(prof["k_value_sq"] == 285);
      CHECK(prof["k_value_sq_minus_beta"] == 287);
      CHECK(prof["delta_formula"] == 2);
    }
  }
  CHECK(has35);
}

TEST_CASE("spin extras") {
  const Run r = run({"spin", "--weight", "2|1", "--all", "--sqrt"});
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["spin_norm_sq"] == 8);
  CHECK(doc["result"]["spin_norm"] == "2.828427");
  CHECK(doc["result"]["k_values"] == json::array({8, 10}));

  const Run t = run({"spin", "--weight", "2|1", "--format", "table"});
  CHECK(t.out.find("spin_norm_sq: 8\n") != std::string::npos);
  CHECK(t.out.find("argmin: 0\n") != std::string::npos);
}

TEST_CASE("usmall") {
  const Run r = run({"usmall", "--weight", "3|3,0,0", "--oracle"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["u_small"] == false);
  CHECK(doc["result"]["agree"] == true);
  CHECK(doc["result"]["witness"]["g"] == 1);

  const Run s = run({"usmall", "--weight", "0|0"});
  CHECK(json::parse(s.out)["result"]["witness"].is_null());
}

TEST_CASE("pencil") {
  const Run r = run({"pencil", "--weight", "0|0", "--steps", "3"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["first_u_large"] == 2);
  REQUIRE(doc["result"]["rows"].size() == 4);
  CHECK(doc["result"]["rows"][2]["u_small"] == false);
  CHECK(doc["result"]["rows"][2]["weight"] == "2|2");

  const Run c = run({"pencil", "--weight", "0|0", "--steps", "1", "--format", "csv"});
  CHECK(c.out == "m,weight,u_small,spin_norm_sq\n0,\"0|0\",true,5\n1,\"1|1\",true,5\n");
}

TEST_CASE("verify text") {
  const Run r = run({"verify", "theorem", "--p", "1", "--q", "1", "--cap", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("verified: theorem p=1 q=1 cap=4, 25 of 25 weights scanned, 0 counterexamples", 0) == 0);
  CHECK(r.out.find("  spin-strictly-decreases-by-beta: 15 checked, 0 violations\n") != std::string::npos);

  const Run j = run({"verify", "boundary", "--p", "1", "--q", "2", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(json::parse(j.out)["verdict"] == "verified");
}

TEST_CASE("verify interrupt and resume through the CLI") {
  const fs::path dir = fs::temp_directory_path() / "sppq-test-cli";
  fs::create_directories(dir);
  const std::string file = (dir / "ck.json").string();
  fs::remove(file);
  const Run a = run({"verify", "theorem", "--p", "1", "--q", "2", "--checkpoint", file,
                     "--checkpoint-every", "50", "--stop-after", "50"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("incomplete:", 0) == 0);
  CHECK(a.out.find("resume from weight 50") != std::string::npos);
  const Run b = run({"verify", "theorem", "--p", "1", "--q", "2", "--checkpoint", file, "--resume"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("verified:", 0) == 0);
}

TEST_CASE("stdin mode") {
  const Run r = run({"spin", "--weight", "-"}, "# comment\n2|1\n\n1|0  # trailing\n");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<json> docs;
  while (std::getline(lines, line)) docs.push_back(json::parse(line));
  REQUIRE(docs.size() == 2);
  CHECK(docs[0]["result"]["spin_norm_sq"] == 8);
  CHECK(docs[1]["result"]["spin_norm_sq"] == 2);

  const Run bad = run({"spin", "--weight", "-"}, "2|1\nnonsense\n");
  CHECK(bad.code == sppq::cli::kExitUsage);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"spin", "--weight", "1,2|3"},
           {"spin", "--weight", "abc"},
           {"spin", "--weight", "1,0|2"},
           {"omega", "--p", "3", "--q", "2"},
           {"omega", "--p", "1", "--q", "1", "--index", "2"},
           {"omega", "--p", "1", "--q", "1", "--format", "xml"},
           {"verify", "theorem", "--p", "2"},
           {"verify", "theorem", "--p", "1", "--q", "1", "--resume"},
           {"pencil", "--weight", "0|0", "--steps", "-1"},
           {"frobnicate"},
           {}}) {
    const Run r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == sppq::cli::kExitUsage);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(r.out.empty());
  }
}
