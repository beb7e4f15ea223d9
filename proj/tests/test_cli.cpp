#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "clusterkl/cli.hpp"
#include "clusterkl/kl.hpp"

using namespace ckl;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify output") {
  Run r = cli({"classify", "3412"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fully_commutative: true") != std::string::npos);

  Run rj = cli({"classify", "--w", "4231", "--json"});
  CHECK(rj.code == 0);
  json j = json::parse(rj.out);
  CHECK(j["n321"] == 2);
  CHECK(j["maximally_clustered"] == true);
  CHECK(j["freely_braided"] == false);
  CHECK(Permutation(j["w"].get<std::vector<int>>()) == Permutation({4, 2, 3, 1}));
}

TEST_CASE("kl spot outputs and exit codes") {
  Run r = cli({"kl", "--w", "4231", "--x", "1234"});
  CHECK(r.code == 0);
  CHECK(r.out == "P = 1 + q\n");

  Run rboth = cli({"kl", "--w", "4231", "--x", "1234", "--method", "both"});
  CHECK(rboth.code == 0);
  CHECK(rboth.out == "P = 1 + q\n");

  Run rbad = cli({"kl", "--w", "4321", "--x", "1234", "--method", "masks"});
  CHECK(rbad.code == 1);
  CHECK(rbad.err.find("NotMCHexagonAvoiding") != std::string::npos);

  Run rrec = cli({"kl", "--w", "4321", "--x", "1234", "--method", "recursion"});
  CHECK(rrec.code == 0);
  CHECK(rrec.out == "P = 1\n");

  Run rusage = cli({"kl", "--w", "4231", "--method", "bogus"});
  CHECK(rusage.code == 2);
}

TEST_CASE("json errors carry machine-readable codes") {
  Run r = cli({"kl", "--w", "4321", "--x", "1234", "--json"});
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  CHECK(j["error"]["code"] == "NotMCHexagonAvoiding");
}

TEST_CASE("contract json round-trips") {
  Run r = cli({"contract", "--w", "4231", "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  Word word{j["word"].get<std::vector<int>>(), j["rank"].get<int>()};
  ClusterDecomposition d;
  d.word = word;
  for (const auto& c : j["clusters"])
    d.clusters.push_back(ClusterSpan{c["start"].get<int>() - 1,
                                     c["m"].get<int>(), c["k"].get<int>()});
  CHECK(d == contract(Permutation({4, 2, 3, 1})));
  CHECK(verify_decomposition(d).ok);
  // central positions serialize 1-based
  CHECK(j["clusters"][0]["central"] == json({2, 3, 4}));
}

TEST_CASE("kl json round-trips the polynomial") {
  Run r = cli({"kl", "--w", "4231", "--x", "1234", "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  LaurentPoly p;
  for (auto& [exp, coeff] : j["P"]["v_coeffs"].items())
    p.add_term(std::stoi(exp), coeff.get<long long>());
  CHECK(p == LaurentPoly::constant(1) + LaurentPoly::q_power(1));
}

TEST_CASE("masks listing") {
  Run r = cli({"masks", "--w", "321", "--filter", "10star"});
  CHECK(r.code == 0);
  // header plus six masks
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 7);

  Run rbad = cli({"masks", "--word", "1,2,1", "--filter", "10star"});
  CHECK(rbad.code == 1);

  Run rall = cli({"masks", "--word", "1,2,1", "--filter", "all"});
  CHECK(rall.code == 0);
}

TEST_CASE("verify and census") {
  Run r = cli({"verify", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("elements: 21") != std::string::npos);
  CHECK(r.out.find("status: ok") != std::string::npos);

  Run rc = cli({"census", "--n", "4", "--json"});
  CHECK(rc.code == 0);
  json j = json::parse(rc.out);
  bool found = false;
  for (const auto& row : j)
    if (row["label"] == "fully_commutative") {
      CHECK(row["count"] == 14);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("heap command") {
  Run r = cli({"heap", "--word", "1,2,1", "--mask", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find('D') != std::string::npos);  // the zero-defect marker

  Run rbad = cli({"heap", "--word", "1,1"});
  CHECK(rbad.code == 1);

  Run rusage = cli({"heap"});
  CHECK(rusage.code == 2);
}

TEST_CASE("ideal command") {
  Run r = cli({"ideal", "--p", "321", "--cls", "all", "--upper-set"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ideal: ") != std::string::npos);
  CHECK(r.out.find("member: 3,2,1") != std::string::npos);
}

TEST_CASE("deterministic output") {
  Run a = cli({"cbasis", "--w", "321"});
  Run b = cli({"cbasis", "--w", "321"});
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}
