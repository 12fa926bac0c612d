#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "kemeny/cli.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/graph6.hpp"

using namespace kemeny;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args, const cli::RunHooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = cli::run_command_line(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generator specs") {
    CHECK(cli::parse_graph_spec("complete:5") == gen_complete(5));
    CHECK(cli::parse_graph_spec("bipartite:2,3") == gen_complete_bipartite(2, 3));
    CHECK(cli::parse_graph_spec("barbell:2,15,15") == gen_cycle_barbell({2, 15, 15}));
    CHECK(cli::parse_graph_spec("necklace:3") == gen_necklace(3));
    CHECK(cli::parse_graph_spec("petersen") == gen_petersen());
    CHECK(cli::parse_graph_spec("C~") == gen_complete(4));
    CHECK(cli::parse_graph_spec("random-regular:10,3,4").order() == 10);
    CHECK_THROWS_AS(cli::parse_graph_spec("wheel:5"), ValidationError);
    CHECK_THROWS_AS(cli::parse_graph_spec("complete:x"), ValidationError);
    CHECK_THROWS_AS(cli::parse_graph_spec("barbell:2,3"), ValidationError);
    CHECK_THROWS_AS(cli::parse_graph_spec("petersen:1"), ValidationError);
  }

  TEST_CASE("compute prints the report") {
    const Result r = invoke({"compute", "barbell:3,4,6"});
    CHECK(r.code == cli::exit_code::ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["k_nb"] == "88/3");
    CHECK(j["passed"] == true);

    const Result csv = invoke({"--output", "csv", "compute", "complete:4", "petersen"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("graph6,n,m,k_vertex,k_edge,k_nb,identity_residual,passed\nC~,4,6,9/4,41/4,133/12,", 0) == 0);
  }

  TEST_CASE("validation failures exit with 1 and one line") {
    const Result cycle = invoke({"compute", "cycle:5"});
    CHECK(cycle.code == cli::exit_code::validation);
    CHECK(cycle.err.find("reducible") != std::string::npos);
    CHECK(std::count(cycle.err.begin(), cycle.err.end(), '\n') == 1);

    CHECK(invoke({"compute", "path:4"}).code == 1);
    CHECK(invoke({"--no-nb", "compute", "path:4"}).code == 1);  // flag belongs to the subcommand
    CHECK(invoke({"compute", "--no-nb", "path:4"}).code == 0);
    CHECK(invoke({"compute", "--no-nb", "A_"}).code == 0);
    CHECK(invoke({"compute", "~~~"}).code == 1);
    CHECK(invoke({"compute", "wheel:4"}).code == 1);
    CHECK(invoke({"--tol", "0", "compute", "complete:4"}).code == 1);
    CHECK(invoke({"--mode", "exact", "--cap", "10", "compute", "petersen"}).err.find("exact mode refused") !=
          std::string::npos);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({}).code == 1);
  }

  TEST_CASE("corrupted matrices exit with 2") {
    cli::RunHooks hooks;
    hooks.matrix_hook = [](ChainMatrix& p) {
      if (p.kind() == ChainKind::non_backtracking) p.set_entry(0, 1, p.exact()(0, 1) + make_rational(1, 7));
    };
    const Result r = invoke({"compute", "complete:4"}, hooks);
    CHECK(r.code == cli::exit_code::cross_check);
    CHECK(nlohmann::json::parse(r.out)["passed"] == false);
  }

  TEST_CASE("matrices") {
    const Result r = invoke({"matrices", "path:3", "--kind", "P"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1,0\n1/2,0,1/2\n0,1,0\n");
    const Result tau = invoke({"matrices", "path:2", "--kind", "tau"});
    CHECK(tau.out == "0,1\n1,0\n");
    const Result j = invoke({"--output", "json", "matrices", "complete:3", "--kind", "A"});
    CHECK(nlohmann::json::parse(j.out)["entries"][0][1] == "1");
    CHECK(invoke({"matrices", "path:3", "--kind", "Pnb"}).code == 1);
  }

  TEST_CASE("closed forms") {
    const auto necklace = nlohmann::json::parse(invoke({"closed-form", "necklace", "10"}).out);
    CHECK(necklace["k_nb"] == "156/5");
    const auto regular = nlohmann::json::parse(invoke({"closed-form", "regular", "petersen"}).out);
    CHECK(regular["k_e"] == "299/10");
    CHECK(regular["k_nb"] == "829/30");
    const auto bm = nlohmann::json::parse(invoke({"closed-form", "barbell", "1,3,3"}).out);
    CHECK(bm["k_nb"].is_null());
    const auto argmax = nlohmann::json::parse(invoke({"closed-form", "barbell-argmax", "30", "edge"}).out);
    CHECK(argmax["value"] == "63371/186");
    CHECK(argmax["maximizers"][0]["k"] == 26);
    CHECK(argmax["matches_formula"] == true);
    const Result csv = invoke({"--output", "csv", "closed-form", "barbell-nb-max", "30"});
    CHECK(csv.out.find("value,5161/62\n") != std::string::npos);
    CHECK(invoke({"closed-form", "regular", "bipartite:2,3"}).code == 1);
    CHECK(invoke({"closed-form", "zeta", "3"}).code == 1);
  }

  TEST_CASE("sweep and census") {
    const Result s = invoke({"sweep", "--n", "30"});
    CHECK(s.code == 0);
    CHECK(s.out.find("26,3,3,63371/186,") != std::string::npos);
    const auto census = nlohmann::json::parse(invoke({"census", "--n", "6"}).out);
    CHECK(census["count_nb_ge_e"] == 18);

    std::istringstream in(to_graph6(gen_complete(4)) + "\n" + to_graph6(gen_petersen()) + "\n");
    cli::RunHooks hooks;
    hooks.stdin_stream = &in;
    const auto piped = nlohmann::json::parse(invoke({"--input", "-", "census"}, hooks).out);
    CHECK(piped["total"] == 2);
    CHECK(piped["count_nb_ge_e"] == 1);
    CHECK(invoke({"census"}).code == 1);
    CHECK(invoke({"census", "--n", "12"}).code == 1);
  }

  TEST_CASE("generate") {
    CHECK(invoke({"generate", "complete:4"}).out == "C~\n");
    const Result fam = invoke({"generate", "census:4"});
    CHECK(std::count(fam.out.begin(), fam.out.end(), '\n') == 2);
    const Result all = invoke({"generate", "connected:5"});
    CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 21);
  }

  TEST_CASE("identical invocations give identical bytes") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"compute", "necklace:2"}, {"--output", "csv", "census", "--n", "6"},
          {"sweep", "--n", "20", "--general"}, {"closed-form", "biregular", "linked-squares"}}) {
      const Result a = invoke(args), b = invoke(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("help") {
    const Result h = invoke({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("compute") != std::string::npos);
  }
}
