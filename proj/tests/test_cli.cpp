#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "brieskorn/cli.hpp"

using doctest::Contains;
using ojson = nlohmann::ordered_json;

namespace {

struct RunResult {
    int rc;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = brieskorn::cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

ojson parsed(const RunResult& r) {
    REQUIRE(r.rc == 0);
    return ojson::parse(r.out);
}

}  // namespace

TEST_CASE("help exits zero") {
    RunResult top = run({"--help"});
    CHECK(top.rc == 0);
    CHECK_MESSAGE(top.out.find("Subcommands") != std::string::npos, top.out);
    RunResult sub = run({"homology", "--help"});
    CHECK(sub.rc == 0);
    CHECK(sub.out.find("exponents") != std::string::npos);
}

TEST_CASE("unknown subcommand and missing arguments fail") {
    CHECK(run({"frobnicate"}).rc == 1);
    CHECK(run({}).rc == 1);
    CHECK(run({"homology"}).rc == 1);
    // --window is required for ss.
    CHECK(run({"ss", "2", "3", "5"}).rc == 1);
}

TEST_CASE("homology text output") {
    RunResult r = run({"homology", "2", "3", "5"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("Sigma(2,3,5)  dim 3  mu = 8") != std::string::npos);
    CHECK(r.out.find("H_1 = 0") != std::string::npos);
    CHECK(r.out.find("agrees") != std::string::npos);

    RunResult tor = run({"homology", "5", "3", "3", "3"});
    CHECK(tor.rc == 0);
    CHECK(tor.out.find("Z/5 + Z/5") != std::string::npos);
}

TEST_CASE("validation errors exit 1 with a message on stderr") {
    RunResult r = run({"homology", "0", "2", "3"});
    CHECK(r.rc == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") != std::string::npos);

    RunResult mec = run({"mec", "4", "4", "4", "4"});
    CHECK(mec.rc == 1);
    CHECK(mec.err.find("undefined") != std::string::npos);

    RunResult ss = run({"ss", "4", "4", "4", "4", "--window", "8"});
    CHECK(ss.rc == 1);
    CHECK(ss.err.find("unbounded") != std::string::npos);

    RunResult bad = run({"realize-mec", "1/0"});
    CHECK(bad.rc == 1);

    RunResult win = run({"ss", "2", "3", "5", "--window", "-1"});
    CHECK(win.rc == 1);
}

TEST_CASE("consistency errors exit 2") {
    RunResult r = run({"classical", "2", "2", "2", "3", "5"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("consistency error:") != std::string::npos);
    CHECK(r.err.find("(2,2,2,3,5)") != std::string::npos);
}

TEST_CASE("json output is schema tagged and round trips byte for byte") {
    std::vector<std::vector<std::string>> cases = {
        {"homology", "2", "3", "5", "--json"},
        {"homology", "5", "3", "3", "3", "--json"},
        {"equivariant", "4", "4", "--json"},
        {"alexander", "2", "3", "--json"},
        {"sphere", "3", "2", "2", "2", "2", "2", "--json"},
        {"classical", "3", "5", "2", "2", "2", "2", "--json"},
        {"recognize", "2", "3", "5", "--json"},
        {"ss", "4", "2", "2", "2", "--window", "12", "--json"},
        {"mec", "2", "2", "3", "5", "--json"},
        {"mec-sum", "2 2 3 5; -1/2; 19 2 2 2", "--json"},
        {"realize-mec", "22/7", "--json"},
        {"realize-spin5", "--rank", "2", "--torsion", "9,4", "--json"},
    };
    for (const auto& args : cases) {
        CAPTURE(args[0]);
        RunResult r = run(args);
        REQUIRE(r.rc == 0);
        ojson j = ojson::parse(r.out);
        CHECK(j["schema_version"] == "1");
        CHECK(j["command"] == args[0]);
        CHECK(j.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("json flag may precede the subcommand") {
    RunResult a = run({"--json", "homology", "2", "3", "5"});
    RunResult b = run({"homology", "2", "3", "5", "--json"});
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("homology json fields") {
    ojson j = parsed(run({"homology", "5", "3", "3", "3", "--json"}));
    CHECK(j["dimension"] == "5");
    CHECK(j["mu"] == "32");
    CHECK(j["kappa"] == "0");
    ojson h2 = j["h"]["2"];
    CHECK(h2["free_rank"] == "0");
    CHECK(h2["torsion"] == ojson::array({"5", "5"}));
    CHECK(h2["pretty"] == "Z/5 + Z/5");

    ojson low = parsed(run({"homology", "2", "3", "5", "--json"}));
    CHECK(low["oracle_agrees"] == true);
    CHECK(low["smith_oracle"]["pretty"] == "0");
}

TEST_CASE("alexander json fields for the trefoil") {
    ojson j = parsed(run({"alexander", "2", "3", "--json"}));
    CHECK(j["mu"] == "2");
    CHECK(j["delta"]["degree"] == "2");
    CHECK(j["delta"]["coefficients"] == ojson::array({"1", "-1", "1"}));
    CHECK(j["kappa"] == "0");
    CHECK(j["delta_at_minus_one"]["abs"] == "3");
    CHECK(j["delta_at_minus_one"]["odd"] == true);
    CHECK(j["delta_at_minus_one"]["residue_mod_8"] == "3");
}

TEST_CASE("sphere json fields") {
    ojson k = parsed(run({"sphere", "3", "2", "2", "2", "2", "2", "--json"}));
    CHECK(k["homeomorphic_sphere"] == true);
    CHECK(k["smooth_class"] == "kervaire");
    CHECK(k["det_abs"] == "3");

    ojson std_sphere = parsed(run({"sphere", "3", "2", "2", "2", "--json"}));
    CHECK(std_sphere["homeomorphic_sphere"] == true);
    CHECK(std_sphere["smooth_class"] == "standard");

    ojson not_sphere = parsed(run({"sphere", "5", "3", "3", "3", "--json"}));
    CHECK(not_sphere["homeomorphic_sphere"] == false);
}

TEST_CASE("ss json structure") {
    ojson j = parsed(run({"ss", "4", "2", "2", "2", "--window", "12", "--json"}));
    CHECK(j["theory"] == "sh+");
    CHECK(j["mu_principal"] == "6");
    CHECK(j["truncated"] == false);
    CHECK(j["degeneration"] == "degenerate");
    CHECK(j["columns"]["2"] == ojson({{"2", "1"}, {"4", "1"}}));
    CHECK(j["columns"]["4"] == ojson({{"4", "1"}, {"6", "2"}, {"8", "1"}}));
    CHECK(j["betti"]["2"] == "1");
    CHECK(j["betti"]["4"] == "2");

    ojson cut = parsed(run({"ss", "4", "4", "4", "4", "--window", "8", "--cutoff", "8", "--json"}));
    CHECK(cut["truncated"] == true);
    CHECK(cut["unbounded"] == true);
    CHECK(cut["columns"]["4"] == ojson({{"-2", "1"}, {"0", "22"}, {"2", "1"}}));
    CHECK(cut["totals_at_cutoff"] == ojson({{"-2", "2"}, {"0", "44"}, {"2", "2"}}));
}

TEST_CASE("mec json fields") {
    ojson j = parsed(run({"mec", "2", "2", "3", "5", "--json"}));
    CHECK(j["mec"] == "1");
    CHECK(j["mu_principal"] == "32");
    CHECK(j["stratum_table"].size() == 5);
    CHECK(j["stratum_table"][0]["period"] == "2");
    CHECK(j["stratum_table"][0]["phi"] == "8");
    CHECK(j["sh_nonvanishing"]["nonvanishing"] == true);
    CHECK(j["invariance"] == "contact invariant");

    ojson cop = parsed(run({"mec", "2", "3", "5", "--json"}));
    CHECK(cop["mec"] == "-9/2");
    CHECK(cop["coprime_form"] == "-9/2");
    CHECK(cop["sh_nonvanishing"]["nonvanishing"] == false);
}

TEST_CASE("mec-sum quoted and tokenized forms agree") {
    RunResult quoted = run({"mec-sum", "2 2 3 5; -1/2; 19 2 2 2"});
    RunResult tokens = run({"mec-sum", "2", "2", "3", "5", ";", "-1/2", ";", "19", "2", "2", "2"});
    CHECK(quoted.rc == 0);
    CHECK(quoted.out == tokens.out);
    CHECK(quoted.out.find("mec = 3/7") != std::string::npos);

    ojson j = parsed(run({"mec-sum", "2 2 3 5; -1/2; 19 2 2 2", "--json"}));
    CHECK(j["mec"] == "3/7");
    CHECK(j["parts"].size() == 3);
    CHECK(j["parts"][1]["value"] == "-1/2");

    RunResult lone = run({"mec-sum", "5/3", "--n", "4"});
    CHECK(lone.rc == 0);
    CHECK(lone.out.find("mec = 5/3") != std::string::npos);
}

TEST_CASE("realize commands") {
    RunResult r = run({"realize-mec", "22/7"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("verified") != std::string::npos);

    ojson j = parsed(run({"realize-mec", "22/7", "--json"}));
    CHECK(j["mec"] == "22/7");
    CHECK(j["total_summands"] == "6");

    RunResult spin = run({"realize-spin5", "--rank", "2", "--torsion", "9,4"});
    CHECK(spin.rc == 0);
    CHECK(spin.out.find("(2,2,2,2)") != std::string::npos);
    CHECK(spin.out.find("(9,4,4,2)") != std::string::npos);
    CHECK(spin.out.find("(4,3,3,3)") != std::string::npos);

    RunResult bad = run({"realize-spin5", "--rank", "0", "--torsion", "6"});
    CHECK(bad.rc == 1);
}

TEST_CASE("sweep over a corpus file") {
    std::string path = "cli_sweep_corpus.txt";
    {
        std::ofstream f(path);
        f << "# tiny corpus\n2 3 5\n2 2 3 5\n3 2 2 2\n";
    }
    RunResult r = run({"sweep", "--corpus", path, "--check", "all"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("3 entries, 3 clean, 0 with failures") != std::string::npos);
    CHECK(r.out.find("(2,3,5)") != std::string::npos);
    CHECK(r.out.find("randell=ok") != std::string::npos);

    RunResult sel = run({"sweep", "--corpus", path, "--check", "randell,coprime"});
    CHECK(sel.rc == 0);
    CHECK(sel.out.find("alexander") == std::string::npos);

    RunResult bad = run({"sweep", "--corpus", path, "--check", "bogus"});
    CHECK(bad.rc == 1);
    CHECK(bad.err.find("unknown check") != std::string::npos);

    RunResult missing = run({"sweep", "--corpus", "no_such_file.txt", "--check", "randell"});
    CHECK(missing.rc == 1);
    std::remove(path.c_str());
}

TEST_CASE("equivariant json fields") {
    ojson j = parsed(run({"equivariant", "4", "4", "--json"}));
    CHECK(j["equivariant_ranks"] == ojson({{"0", "4"}}));
    CHECK(j["rational_ranks"] == ojson({{"0", "4"}, {"1", "4"}}));

    ojson big = parsed(run({"equivariant", "4", "4", "4", "4", "--json"}));
    CHECK(big["equivariant_ranks"] == ojson({{"0", "1"}, {"2", "22"}, {"4", "1"}}));
}

TEST_CASE("classical json fields") {
    ojson j = parsed(run({"classical", "3", "5", "2", "2", "2", "2", "--json"}));
    CHECK(j["value"] == "4");
    CHECK(j["scope_warning"] == false);
    CHECK(j["massey_group"] == "Z/24");

    ojson warn = parsed(run({"classical", "3", "3", "2", "2", "--json"}));
    CHECK(warn["scope_warning"] == true);
    CHECK(warn["massey_group"] == "0");
}
