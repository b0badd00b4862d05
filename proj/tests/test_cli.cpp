#include "doctest.h"

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using hopforbit::cli::Command;
using hopforbit::cli::json;
using hopforbit::cli::run;

namespace {

std::string slurp(const std::string& rel) {
    std::ifstream f(std::string(HOPFORBIT_DATA_DIR) + "/" + rel);
    REQUIRE(f);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Command cmd(const std::string& sub) {
    Command c;
    c.subcommand = sub;
    return c;
}

json results(const hopforbit::cli::Outcome& o) { return json::parse(o.output).at("results"); }

}  // namespace

TEST_CASE("orbit on the Taft plane action") {
    auto o = run(cmd("orbit"), slurp("taft_orbit.json"));
    REQUIRE(o.exit_code == 0);
    auto r = results(o).at("orbits").at(0);
    CHECK(r.at("core") == json::array({"u - 1", "v^2"}));
    CHECK(r.at("orbit_size") == 1);
    CHECK(r.at("frobenius").at("frobenius") == true);
    CHECK(r.at("t_simple").at("t_simple") == true);
    CHECK(r.at("orbitally_semisimple") == false);
    CHECK(r.at("dimension") == 2);
    // the Frobenius witness is serialized in full
    CHECK(r.at("frobenius").at("witness").size() == 2);
    CHECK(r.at("action_matrices").size() == 4);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
    auto a = run(cmd("orbit"), slurp("s3_orbits.json"));
    auto b = run(cmd("orbit"), slurp("s3_orbits.json"));
    CHECK(a.output == b.output);
    CHECK(json::parse(a.output).count("timing") == 0);
    Command par = cmd("orbit");
    par.jobs = 2;
    auto c = run(par, slurp("s3_orbits.json"));
    CHECK(c.output == a.output);
    Command timed = cmd("simples");
    timed.timing = true;
    CHECK(json::parse(run(timed, slurp("dihedral_simples.json")).output).count("timing") == 1);
}

TEST_CASE("simples on the dihedral family") {
    auto o = run(cmd("simples"), slurp("dihedral_simples.json"));
    REQUIRE(o.exit_code == 0);
    auto pts = results(o).at("points");
    CHECK(pts.at(0).at("simple_dims") == json::array({2}));
    CHECK(pts.at(1).at("simple_dims") == json::array({1, 1}));
    CHECK(pts.at(2).at("simple_dims") == json::array({1, 1}));
    CHECK(pts.at(3).at("simple_dims") == json::array({2}));
    CHECK(results(o).at("gamma_order") == 2);
}

TEST_CASE("chain for (<x> x S3) x| C2") {
    auto o = run(cmd("chain"), slurp("chain_z_s3_c2.json"));
    REQUIRE(o.exit_code == 0);
    auto r = results(o);
    CHECK(r.at("P") == json::array({"s - 1"}));
    CHECK(r.at("gamma_order") == 2);
    CHECK(r.at("D_mod_L_rank") == 1);
    for (const auto& inc : r.at("inclusions")) CHECK(inc.at("strict") == true);
    CHECK(r.at("stabilizers").at(1).at("stabilizer_order") == 2);

    auto o2 = run(cmd("chain"), slurp("chain_laurent_squares.json"));
    REQUIRE(o2.exit_code == 0);
    auto r2 = results(o2);
    CHECK(r2.at("gamma_order") == 1);
    CHECK(r2.at("D").at("lattice") == r2.at("H").at("lattice"));
}

TEST_CASE("family and core commands") {
    auto f = run(cmd("family"), slurp("family_taft.json"));
    REQUIRE(f.exit_code == 0);
    CHECK(results(f).at("pass") == true);
    CHECK(results(f).at("dim_hbar") == 9);
    auto c = run(cmd("core"), slurp("taft_core.json"));
    REQUIRE(c.exit_code == 0);
    CHECK(results(c).at("cores").at(0).at("core") == json::array({"u - 2", "v^2"}));
    auto a = run(cmd("orbit"), slurp("dihedral_adjoint_orbit.json"));
    REQUIRE(a.exit_code == 0);
    CHECK(results(a).at("orbits").at(0).at("orbit_size") == 2);
}

TEST_CASE("sweep emits a CSV census determined by the seed") {
    Command s = cmd("sweep");
    s.seed = 7;
    auto a = run(s, slurp("sweep.json"));
    REQUIRE(a.exit_code == 0);
    CHECK(a.output.rfind("family,point,", 0) == 0);
    CHECK(std::count(a.output.begin(), a.output.end(), '\n') == 1 + 4 + 4 + 4 + 2);
    CHECK(a.output == run(s, slurp("sweep.json")).output);
    CHECK(a.output.find(",false,") == std::string::npos);  // no non-semisimple core, no broken chain
}

TEST_CASE("every error path has a fixture") {
    struct Case {
        const char* file;
        const char* sub;
        int code;
        const char* needle;
    };
    for (const Case& c : {Case{"errors/non_rational_point.json", "orbit", 3, "NonRationalPoint"},
                          Case{"errors/degree_bound.json", "orbit", 3, "DegreeBoundExhausted"},
                          Case{"errors/nonsplit_block.json", "simples", 3, "NonSplitBlock"},
                          Case{"errors/corrupted_hopf.json", "orbit", 2, "antipode"},
                          Case{"errors/corrupted_action.json", "orbit", 2, "not a module algebra"},
                          Case{"errors/bad_root_of_unity.json", "orbit", 2, "primitive"},
                          Case{"errors/bad_q_order.json", "family", 2, "q_order"},
                          Case{"errors/missing_field.json", "simples", 2, "coordinates"},
                          Case{"errors/not_json.json", "family", 2, "parse error"}}) {
        INFO(c.file);
        auto o = run(cmd(c.sub), slurp(c.file));
        CHECK(o.exit_code == c.code);
        CHECK(o.output.find(c.needle) != std::string::npos);
    }
    // the core survives a non-rational orbit
    auto o = run(cmd("orbit"), slurp("errors/non_rational_point.json"));
    CHECK(results(o).at("orbits").at(0).at("core") == json::array({"u^3 - 1"}));
}

TEST_CASE("verify runs selected acceptance criteria") {
    auto o = run(cmd("verify"), slurp("verify_quick.json"));
    CHECK(o.exit_code == 0);
    auto r = results(o);
    CHECK(r.at("pass") == true);
    CHECK(r.at("criteria").size() == 3);
}
