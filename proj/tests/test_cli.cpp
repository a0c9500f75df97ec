#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ipoly/cli.hpp"
#include "ipoly/families.hpp"
#include "ipoly/regions.hpp"
#include "ipoly/serial.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace ipoly;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits exact coefficient strings") {
    auto r = run({"gen", "bcd", "--n", "2", "--m", "1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["coeffs"] == json::array({"3", "3", "1"}));

    r = run({"gen", "legendre", "--n", "2"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["coeffs"] == json::array({"-1/3", "0", "1"}));

    r = run({"gen", "bcd", "--n", "3", "--m", "0"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["coeffs"] == json::array({"1", "3", "3", "1"}));
}

TEST_CASE("gen output round-trips to the exact polynomial") {
    auto r = run({"gen", "ultra", "--n", "7", "--alpha", "2"});
    REQUIRE(r.code == 0);
    RatPoly back = serial::coeffs_from_json(json::parse(r.out)["coeffs"]);
    CHECK(back == ultra_monic(7, 2));

    auto rc = run({"--format", "csv", "gen", "ultra", "--n", "7", "--alpha", "2"});
    REQUIRE(rc.code == 0);
    CHECK(serial::coeffs_from_csv(rc.out) == ultra_monic(7, 2));
}

TEST_CASE("integrate applies the m-fold integral with an exact base point") {
    auto r = run({"integrate", "chebyshev", "--n", "4", "--iterate", "2", "--lambda", "0+1/2i"});
    REQUIRE(r.code == 0);
    RatPoly back = serial::coeffs_from_json(json::parse(r.out)["coeffs"]);
    CHECK(back ==
          iterated_integral(chebyshev_monic(4), 2, GaussRat(mpq_class(0), mpq_class(1, 2))));
}

TEST_CASE("zeros: JSON and CSV encodings carry identical values") {
    std::vector<std::string> base = {"zeros", "bcd", "--n", "10..12", "--m-rule", "n"};
    auto rj = run(base);
    REQUIRE(rj.code == 0);
    std::vector<std::string> csv_args = {"--format", "csv"};
    csv_args.insert(csv_args.end(), base.begin(), base.end());
    auto rc = run(csv_args);
    REQUIRE(rc.code == 0);

    auto recs_j = serial::zeros_from_json(json::parse(rj.out)["records"], 256);
    auto recs_c = serial::zeros_from_csv(rc.out, 256);
    REQUIRE(recs_j.size() == 3);
    REQUIRE(recs_c.size() == 3);
    for (std::size_t i = 0; i < recs_j.size(); ++i) {
        CHECK(recs_j[i].n == recs_c[i].n);
        CHECK(recs_j[i].m == recs_c[i].m);
        CHECK(recs_j[i].converged == recs_c[i].converged);
        REQUIRE(recs_j[i].roots.size() == recs_c[i].roots.size());
        for (std::size_t k = 0; k < recs_j[i].roots.size(); ++k) {
            CHECK(recs_j[i].roots[k] == recs_c[i].roots[k]);
            CHECK(recs_j[i].residuals[k] == recs_c[i].residuals[k]);
            CHECK(recs_j[i].regions[k] == recs_c[i].regions[k]);
        }
    }
    // records ordered by n
    CHECK(recs_j[0].n == 10);
    CHECK(recs_j[2].n == 12);
}

TEST_CASE("zeros honors the m-rule and iterate forms") {
    auto r = run({"zeros", "bcd", "--n", "6", "--m-rule", "n+1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["records"][0]["m"] == 7);

    r = run({"zeros", "legendre", "--n", "6", "--iterate", "n"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["records"][0]["degree"] == 12);  // I_6 of degree-6 input
}

TEST_CASE("curve output parses back") {
    auto r = run({"curve", "gamma", "--N", "16"});
    REQUIRE(r.code == 0);
    CurveSamples cs = serial::curve_from_json(json::parse(r.out)["curve"], 256);
    CHECK(cs.points.size() == 16);
    auto rc = run({"--format", "csv", "curve", "gamma", "--N", "16"});
    REQUIRE(rc.code == 0);
    CurveSamples cs2 = serial::curve_from_csv(rc.out, 256);
    REQUIRE(cs2.points.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) CHECK(cs.points[i] == cs2.points[i]);

    for (const char* name : {"gamma_pre", "cardioid", "level"}) {
        auto rr = run({"curve", name, "--N", "12", "--lambda", "2,0.5", "--r", "1.5"});
        REQUIRE(rr.code == 0);
    }
    // the pre-image samples land on their own defining curve
    auto rp = run({"curve", "gamma_pre", "--N", "8"});
    REQUIRE(rp.code == 0);
    CurveSamples pre = serial::curve_from_json(json::parse(rp.out)["curve"], 256);
    CHECK(pre.points.size() == 16);  // both square-root branches
    for (const auto& w : pre.points)
        CHECK(classify_F(w, BigFloat(1e-40, 256)).on_boundary);
}

TEST_CASE("region classification commands") {
    auto r = run({"region", "e", "--z", "2,0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["region"] == "E1");
    r = run({"region", "f", "--z", "2,0"});
    CHECK(json::parse(r.out)["region"] == "F2");
    r = run({"region", "level", "--z", "10,0", "--lambda", "3,0"});
    CHECK(json::parse(r.out)["region"] == "outside");
}

TEST_CASE("asympt subcommands emit values") {
    auto r = run({"asympt", "markov", "--z", "2,0", "--nodes", "64"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(json::parse(r.out)["error"].get<std::string>()) <= 1e-10);

    r = run({"asympt", "ratio", "--model", "qnn", "--z", "2,0", "--n-list", "25,50"});
    REQUIRE(r.code == 0);
    auto recs = json::parse(r.out)["records"];
    REQUIRE(recs.size() == 2);
    CHECK(std::stod(recs[1]["ratio_error"].get<std::string>()) <
          std::stod(recs[0]["ratio_error"].get<std::string>()));

    r = run({"asympt", "nthroot", "--n", "50", "--m", "50", "--z", "0.2,0"});
    REQUIRE(r.code == 0);

    r = run({"asympt", "intratio", "--base", "off-arc", "--n", "50", "--m", "1", "--lambda", "3",
             "--z", "10,0"});
    REQUIRE(r.code == 0);

    r = run({"asympt", "pathint", "--n", "50", "--z1", "1.5,0", "--z2", "3,0"});
    REQUIRE(r.code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"gen", "nosuchfamily", "--n", "2"}).code == 2);
    CHECK(run({"gen", "bcd"}).code == 2);             // missing required --n
    CHECK(run({"--no-such-flag", "gen", "bcd", "--n", "1"}).code == 2);
    CHECK(run({"check", "nosuchsuite"}).code == 2);
    CHECK(run({"region", "level", "--z", "0.5,0", "--lambda", "3,0"}).code == 2);  // on the arc
    // unreachable tolerance at the requested precision -> non-convergence
    auto r = run({"--tol", "1e-200", "--prec-bits", "128", "zeros", "bcd", "--n", "5", "--m-rule",
                  "n", "--max-iter", "30"});
    CHECK(r.code == 3);
    json doc = json::parse(r.out);
    CHECK(doc["records"][0]["converged"] == false);
}

TEST_CASE("check suite: scaled-down thresholds fail honestly with exit 4") {
    // thresholds are pinned at full scale, so a clamped asymptotic run
    // underperforms them and the command must say so
    auto r = run({"check", "asympt", "--n-max", "20"});
    CHECK(r.code == 4);
    json doc = json::parse(r.out);
    CHECK(doc["pass"] == false);
    bool any_failed_with_note = false;
    for (const auto& c : doc["criteria"]) {
        if (c["pass"] == false &&
            c["details"].get<std::string>().find("scaled run") != std::string::npos)
            any_failed_with_note = true;
    }
    CHECK(any_failed_with_note);
}

TEST_CASE("check suite: scaled-down run passes exact identities and is deterministic") {
    auto r1 = run({"check", "exact", "--n-max", "8"});
    CHECK(r1.code == 0);
    json doc = json::parse(r1.out);
    CHECK(doc["pass"] == true);
    REQUIRE(doc["criteria"].size() == 4);
    for (const auto& c : doc["criteria"]) CHECK(c["pass"] == true);

    auto r2 = run({"check", "exact", "--n-max", "8"});
    CHECK(r2.out == r1.out);  // identical reports byte for byte

    auto rb1 = run({"--seed", "1", "check", "bounds", "--n-max", "4"});
    auto rb2 = run({"--seed", "1", "check", "bounds", "--n-max", "4"});
    CHECK(rb1.out == rb2.out);
    CHECK(rb1.code == rb2.code);
}

TEST_CASE("help and csv escaping") {
    CHECK(run({"--help"}).code == 0);
    std::string tricky = "a,\"quoted\"\nfield";
    auto cells = serial::csv_split(serial::csv_escape(tricky) + "," + serial::csv_escape("plain"));
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == tricky);
    CHECK(cells[1] == "plain");
}

TEST_CASE("output lands in a file with --out") {
    std::string path = "/tmp/ipoly_test_gen.json";
    auto r = run({"--out", path, "gen", "bcd", "--n", "2", "--m", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json doc = json::parse(in);
    CHECK(doc["coeffs"] == json::array({"3", "3", "1"}));
}
