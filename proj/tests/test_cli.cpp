#include <sstream>

#include "catch_amalgamated.hpp"
#include "sphaerica/cli.hpp"
#include "support/oracles.hpp"

using namespace sphaerica;
using nlohmann::json;
using Catch::Approx;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
    json body;  // parsed stdout when JSON was requested
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    CliResult r{code, out.str(), err.str(), json()};
    bool wants_json = false;
    for (const auto& a : args)
        if (a == "--json") wants_json = true;
    if (wants_json) r.body = json::parse(r.out);  // throws if stdout is not pure JSON
    return r;
}

}  // namespace

TEST_CASE("cli solve: octant triangle in degrees") {
    auto r = run_cli({"solve", "--json"}, R"({"a":90,"b":90,"c":90,"units":"degrees"})");
    CHECK(r.exit_code == 0);
    CHECK(r.body["status"] == "ok");
    REQUIRE(r.body["results"].size() == 1);
    for (const char* k : {"a", "b", "c", "A", "B", "C"})
        CHECK(r.body["results"][0][k].get<double>() == Approx(90.0).margin(1e-10));
}

TEST_CASE("cli solid-angle: flag-driven cube corner") {
    auto r = run_cli({"solid-angle", "--n", "3", "--a", "90", "--degrees"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1.570796 sr\n");
}

TEST_CASE("cli solid-angle: polyhedra table") {
    auto r = run_cli({"solid-angle", "--json"}, R"({"table":true})");
    CHECK(r.exit_code == 0);
    REQUIRE(r.body["results"].size() == 5);
    CHECK(r.body["results"][1]["name"] == "cube");
    CHECK(r.body["results"][1]["steradians"].get<double>() == Approx(kPi / 2).margin(1e-12));
}

TEST_CASE("cli apollonius2: Descartes instance") {
    std::string payload = R"({"circles":[
        {"cx":0,"cy":0,"r":1},{"cx":2,"cy":0,"r":1},
        {"cx":1,"cy":1.7320508075688772,"r":1}]})";
    auto r = run_cli({"apollonius2", "--json"}, payload);
    CHECK(r.exit_code == 0);
    bool found = false;
    for (const auto& s : r.body["results"])
        if (std::fabs(s["r"].get<double>() - 0.15470053837925155) < 1e-9) found = true;
    CHECK(found);
}

TEST_CASE("cli exit codes: invalid input") {
    auto bad_json = run_cli({"solve", "--json"}, "this is not json");
    CHECK(bad_json.exit_code == 2);
    CHECK(bad_json.body["status"] == "invalid_input");
    CHECK(!bad_json.body["diagnostics"].empty());

    auto two_knowns = run_cli({"solve", "--json"}, R"({"a":1.0,"b":1.0})");
    CHECK(two_knowns.exit_code == 2);
    CHECK(two_knowns.body["status"] == "invalid_input");

    auto bad_cmd = run_cli({"frobnicate", "--json"});
    CHECK(bad_cmd.exit_code == 2);
}

TEST_CASE("cli exit codes: no solution") {
    auto r = run_cli({"solve", "--json"}, R"({"a":0.2,"b":1.4,"A":1.3})");
    CHECK(r.exit_code == 3);
    CHECK(r.body["status"] == "no_solution");
    CHECK(r.body["results"].empty());
}

TEST_CASE("cli exit codes: degenerate configuration") {
    std::string payload = R"({"circles":[
        {"cx":0,"cy":0,"r":1},{"cx":0,"cy":0,"r":2},{"cx":3,"cy":0,"r":1}]})";
    auto r = run_cli({"apollonius2", "--json"}, payload);
    CHECK(r.exit_code == 4);
    CHECK(r.body["status"] == "degenerate");
}

TEST_CASE("cli degrees and radians runs agree") {
    auto rad = run_cli({"solve", "--json"}, R"({"a":0.8,"b":0.6,"A":0.9})");
    json deg_payload{{"a", 0.8 * 180 / kPi},
                     {"b", 0.6 * 180 / kPi},
                     {"A", 0.9 * 180 / kPi},
                     {"units", "degrees"}};
    auto deg = run_cli({"solve", "--json"}, deg_payload.dump());
    CHECK(rad.exit_code == 0);
    CHECK(deg.exit_code == 0);
    REQUIRE(rad.body["results"].size() == deg.body["results"].size());
    for (size_t i = 0; i < rad.body["results"].size(); ++i)
        for (const char* k : {"a", "b", "c", "A", "B", "C"}) {
            double vr = rad.body["results"][i][k].get<double>();
            double vd = deg.body["results"][i][k].get<double>() * kPi / 180.0;
            CHECK(std::fabs(vr - vd) < 1e-12);
        }
}

TEST_CASE("cli geodist: bearing omitted for coincident points") {
    auto r = run_cli({"geodist", "--json"},
                     R"({"from":{"lat":0.3,"lon":0.4},"to":{"lat":0.3,"lon":0.4}})");
    CHECK(r.exit_code == 0);
    CHECK(r.body["results"][0]["length_km"].get<double>() == 0.0);
    CHECK(!r.body["results"][0].contains("initial_bearing"));
    CHECK(!r.body["diagnostics"].empty());
}

TEST_CASE("cli response envelope round-trips through JSON") {
    auto r = run_cli({"lexell", "--json"},
                     R"({"a":[1,0,0],"b":[0,1,0],"area":1.5707963267948966})");
    CHECK(r.exit_code == 0);
    cli::ResponseEnvelope env = cli::ResponseEnvelope::from_json(r.body);
    json dumped = env.to_json();
    CHECK(dumped == r.body);
    CHECK(cli::ResponseEnvelope::from_json(dumped) == env);
}

TEST_CASE("cli cevian gap and construct") {
    auto gap = run_cli({"cevian", "--json"},
                       R"({"op":"gap","geometry":"euclidean",
                           "lengths":{"AO":3,"Oa":1,"BO":2,"Ob":1,"CO":1.4,"Oc":1}})");
    CHECK(gap.exit_code == 0);
    CHECK(std::fabs(gap.body["results"][0]["gap"].get<double>()) < 1e-12);

    auto built = run_cli({"cevian", "--json"},
                         R"({"op":"construct","geometry":"euclidean",
                             "lengths":{"AO":1,"Oa":0.5,"BO":1,"Ob":0.5,"CO":1,"Oc":0.5}})");
    CHECK(built.exit_code == 0);
    CHECK(std::fabs(built.body["results"][0]["gap"].get<double>()) < 1e-9);
}

TEST_CASE("cli svg output: lexell structural checks and determinism") {
    std::string payload = R"({"a":[1,0,0],"b":[0,1,0],"area":1.5707963267948966})";
    std::string path1 = "/tmp/sphaerica_test_lexell_1.svg";
    std::string path2 = "/tmp/sphaerica_test_lexell_2.svg";
    auto r1 = run_cli({"lexell", "--json", "--svg", path1}, payload);
    auto r2 = run_cli({"lexell", "--json", "--svg", path2}, payload);
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);

    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    };
    std::string svg1 = slurp(path1);
    CHECK(svg1 == slurp(path2));  // byte-identical across runs
    CHECK(oracle::xml_well_formed(svg1));
    CHECK(svg1.find("<path class=\"solution\"") != std::string::npos);
    // the two base points
    CHECK(svg1.find("given pt") != std::string::npos);
}

TEST_CASE("cli svg output: pappus contains carrier, points and a triangle") {
    // points are the side midpoints of the equilateral triangle at phase 0.3
    std::string path = "/tmp/sphaerica_test_pappus.svg";
    Vec2 w1{std::cos(0.3), std::sin(0.3)};
    Vec2 w2{std::cos(0.3 + 2 * kPi / 3), std::sin(0.3 + 2 * kPi / 3)};
    Vec2 w3{std::cos(0.3 + 4 * kPi / 3), std::sin(0.3 + 4 * kPi / 3)};
    json payload{{"mode", "planar"},
                 {"carrier", {{"cx", 0.0}, {"cy", 0.0}, {"r", 1.0}}},
                 {"points",
                  {{0.5 * (w2.x + w3.x), 0.5 * (w2.y + w3.y)},
                   {0.5 * (w3.x + w1.x), 0.5 * (w3.y + w1.y)},
                   {0.5 * (w1.x + w2.x), 0.5 * (w1.y + w2.y)}}}};
    auto r = run_cli({"pappus", "--json", "--svg", path}, payload.dump());
    CHECK(r.exit_code == 0);
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    std::string svg = buf.str();
    CHECK(oracle::xml_well_formed(svg));
    CHECK(svg.find("<circle class=\"given\"") != std::string::npos);
    CHECK(svg.find("Z\"") != std::string::npos);  // closed triangle path
    size_t pts = 0;
    for (size_t pos = svg.find("given pt"); pos != std::string::npos;
         pos = svg.find("given pt", pos + 1))
        ++pts;
    CHECK(pts == 3);
}

TEST_CASE("cli svg failure path") {
    auto r = run_cli({"lexell", "--json", "--svg", "/nonexistent-dir/x.svg"},
                     R"({"a":[1,0,0],"b":[0,1,0],"area":1.0})");
    CHECK(r.exit_code == 2);
    CHECK(r.body["status"] == "invalid_input");
}

TEST_CASE("cli accepts the wrapped request envelope form") {
    std::string wrapped = R"({"command":"solve","units":"degrees",
        "payload":{"a":90,"b":90,"c":90}})";
    auto r = run_cli({"solve", "--json"}, wrapped);
    CHECK(r.exit_code == 0);
    CHECK(r.body["results"][0]["A"].get<double>() == Approx(90.0).margin(1e-10));

    auto mismatched = run_cli({"area", "--json"}, wrapped);
    CHECK(mismatched.exit_code == 2);
}

TEST_CASE("cli tolerance: environment override, flag wins") {
    // an impossibly tight residual tolerance makes every pappus candidate
    // fail the gate
    Vec2 w1{std::cos(0.3), std::sin(0.3)};
    Vec2 w2{std::cos(0.3 + 2 * kPi / 3), std::sin(0.3 + 2 * kPi / 3)};
    Vec2 w3{std::cos(0.3 + 4 * kPi / 3), std::sin(0.3 + 4 * kPi / 3)};
    json payload{{"mode", "planar"},
                 {"carrier", {{"cx", 0.0}, {"cy", 0.0}, {"r", 1.0}}},
                 {"points",
                  {{0.5 * (w2.x + w3.x), 0.5 * (w2.y + w3.y)},
                   {0.5 * (w3.x + w1.x), 0.5 * (w3.y + w1.y)},
                   {0.5 * (w1.x + w2.x), 0.5 * (w1.y + w2.y)}}}};

    setenv("SPHAERICA_TOLERANCE", "1e-30", 1);
    auto strangled = run_cli({"pappus", "--json"}, payload.dump());
    CHECK(strangled.exit_code == 3);

    auto rescued = run_cli({"pappus", "--json", "--tolerance", "1e-8"}, payload.dump());
    CHECK(rescued.exit_code == 0);
    unsetenv("SPHAERICA_TOLERANCE");
}

TEST_CASE("cli svg output: apollonius2 and cevian") {
    std::string apo_path = "/tmp/sphaerica_test_apo.svg";
    auto r1 = run_cli({"apollonius2", "--json", "--svg", apo_path},
                      R"({"circles":[{"cx":0,"cy":0,"r":1},{"cx":2,"cy":0,"r":1},
                          {"cx":1,"cy":1.7320508075688772,"r":1}]})");
    CHECK(r1.exit_code == 0);
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    };
    std::string apo_svg = slurp(apo_path);
    CHECK(oracle::xml_well_formed(apo_svg));
    CHECK(apo_svg.find("<circle class=\"given\"") != std::string::npos);
    CHECK(apo_svg.find("<circle class=\"solution\"") != std::string::npos);

    std::string cev_path = "/tmp/sphaerica_test_cevian.svg";
    auto r2 = run_cli({"cevian", "--json", "--svg", cev_path},
                      R"({"op":"construct","geometry":"euclidean",
                          "lengths":{"AO":1,"Oa":0.5,"BO":1,"Ob":0.5,"CO":1,"Oc":0.5}})");
    CHECK(r2.exit_code == 0);
    std::string cev_svg = slurp(cev_path);
    CHECK(oracle::xml_well_formed(cev_svg));
    CHECK(cev_svg.find("<path class=\"solution\"") != std::string::npos);
    CHECK(cev_svg.find("<path class=\"given\"") != std::string::npos);
}
