#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fewsphere/json_io.hpp"
#include "fewsphere/oracle.hpp"
#include "support/fixtures.hpp"

using namespace fewsphere;
using json_io::Json;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "fewsphere");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

const std::string kPentagon = R"({"m": 5, "nonfaces": [[1,4],[2,5],[1,3],[2,4],[3,5]]})";
const std::string kOctahedron = R"({"m": 6, "nonfaces": [[1,2],[3,4],[5,6]]})";
const std::string kHexagon = R"({"m": 6, "facets": [[1,2],[2,3],[3,4],[4,5],[5,6],[1,6]]})";

}  // namespace

TEST_CASE("check exit codes follow the verdict") {
    auto pent = run({"check"}, kPentagon);
    CHECK(pent.status == 0);
    const Json v = Json::parse(pent.out);
    CHECK(v["verdict"] == "sphere");
    CHECK(v["d"] == 1);

    auto hex = run({"check"}, kHexagon);
    CHECK(hex.status == 2);
    CHECK(Json::parse(hex.out)["verdict"] == "out_of_scope");

    auto triangle = run({"check"}, R"({"m": 5, "facets": [[1,2],[2,3],[1,3],[4],[5]]})");
    CHECK(triangle.status == 1);
    CHECK(Json::parse(triangle.out)["reason"] == "non_odd_family_size");

    auto singleton = run({"check"}, R"({"m": 4, "nonfaces": [[1],[2,3]]})");
    CHECK(singleton.status == 64);
    CHECK(singleton.out.empty());
    CHECK_FALSE(singleton.err.empty());

    CHECK(run({"check"}, "not json").status == 64);
    CHECK(run({"check"}, R"({"m": 4, "nonfaces": [[1,2],[1,2,3]]})").status == 64);
    CHECK(run({"check"}, R"({"m": 3, "facets": [[1,2]]})").status == 64);
}

TEST_CASE("verbose check prints the cyclic notation") {
    auto r = run({"check", "--verbose"}, kOctahedron);
    CHECK(r.status == 0);
    CHECK(r.err.find("{1,2} -- {3,4} -- {5,6}") != std::string::npos);
    CHECK(r.err.find("B_0={1,2}") != std::string::npos);
}

TEST_CASE("conversions") {
    auto nf = run({"nonfaces"}, json_io::render(json_io::to_json(fixtures::octahedron())));
    CHECK(nf.status == 0);
    CHECK(Json::parse(nf.out) == Json::parse(kOctahedron));

    auto cx = run({"complex"}, kOctahedron);
    CHECK(cx.status == 0);
    CHECK(json_io::parse_complex(Json::parse(cx.out)) == fixtures::octahedron());

    auto hom = run({"homology"}, kPentagon);
    CHECK(hom.status == 0);
    CHECK(Json::parse(hom.out) == Json::parse(R"({"reduced_betti": [0, 0, 1]})"));
}

TEST_CASE("realize emits verified points") {
    auto oct = run({"realize", "--verify"}, kOctahedron);
    CHECK(oct.status == 0);
    const auto pc = json_io::parse_points(Json::parse(oct.out));
    CHECK(pc.dim == 3);
    CHECK(pc.size() == 6);
    CHECK(boundary_complex(pc) == fixtures::octahedron());
    CHECK(oct.err.find("equals") != std::string::npos);

    auto pent = run({"realize"}, kPentagon);
    CHECK(pent.status == 0);
    const auto pp = json_io::parse_points(Json::parse(pent.out));
    CHECK(pp.dim == 2);
    CHECK(boundary_complex(pp) == fixtures::pentagon());

    auto hull = run({"hull"}, pent.out);
    CHECK(hull.status == 0);
    CHECK(json_io::parse_complex(Json::parse(hull.out)) == fixtures::pentagon());

    auto even = run({"realize"}, R"({"m": 6, "nonfaces": [[1,2],[2,3],[3,4],[4,5],[5,6],[1,6]]})");
    CHECK(even.status == 1);
    CHECK(even.err.find("NotMaxOddCycle") != std::string::npos);
}

TEST_CASE("catalog and verify") {
    auto cat = run({"catalog", "--m", "6"});
    CHECK(cat.status == 0);
    CHECK(Json::parse(cat.out)["class_count"] == 2);
    auto par = run({"catalog", "--m", "6", "--parallel"});
    CHECK(par.out == cat.out);
    CHECK(run({"catalog", "--m", "2"}).status == 64);
    CHECK(run({"catalog"}).status == 64);

    auto ver = run({"verify"}, kPentagon);
    CHECK(ver.status == 0);
    const Json report = Json::parse(ver.out);
    CHECK(report["pass"] == true);
    CHECK(report["stages"].size() == 5);
    for (const auto& s : report["stages"]) CHECK(s["pass"] == true);

    auto bad = run({"verify"}, R"({"m": 5, "facets": [[1,2],[2,3],[1,3],[4],[5]]})");
    CHECK(bad.status != 0);
    CHECK(Json::parse(bad.out)["pass"] == false);
}

TEST_CASE("files and determinism") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "fewsphere_cli_test";
    fs::create_directories(dir);
    const fs::path in = dir / "oct.json";
    const fs::path out1 = dir / "a.json";
    const fs::path out2 = dir / "b.json";
    std::ofstream(in) << kOctahedron;
    CHECK(run({"realize", "-i", in.string(), "-o", out1.string()}).status == 0);
    CHECK(run({"realize", "--input", in.string(), "--output", out2.string()}).status == 0);
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p);
        std::stringstream s;
        s << f.rdbuf();
        return s.str();
    };
    CHECK_FALSE(slurp(out1).empty());
    CHECK(slurp(out1) == slurp(out2));
    CHECK(run({"check", "-i", (dir / "missing.json").string()}).status == 64);
    fs::remove_all(dir);

    for (const std::string& cmd : {"check", "complex", "homology", "realize", "verify"}) {
        CHECK(run({cmd}, kOctahedron).out == run({cmd}, kOctahedron).out);
    }
}

TEST_CASE("emitted documents re-parse to equal values") {
    const auto cx = run({"complex"}, kPentagon).out;
    CHECK(json_io::render(json_io::to_json(json_io::parse_complex(Json::parse(cx)))) == cx);
    const auto pts = run({"realize"}, kPentagon).out;
    CHECK(json_io::render(json_io::to_json(json_io::parse_points(Json::parse(pts)))) == pts);
    const auto verdict = run({"check"}, kPentagon).out;
    CHECK(json_io::render(json_io::to_json(json_io::parse_verdict(Json::parse(verdict), 5))) == verdict);
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == 64);
    CHECK(run({"frobnicate"}).status == 64);
    CHECK(run({"--help"}).status == 0);
}
