#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "sfh/builders.hpp"
#include "sfh/cli.hpp"
#include "sfh/error.hpp"
#include "sfh/floer.hpp"
#include "sfh/shd.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

using namespace sfh;
namespace fs = std::filesystem;

namespace {

const char* kPiece = R"(# elementary piece
points u v
boundary d0 d1 d2 d3
alpha A: u v
beta  B: u v
region R1 genus 0: cycle(+A.0 -B.0) cycle(∂d0)
region R2 genus 0: cycle(+B.0 +A.1) cycle(∂d1)
region R3 genus 0: cycle(-A.1 +B.1) cycle(@d2)   # ascii alias
region R4 genus 0: cycle( -B.1  -A.0 ) cycle(∂d3)
)";

struct Failure {
    ErrorCode code;
    std::size_t line, column;
    std::string message;
};

Failure parse_failure(const std::string& text) {
    try {
        parse_shd(text);
    } catch (const ParseError& e) {
        return {e.code(), e.line(), e.column(), e.what()};
    }
    FAIL("parsed without error");
    return {};
}

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("shd_test_" + std::to_string(::getpid()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::vector<std::size_t> dims(const SFHTable& t) {
    std::vector<std::size_t> out;
    for (const auto& c : t.classes) out.push_back(c.dimension);
    return out;
}

std::vector<Diagram> builder_outputs() {
    return {
        build_base(1, 0),
        build_base(5, 2),
        build_elementary_piece(),
        build_elementary_piece("_x"),
        build_tpqn(1, 0, 6),
        build_tpqn(3, 2, 4),
        build_product(),
        build_genus_one_piece(),
        stabilize(build_base(2, 1), 1),
        glue(build_tpqn(2, 1, 2), "z", build_tpqn(1, 0, 4), "d3_1"),
        fixtures::parallel_curves(),
    };
}

} // namespace

TEST_CASE("parse the elementary piece") {
    Diagram d = parse_shd(kPiece);
    CHECK(validate(d).ok());
    CHECK(emit_shd(d) == emit_shd(build_elementary_piece()));
    CHECK(dims(homology(d)) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("round trip") {
    for (const Diagram& d : builder_outputs()) {
        const std::string text = emit_shd(d);
        CAPTURE(text);
        Diagram back = parse_shd(text);
        CHECK(emit_shd(back) == text);
        CHECK(back.points == d.points);
        CHECK(back.boundary_circles == d.boundary_circles);
        CHECK(back.regions.size() == d.regions.size());
        for (std::size_t r = 0; r < d.regions.size(); ++r) {
            CHECK(back.regions[r].cycles == d.regions[r].cycles);
            CHECK(back.regions[r].genus == d.regions[r].genus);
        }
        ValidationReport a = validate(d), b = validate(back);
        CHECK(a.ok() == b.ok());
        CHECK(a.euler_characteristic == b.euler_characteristic);
        if (a.ok() && periodic_lattice(d).rank() == 0) {
            SFHTable ta = homology(d), tb = homology(back);
            CHECK(dims(ta) == dims(tb));
            CHECK(ta.b1 == tb.b1);
        }
    }
}

TEST_CASE("corners clause") {
    Diagram d = build_elementary_piece();
    d.regions[0].declared_corners = region_corners(d, d.regions[0]);
    const std::string text = emit_shd(d);
    CHECK(text.find("corners(") != std::string::npos);
    Diagram back = parse_shd(text);
    CHECK(back.regions[0].declared_corners == d.regions[0].declared_corners);
    CHECK(emit_shd(back) == text);
    CHECK(validate(back).ok());

    std::string wrong = kPiece;
    wrong.replace(wrong.find("cycle(∂d0)"), std::string("cycle(∂d0)").size(), "cycle(∂d0) corners(u:-- v:--)");
    CHECK_FALSE(validate(parse_shd(wrong)).ok());
}

TEST_CASE("parse errors") {
    SUBCASE("empty input") {
        for (const char* text : {"", "\n\n", "# only a comment\n   \n"}) {
            Failure f = parse_failure(text);
            CHECK(f.code == ErrorCode::ParseError);
            CHECK(f.message.find("no surface content") != std::string::npos);
        }
    }
    SUBCASE("unknown point") {
        Failure f = parse_failure("points u\nalpha A: u w\n");
        CHECK(f.code == ErrorCode::UndeclaredIdentifier);
        CHECK(f.message.find("'w'") != std::string::npos);
        CHECK(f.line == 2);
        CHECK(f.column == 12);
    }
    SUBCASE("unknown curve, circle, arc") {
        CHECK(parse_failure("points u\nalpha A: u\nregion R genus 0: cycle(+B.0)\n").code ==
              ErrorCode::UndeclaredIdentifier);
        CHECK(parse_failure("boundary c\nregion R genus 0: cycle(∂x)\n").code == ErrorCode::UndeclaredIdentifier);
        Failure f = parse_failure("points u\nalpha A: u\nregion R genus 0: cycle(+A.1)\n");
        CHECK(f.code == ErrorCode::UndeclaredIdentifier);
        CHECK(f.column == 28);
    }
    SUBCASE("duplicates") {
        CHECK(parse_failure("points u u\n").code == ErrorCode::DuplicateIdentifier);
        CHECK(parse_failure("points u\nalpha A: u\nbeta A: u\n").code == ErrorCode::DuplicateIdentifier);
        CHECK(parse_failure("boundary c\nregion R genus 0: cycle(∂c)\nregion R genus 0: cycle(∂c)\n").code ==
              ErrorCode::DuplicateIdentifier);
    }
    SUBCASE("syntax") {
        Failure f = parse_failure("boundary c\nregion R genus 0 cycle(∂c)\n");
        CHECK(f.code == ErrorCode::ParseError);
        CHECK(f.line == 2);
        CHECK(f.column == 18);
        CHECK(parse_failure("surface S\n").code == ErrorCode::ParseError);
        CHECK(parse_failure("points u\nalpha A u\n").code == ErrorCode::ParseError);
        CHECK(parse_failure("boundary c\nregion R genus 0: cycle(∂c\n").code == ErrorCode::ParseError);
        CHECK(parse_failure("boundary c\nregion R genus 0: cycle()\n").code == ErrorCode::ParseError);
        CHECK(parse_failure("boundary c\nregion R genus 0:\n").code == ErrorCode::ParseError);
        CHECK(parse_failure("points u\nalpha A: u\nregion R genus 0: cycle(A.0)\n").code == ErrorCode::ParseError);
    }
    SUBCASE("columns count characters") {
        Failure f = parse_failure("boundary c\nregion R genus 0: cycle(∂c ?)\n");
        CHECK(f.column == 28);
    }
}

TEST_CASE("command line") {
    TempDir tmp;
    const std::string t6 = tmp.file("t6.shd");

    SUBCASE("build then compute") {
        Run b = run({"build", "tpqn", "--p", "1", "--q", "0", "--n", "6", "--out", t6});
        REQUIRE(b.status == 0);
        Run c = run({"--json", "compute", t6});
        REQUIRE(c.status == 0);
        auto j = nlohmann::json::parse(c.out);
        CHECK(j["schema"] == 1);
        CHECK(j["command"] == "compute");
        std::vector<std::size_t> got;
        for (const auto& cls : j["sfh"]["classes"]) got.push_back(cls["dimension"]);
        CHECK(got == std::vector<std::size_t>{1, 2, 1});
        Run again = run({"compute", t6, "--json"});
        CHECK(again.out == c.out);
    }
    SUBCASE("build to stdout matches the builder") {
        Run b = run({"build", "tpqn", "--p", "3", "--q", "2", "--n", "4"});
        CHECK(b.status == 0);
        CHECK(b.out == emit_shd(build_tpqn(3, 2, 4)));
        CHECK(run({"build", "tpqn", "--p", "2", "--q", "0", "--n", "4"}).status == kExitFailure);
    }
    SUBCASE("face, norm, depth, polytope") {
        REQUIRE(run({"build", "tpqn", "--p", "1", "--q", "0", "--n", "6", "--out", t6}).status == 0);
        auto face = nlohmann::json::parse(run({"face", t6, "--class", "1", "--json"}).out);
        CHECK(face["face"]["dimension"] == 1);
        CHECK(face["face"]["c_min"] == 0);
        auto back = nlohmann::json::parse(run({"face", t6, "--class=-1", "--json"}).out);
        CHECK(back["face"]["dimension"] == 1);
        auto norm = nlohmann::json::parse(run({"norm", t6, "--class", "1", "--json"}).out);
        CHECK(norm["norm"]["y"] == 2);
        CHECK(norm["norm"]["z"] == 2);
        auto half = nlohmann::json::parse(run({"norm", t6, "--class", "1/3", "--json"}).out);
        CHECK(half["norm"]["y"] == "2/3");
        auto poly = nlohmann::json::parse(run({"polytope", t6, "--json"}).out);
        CHECK(poly["polytope"]["dim"] == 1);
        CHECK(poly["polytope"]["centered_vertices"] == nlohmann::json::parse("[[-2],[2]]"));
        CHECK(run({"face", t6, "--class", "1,0"}).status == kExitFailure);
        CHECK(run({"face", t6, "--class", "1/2"}).status == kExitFailure);
        CHECK(run({"norm", t6, "--class", "x"}).status == kExitFailure);
    }
    SUBCASE("depth of a rank-two table") {
        const std::string one = tmp.file("one.shd");
        write_shd_file(one, build_genus_one_piece());
        auto j = nlohmann::json::parse(run({"depth", one, "--json"}).out);
        CHECK(j["depth"]["total_rank"] == 2);
        CHECK(j["depth"]["upper_bound"] == 2);
    }
    SUBCASE("glue") {
        const std::string piece = tmp.file("piece.shd"), glued = tmp.file("glued.shd");
        write_shd_file(piece, build_elementary_piece());
        CHECK(run({"glue", piece, "d2", piece, "d1", "--out", glued}).status == 0);
        Diagram expected = glue(build_elementary_piece(), "d2", build_elementary_piece(), "d1");
        CHECK(emit_shd(read_shd_file(glued)) == emit_shd(expected));
        CHECK(run({"glue", piece, "zz", piece, "d1"}).status == kExitFailure);
    }
    SUBCASE("exit codes") {
        const std::string bad = tmp.file("bad.shd"), invalid = tmp.file("invalid.shd"), undetermined = tmp.file("u.shd");
        {
            std::ofstream(bad) << "points u\nalpha A: q\n";
            std::ofstream(invalid) << "points u v\nboundary c\nalpha A: u v\nbeta B: u v\n"
                                      "region R genus 0: cycle(+A.0 -B.0) cycle(∂c)\n";
        }
        write_shd_file(undetermined, stabilize(fixtures::annulus_bigons(true), 1));
        Run p = run({"compute", bad, "--json"});
        CHECK(p.status == kExitParse);
        auto pj = nlohmann::json::parse(p.out);
        CHECK(pj["error"]["code"] == "UndeclaredIdentifier");
        CHECK(pj["error"]["line"] == 2);
        CHECK(run({"validate", invalid}).status == kExitInvalid);
        CHECK(run({"compute", invalid}).status == kExitInvalid);
        CHECK(run({"validate", t6 + ".missing"}).status == kExitFailure);
        CHECK(run({"compute", undetermined}).status == kExitUndetermined);
        CHECK(run({"validate", undetermined}).status == kExitOk);
        CHECK(run({"frobnicate"}).status == kExitParse);
        CHECK(run({}).status == kExitParse);
        CHECK(run({"--help"}).status == kExitOk);
    }
}
