#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "vsym/io.hpp"

using namespace vsym;

namespace {

const std::filesystem::path kData = std::filesystem::path(__FILE__).parent_path() / "data";

}  // namespace

TEST_CASE("ring presentation files") {
    RingPtr q5 = io::load_ring(kData / "ring_q5.json");
    REQUIRE(q5->nvars() == 6);
    REQUIRE_FALSE(q5->is_trivial());
    REQUIRE(elem(q5, "x1*y1+x2*y2+x3*y3").is_one());

    RingPtr s3 = io::load_ring(kData / "ring_sphere3.json");
    REQUIRE(elem(s3, "x^2+y^2+z^2+w^2").is_one());
}

TEST_CASE("row files resolve ring references relative to themselves") {
    io::RowFile rf = io::load_row(kData / "row_sphere.json");
    REQUIRE(rf.entries.size() == 4);
    REQUIRE(rf.certificate);
    UnimodularRow row = row_make(rf.ring, rf.entries, rf.certificate);
    REQUIRE(certificate_holds(rf.ring, row.entries, row.certificate));
}

TEST_CASE("inline ring presentations in row files") {
    io::RowFile rf = io::load_row(kData / "row_e1.json");
    REQUIRE(rf.ring->nvars() == 1);
    REQUIRE(rf.entries.size() == 3);
}

TEST_CASE("elementary move wire format is 1-based") {
    RingPtr s3 = io::load_ring(kData / "ring_sphere3.json");
    auto moves = io::moves_from_json(nlohmann::json::parse(R"([{"i":1,"j":2,"lambda":"w"}])"), s3);
    REQUIRE(moves.size() == 1);
    REQUIRE(moves[0].i == 0);
    REQUIRE(moves[0].j == 1);
    REQUIRE(moves[0].lambda == elem(s3, "w"));
}

TEST_CASE("matrix files round-trip through JSON") {
    nlohmann::json j;
    j["ring"] = {{"vars", {"a1", "a2", "a3", "b1", "b2", "b3"}}, {"relations", nlohmann::json::array()}};
    j["entries"] = {{"0", "-a1", "-a2", "-a3"},
                    {"a1", "0", "-b3", "b2"},
                    {"a2", "b3", "0", "-b1"},
                    {"a3", "-b2", "b1", "0"}};
    SkewMatrix m = io::matrix_from_json(j, ".");
    REQUIRE(m.size() == 4);
    // generic symbol matrix: Pf = a1 b1 + a2 b2 + a3 b3 in the free ring
    REQUIRE(pfaffian(m) == elem(m.ring(), "a1*b1+a2*b2+a3*b3"));

    nlohmann::json back = io::matrix_to_json(m);
    REQUIRE(back.size() == 4);
    REQUIRE(back[0][1].get<std::string>() == "-a1");
}

TEST_CASE("non-alternating matrix files rejected") {
    nlohmann::json j;
    j["ring"] = {{"vars", {"t"}}, {"relations", nlohmann::json::array()}};
    j["entries"] = {{"0", "1"}, {"1", "0"}};
    REQUIRE_THROWS(io::matrix_from_json(j, "."));
}
