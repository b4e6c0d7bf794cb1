#include <catch2/catch_amalgamated.hpp>

#include "lcfano/json_io.hpp"

using namespace lcfano;

TEST_CASE("lattice polytope round trip") {
    const std::string canonical = "{\"dim\":2,\"vertices\":[[-3,-3],[0,1],[1,0]]}";
    const LatticePolytope p = parse_lattice_polytope(canonical);
    CHECK(write_polytope_json(p) == canonical);

    // Whitespace and key order are accepted on input; output is canonical.
    const LatticePolytope q = parse_lattice_polytope(
        " { \"vertices\" : [ [ 1 , 0 ] , [ 0 , 1 ] , [ -3 , -3 ] ] , \"dim\" : 2 } ");
    CHECK(write_polytope_json(q) == canonical);
}

TEST_CASE("rational polytope round trip") {
    const std::string canonical =
        "{\"dim\":2,\"vertices\":[[\"-1/2\",\"-1/2\"],[\"0\",\"1\"],[\"1/2\",\"0\"]]}";
    const RationalPolytopeData p = parse_rational_polytope(canonical);
    CHECK(p.dim == 2);
    CHECK(write_rational_polytope_json(p.dim, p.vertices) == canonical);

    // Raw integers are accepted in rational files.
    const RationalPolytopeData q =
        parse_rational_polytope("{\"dim\":2,\"vertices\":[[1,0],[0,1],[-1,-1]]}");
    CHECK(q.vertices[0][0] == 1);
}

TEST_CASE("big integers survive the round trip") {
    const Int big = int_pow(Int(2), 200);
    const std::string text =
        "{\"dim\":1,\"vertices\":[[-1],[" + to_string(big) + "]]}";
    const LatticePolytope p = parse_lattice_polytope(text);
    CHECK(p.vertices()[1][0] == big);
    CHECK(write_polytope_json(p) == text);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_lattice_polytope("{\"vertices\":[[1,0],[0,1],[-1,-1]]}"), ParseError);
    CHECK_THROWS_AS(parse_lattice_polytope("{\"dim\":2}"), ParseError);
    CHECK_THROWS_AS(
        parse_lattice_polytope("{\"dim\":2,\"dim\":2,\"vertices\":[[1,0],[0,1],[-1,-1]]}"),
        ParseError);
    CHECK_THROWS_AS(
        parse_lattice_polytope("{\"dim\":2,\"vertices\":[[1,0],[0,1],[-1,-1]]} extra"),
        ParseError);
    CHECK_THROWS_AS(parse_lattice_polytope("{\"dim\":2,\"vertices\":[[1,0],[0,1],[-1]]}"),
                    ParseError);
    CHECK_THROWS_AS(parse_lattice_polytope("{\"dim\":2,\"vertices\":[[1,0],[0,1],[\"1/2\",0]]}"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_lattice_polytope("{\"dim\":2,\"other\":1,\"vertices\":[[1,0],[0,1],[-1,-1]]}"),
        ParseError);
    CHECK_THROWS_AS(parse_rational_polytope("{\"dim\":2,\"vertices\":[[\"1/0\",\"0\"]]}"),
                    ParseError);
}

TEST_CASE("content errors are not parse errors") {
    // Well-formed JSON whose points are not all hull vertices.
    CHECK_THROWS_AS(
        parse_lattice_polytope("{\"dim\":2,\"vertices\":[[1,0],[0,1],[-1,-1],[0,0]]}"),
        DegenerateInput);
}
