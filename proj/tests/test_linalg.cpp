#include <catch2/catch_amalgamated.hpp>

#include "lcfano/linalg.hpp"

using namespace lcfano;

namespace {

RatMat rm(const std::vector<std::vector<long>>& rows) {
    RatMat out;
    for (const auto& r : rows) {
        RatVec v;
        for (const long x : r) v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

IntMat im(const std::vector<std::vector<long>>& rows) {
    IntMat out;
    for (const auto& r : rows) {
        IntVec v;
        for (const long x : r) v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("determinants") {
    CHECK(determinant(rm({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(rm({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(rm({{1, -1, 0}, {-1, 2, 0}, {0, 0, 1}})) == 1);
    CHECK(determinant(rm({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    CHECK(determinant(im({{1, -2}, {-2, 5}})) == 1);
    RatMat half = rm({{1, 0}, {0, 1}});
    half[0][0] = make_rat(1, 2);
    CHECK(determinant(half) == make_rat(1, 2));
}

TEST_CASE("rank and affine rank") {
    CHECK(rank(rm({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(rm({{1, 0}, {0, 1}, {1, 1}})) == 2);
    CHECK(rank(RatMat{}) == 0);
    CHECK(affine_rank(rm({{0, 0}, {1, 1}, {2, 2}})) == 1);
    CHECK(affine_rank(rm({{0, 0}, {1, 0}, {0, 1}})) == 2);
    CHECK(affine_rank(rm({{5, 5}})) == 0);
}

TEST_CASE("square and overdetermined solves") {
    const auto x = solve_square(rm({{2, 1}, {1, 3}}), {Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);
    CHECK(!solve_square(rm({{1, 2}, {2, 4}}), {Rat(1), Rat(3)}).has_value());

    const auto y = solve_unique(rm({{1, 0}, {0, 1}, {1, 1}}), {Rat(2), Rat(3), Rat(5)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 2);
    CHECK((*y)[1] == 3);
    CHECK(!solve_unique(rm({{1, 0}, {0, 1}, {1, 1}}), {Rat(2), Rat(3), Rat(6)}).has_value());
    CHECK(!solve_unique(rm({{1, 1}}), {Rat(2)}).has_value());
}

TEST_CASE("nullspace") {
    const auto ns = nullspace(rm({{1, 2, 3}}));
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) CHECK(dot(RatVec{Rat(1), Rat(2), Rat(3)}, v) == 0);
    CHECK(nullspace(rm({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("primitive vectors") {
    CHECK(primitive_vector({Rat(2), Rat(4), Rat(6)}) == IntVec{Int(1), Int(2), Int(3)});
    CHECK(primitive_vector({Rat(-2), Rat(4)}) == IntVec{Int(1), Int(-2)});
    CHECK(primitive_vector({Rat(0), Rat(-3), Rat(6)}) == IntVec{Int(0), Int(1), Int(-2)});
    CHECK(primitive_vector({make_rat(1, 2), make_rat(1, 3)}) == IntVec{Int(3), Int(2)});
    CHECK(is_primitive({Int(3), Int(5)}));
    CHECK(!is_primitive({Int(2), Int(4)}));
    CHECK(!is_primitive({Int(0), Int(0)}));
    CHECK_THROWS_AS(primitive_vector({Rat(0), Rat(0)}), PreconditionFailed);
}

TEST_CASE("integer kernel") {
    const IntMat k = integer_kernel(im({{1, 2, 3}}));
    REQUIRE(k.size() == 2);
    for (const auto& col : k) CHECK(col[0] + 2 * col[1] + 3 * col[2] == 0);

    const IntMat k2 = integer_kernel(im({{2, 4}}));
    REQUIRE(k2.size() == 1);
    CHECK(2 * k2[0][0] + 4 * k2[0][1] == 0);
    CHECK(is_primitive(k2[0]));

    CHECK(integer_kernel(im({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("saturated sublattice basis") {
    const IntMat basis = sublattice_basis({{Int(2), Int(0), Int(0)}, {Int(0), Int(3), Int(0)}}, 3);
    REQUIRE(basis.size() == 2);
    // e1 and e2 lie in the saturation, so they must have integer coordinates
    // in the computed basis.
    RatMat bt(3, RatVec(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) bt[j][i] = Rat(basis[i][j]);
    for (const auto& target : {RatVec{Rat(1), Rat(0), Rat(0)}, RatVec{Rat(0), Rat(1), Rat(0)}}) {
        const auto coords = solve_unique(bt, target);
        REQUIRE(coords.has_value());
        for (const auto& c : *coords) CHECK(rat_den(c) == 1);
    }
}

TEST_CASE("matrix products") {
    const IntMat a = im({{1, 2}, {3, 4}});
    CHECK(mat_mul(a, int_identity(2)) == a);
    CHECK(mat_vec(a, IntVec{Int(1), Int(1)}) == IntVec{Int(3), Int(7)});
}
