#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "lcfano/decomposition.hpp"

using namespace lcfano;

namespace {

std::vector<IntVec> iv(const std::vector<std::vector<long>>& rows) {
    std::vector<IntVec> out;
    for (const auto& r : rows) {
        IntVec v;
        for (const long x : r) v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

const std::vector<IntVec> kCross2 = iv({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});

}  // namespace

TEST_CASE("cross-polytope decomposition") {
    const LatticePolytope cross(2, kCross2);
    const Decomposition dec = decompose_minimal(cross, 1);
    REQUIRE(dec.simplices.size() == 2);
    CHECK(dec.d_list == std::vector<std::size_t>{1, 1});
    CHECK(dec.r_list == std::vector<std::size_t>{0, 0});
    CHECK(check_decomp_relations(dec));
    for (const auto& s : dec.simplices) {
        CHECK(s.dim == 1);
        CHECK(s.vertex_indices.size() == 2);
        CHECK(s.beta == RatVec{make_rat(1, 2), make_rat(1, 2)});
    }
    // The two pieces cover all four vertices without overlap here.
    std::vector<std::size_t> covered;
    for (const auto& s : dec.simplices)
        covered.insert(covered.end(), s.vertex_indices.begin(), s.vertex_indices.end());
    std::sort(covered.begin(), covered.end());
    CHECK(covered == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("decomposition input gates") {
    const LatticePolytope tri(2, iv({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK_THROWS_AS(decompose_minimal(tri, 1), IsASimplex);

    const LatticePolytope square(2, iv({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    CHECK_THROWS_AS(decompose_minimal(square, 1), NotMinimal);

    // Five vertices in the plane exceed the 2d cap outright.
    const LatticePolytope pent(2, iv({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}}));
    CHECK_THROWS_AS(decompose_minimal(pent, 1), NotMinimal);

    // Bipyramid over the diagonal square: dropping an equator vertex keeps an
    // lc Fano hull because the edge midpoints survive the re-hull.
    const LatticePolytope bp(
        3, iv({{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
    CHECK_THROWS_AS(decompose_minimal(bp, 1), NotMinimal);

    const LatticePolytope off(2, iv({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK_THROWS_AS(decompose_minimal(off, 1), PreconditionFailed);
}

TEST_CASE("multinomial bound values") {
    CHECK(multinomial_bound({2, 1}, 2) == 54);
    CHECK(multinomial_bound({2, 2}, 2) == 486);
    CHECK(multinomial_bound({1, 1, 1}, 3) == 48);
    // The (2, 1) factor uses the exceptional value 9 instead of 8.
    CHECK(multinomial_bound({2, 1}, 1) == 54);
    CHECK(multinomial_bound({1, 1}, 1) == 8);
    CHECK_THROWS_AS(multinomial_bound({}, 1), PreconditionFailed);
    CHECK_THROWS_AS(multinomial_bound({2, 0}, 1), PreconditionFailed);
}

TEST_CASE("shape sweep anatomy at the smallest range") {
    const auto records = section5_sweep(3, 2);
    REQUIRE(records.size() == 2);
    // Only (2, 1) at t = 2 and (1, 1, 1) at t = 3 are admissible for d = 3;
    // the (2, 2) shape is the excluded boundary case.
    CHECK(records[0].d_list == std::vector<std::size_t>{2, 1});
    CHECK(records[1].d_list == std::vector<std::size_t>{1, 1, 1});
    for (const auto& r : records) {
        CHECK(r.d == 3);
        CHECK(r.q == 2);
        CHECK(r.strict);
        CHECK(r.target == volume_bound(3, 2));
    }
}

TEST_CASE("shape sweep frozen counts") {
    const auto records = section5_sweep(6, 4, 2);
    CHECK(records.size() == 210);
    for (const auto& r : records) CHECK(r.strict);

    bool seen = false;
    for (const auto& r : records)
        if (r.d == 4 && r.q == 2 && r.t == 3 && r.d_list == std::vector<std::size_t>{2, 2, 2}) {
            CHECK(r.bound_value == 65610);
            CHECK(r.target == make_rat(815409, 4));
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("two-simplex estimate on the cross-polytope") {
    const LatticePolytope cross(2, kCross2);
    const Decomposition dec = decompose_minimal(cross, 1);
    const TwoSimplexCheck tc = two_simplex_bound_check(
        cross, dec.simplices[0].vertex_indices, dec.simplices[1].vertex_indices, 1);
    CHECK(tc.dual_vol == 8);
    CHECK(tc.rhs == 8);
    CHECK(tc.holds);
    CHECK(tc.bound_target == 9);
    CHECK(tc.below_target);

    CHECK_THROWS_AS(
        two_simplex_bound_check(cross, {0, 1}, dec.simplices[1].vertex_indices, 1),
        InvalidDecomposition);
}

TEST_CASE("five-vertex construction decomposes") {
    const LatticePolytope p(
        3, iv({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {-1, 0, 1}, {0, 0, -1}}));
    REQUIRE(is_fano(p));
    REQUIRE(is_lc(p, 1));
    if (is_minimal(p, 1)) {
        const Decomposition dec = decompose_minimal(p, 1);
        CHECK(dec.simplices.size() == 2);
        CHECK(check_decomp_relations(dec));
        const TwoSimplexCheck tc = two_simplex_bound_check(
            p, dec.simplices[0].vertex_indices, dec.simplices[1].vertex_indices, 1);
        CHECK(tc.holds);
        CHECK(tc.below_target);
    }
}
