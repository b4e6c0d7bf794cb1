#include <catch2/catch_amalgamated.hpp>

#include "lcfano/optimizer.hpp"

using namespace lcfano;

TEST_CASE("candidate tuples") {
    const CandidateTuple c1 = y_candidate(3, 1, 1);
    CHECK(c1.x == RatVec(4, make_rat(1, 4)));
    CHECK(c1.f_first_d == make_rat(1, 64));
    CHECK(c1.f_all == make_rat(1, 256));

    const CandidateTuple c4 = y_candidate(3, 1, 4);
    CHECK(c4.x == RatVec{make_rat(1, 2), make_rat(1, 3), make_rat(1, 7), make_rat(1, 42)});
    CHECK(c4.f_all == make_rat(1, 1764));

    const CandidateTuple c3 = y_candidate(3, 1, 3);
    CHECK(c3.x == RatVec{make_rat(1, 2), make_rat(1, 3), make_rat(1, 12), make_rat(1, 12)});
    CHECK(c3.f_first_d == make_rat(1, 72));

    CHECK_THROWS_AS(y_candidate(3, 1, 0), IndexOutOfRange);
    CHECK_THROWS_AS(y_candidate(3, 1, 5), IndexOutOfRange);
    CHECK_THROWS_AS(y_candidate(1, 1, 1), PreconditionFailed);
}

TEST_CASE("closed-form minima") {
    const MinimizationResult f32 = minimize_candidates(3, 2, Target::first_d);
    CHECK(f32.optimal_l == 3);
    CHECK(f32.optimal_value == make_rat(2, 441));
    CHECK(!f32.exception_flag);

    const MinimizationResult a32 = minimize_candidates(3, 2, Target::all_d1);
    CHECK(a32.optimal_l == 4);
    CHECK(a32.optimal_value == make_rat(8, 815409));

    const MinimizationResult f41 = minimize_candidates(4, 1, Target::first_d);
    CHECK(f41.optimal_l == 4);
    CHECK(f41.optimal_value == make_rat(1, 3528));

    const MinimizationResult a21 = minimize_candidates(2, 1, Target::all_d1);
    CHECK(a21.optimal_l == 3);
    CHECK(a21.optimal_value == make_rat(1, 36));
}

TEST_CASE("exceptional pair and ties") {
    const MinimizationResult e21 = minimize_candidates(2, 1, Target::first_d);
    CHECK(e21.optimal_l == 1);
    CHECK(e21.optimal_value == make_rat(1, 9));
    CHECK(e21.exception_flag);
    REQUIRE(!e21.notes.empty());

    const MinimizationResult t22 = minimize_candidates(2, 2, Target::first_d);
    CHECK(t22.optimal_l == 1);
    CHECK(t22.equality_tuples.size() == 2);
    CHECK(t22.optimal_value == make_rat(8, 72));

    const MinimizationResult t31 = minimize_candidates(3, 1, Target::first_d);
    CHECK(t31.optimal_l == 2);
    CHECK(t31.equality_tuples.size() == 2);
    CHECK(t31.optimal_value == make_rat(1, 72));
}

TEST_CASE("strict chains") {
    CHECK(verify_strict_chains(3, 1));
    CHECK(verify_strict_chains(3, 2));
    CHECK(verify_strict_chains(4, 1));
    CHECK(verify_strict_chains(5, 3));
    CHECK_THROWS_AS(verify_strict_chains(2, 1), PreconditionFailed);
}

TEST_CASE("grid search tiny instances by hand") {
    const GridResult g4 = grid_oracle(2, 1, Target::first_d, make_rat(1, 4));
    CHECK(g4.feasible_count == 1);
    CHECK(g4.min_value == make_rat(1, 8));
    CHECK(g4.argmin == RatVec{make_rat(1, 2), make_rat(1, 4), make_rat(1, 4)});

    const GridResult g5 = grid_oracle(2, 1, Target::first_d, make_rat(1, 5));
    CHECK(g5.feasible_count == 1);
    CHECK(g5.min_value == make_rat(4, 25));
    CHECK(g5.argmin == RatVec{make_rat(2, 5), make_rat(2, 5), make_rat(1, 5)});

    const GridResult g5a = grid_oracle(2, 1, Target::all_d1, make_rat(1, 5));
    CHECK(g5a.min_value == make_rat(4, 125));
}

TEST_CASE("grid search hits the exact optimum when the optimizer is on the grid") {
    const GridResult g = grid_oracle(2, 1, Target::first_d, make_rat(1, 60));
    CHECK(g.min_value == make_rat(1, 9));
    CHECK(g.argmin == RatVec(3, make_rat(1, 3)));
}

TEST_CASE("grid search is deterministic across thread counts") {
    const GridResult a = grid_oracle(2, 1, Target::first_d, make_rat(1, 60), 1);
    const GridResult b = grid_oracle(2, 1, Target::first_d, make_rat(1, 60), 3);
    CHECK(a.min_value == b.min_value);
    CHECK(a.argmin == b.argmin);
    CHECK(a.feasible_count == b.feasible_count);
}

TEST_CASE("grid search input validation") {
    CHECK_THROWS_AS(grid_oracle(2, 1, Target::first_d, make_rat(2, 7)), GridTooCoarse);
    CHECK_THROWS_AS(grid_oracle(2, 1, Target::first_d, make_rat(1, 2)), GridTooCoarse);
    CHECK_THROWS_AS(grid_oracle(4, 1, Target::first_d, make_rat(1, 8)), PreconditionFailed);
}
