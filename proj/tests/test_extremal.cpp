#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "lcfano/extremal.hpp"

using namespace lcfano;

namespace {

IntVec ivec(const std::vector<long>& xs) {
    IntVec v;
    for (const long x : xs) v.emplace_back(x);
    return v;
}

bool has_vertex(const std::vector<IntVec>& verts, const std::vector<long>& xs) {
    return std::count(verts.begin(), verts.end(), ivec(xs)) == 1;
}

}  // namespace

TEST_CASE("lattice vertices of the two families") {
    const ExtremalSimplex e31 = example43_simplex(3, 1);
    REQUIRE(e31.lattice_vertices.size() == 4);
    CHECK(has_vertex(e31.lattice_vertices, {1, -1, 0}));
    CHECK(has_vertex(e31.lattice_vertices, {-1, 2, 0}));
    CHECK(has_vertex(e31.lattice_vertices, {-1, -1, -1}));
    CHECK(has_vertex(e31.lattice_vertices, {-1, -1, 1}));

    const ExtremalSimplex e32 = example43_simplex(3, 2);
    CHECK(has_vertex(e32.lattice_vertices, {1, -2, 0}));
    CHECK(has_vertex(e32.lattice_vertices, {-2, 5, 0}));
    CHECK(has_vertex(e32.lattice_vertices, {-2, -2, -1}));
    CHECK(has_vertex(e32.lattice_vertices, {-2, -2, 1}));

    const ExtremalSimplex t21 = thm13_simplex(2, 1);
    CHECK(has_vertex(t21.lattice_vertices, {1, 0}));
    CHECK(has_vertex(t21.lattice_vertices, {-1, -2}));
    CHECK(has_vertex(t21.lattice_vertices, {-1, 2}));

    const ExtremalSimplex t32 = thm13_simplex(3, 2);
    CHECK(has_vertex(t32.lattice_vertices, {-2, -2, -42}));
    CHECK(has_vertex(t32.lattice_vertices, {-2, -2, 42}));

    CHECK_THROWS_AS(example43_simplex(2, 1), PreconditionFailed);
    CHECK_THROWS_AS(thm13_simplex(1, 1), PreconditionFailed);
    CHECK_THROWS_AS(dual_normal_form(3, 1), PreconditionFailed);
}

TEST_CASE("volumes of the families") {
    CHECK(normalized_volume(example43_simplex(3, 1).simplex()) == 12);
    CHECK(normalized_volume(thm13_simplex(2, 1).simplex()) == 8);
    CHECK(normalized_volume(thm13_simplex(3, 2).simplex()) == 1764);
    CHECK(normalized_volume(dual_normal_form(3, 2).simplex()) == make_rat(441, 2));
    CHECK(example43_simplex(4, 3).expected_vol ==
          normalized_volume(example43_simplex(4, 3).simplex()));
}

TEST_CASE("expected barycentric tuples") {
    const ExtremalSimplex e31 = example43_simplex(3, 1);
    const RatVec beta = barycentric_raw(e31.vertices, RatVec(3, Rat(0)));
    CHECK(beta == e31.expected_beta);
    CHECK(beta == RatVec{make_rat(1, 2), make_rat(1, 3), make_rat(1, 12), make_rat(1, 12)});

    const ExtremalSimplex t21 = thm13_simplex(2, 1);
    CHECK(barycentric_raw(t21.vertices, RatVec(2, Rat(0))) ==
          RatVec{make_rat(1, 2), make_rat(1, 4), make_rat(1, 4)});
}

TEST_CASE("weight vectors") {
    const WeightVector w31 = conrad_weights(example43_simplex(3, 1));
    CHECK(w31.w == IntVec{Int(6), Int(4), Int(1), Int(1)});
    CHECK(w31.reduced);
    const WeightVector w32 = conrad_weights(example43_simplex(3, 2));
    CHECK(w32.w == IntVec{Int(28), Int(12), Int(1), Int(1)});
    CHECK(w32.reduced);

    // Exact linear relation.
    const ExtremalSimplex e43 = example43_simplex(4, 3);
    const WeightVector w43 = conrad_weights(e43);
    for (std::size_t c = 0; c < 4; ++c) {
        Rat sum = 0;
        for (std::size_t i = 0; i < 5; ++i) sum += Rat(w43.w[i]) * e43.vertices[i][c];
        CHECK(sum == 0);
    }

    // No weights without 0 in the interior.
    const RationalSimplex shifted(
        2, RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(3), Rat(3)}});
    CHECK_THROWS_AS(conrad_weights(shifted), OriginNotInterior);
}

TEST_CASE("lc certificates") {
    CHECK(lc_certificate(example43_simplex(3, 1)));
    CHECK(lc_certificate(example43_simplex(5, 4)));
    CHECK(lc_certificate(thm13_simplex(2, 1)));
    CHECK(lc_certificate(thm13_simplex(4, 3)));
    CHECK(lc_certificate(SimplexFamily::volume_extremal, 6, 2));
    CHECK_THROWS_AS(lc_certificate(dual_normal_form(3, 2)), PreconditionFailed);
}

TEST_CASE("transport onto the normal form") {
    CHECK(verify_prop44(3, 2).ok);
    CHECK(verify_prop44(3, 3).ok);
    CHECK(verify_prop44(4, 2).ok);
    CHECK(verify_prop44(5, 5).ok);
    CHECK(!verify_prop44(2, 2).ok);
    CHECK(!verify_prop44(3, 1).ok);
}

TEST_CASE("product identity on the families") {
    CHECK(product_identity_check(example43_simplex(3, 1).simplex()));
    CHECK(product_identity_check(thm13_simplex(3, 2).simplex()));
    const Rat vol = normalized_volume(example43_simplex(3, 1).simplex());
    const Rat dv = normalized_volume(dual_simplex(example43_simplex(3, 1).simplex()));
    CHECK(vol * dv == 864);
}

TEST_CASE("axis-aligned normal forms of fixed height") {
    const NormalFormCheck unit = lemma46_normal_form_check(3, 1, Int(1), {Int(0), Int(0)});
    CHECK(unit.ok);
    CHECK(unit.attains);
    CHECK(unit.vol == 12);

    const NormalFormCheck tall = lemma46_normal_form_check(3, 1, Int(2), {Int(0), Int(1)});
    CHECK(tall.ok);
    CHECK(!tall.attains);
    CHECK(tall.vol == 24);

    CHECK_THROWS_AS(lemma46_normal_form_check(3, 1, Int(2), {Int(0), Int(5)}),
                    PreconditionFailed);
    CHECK_THROWS_AS(lemma46_normal_form_check(3, 1, Int(0), {Int(0), Int(0)}),
                    PreconditionFailed);
}

TEST_CASE("family labels") {
    CHECK(kind_label(SimplexFamily::dual_extremal) == std::string("example43"));
    CHECK(kind_label(SimplexFamily::volume_extremal) == std::string("thm13"));
    CHECK(kind_label(SimplexFamily::dual_normal_form) == std::string("dual_normal_form"));
}
