#include "maxchord/diagram.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace maxchord;

namespace {

ChordDiagram random_diagram(int n, std::mt19937& rng) {
    std::vector<int> points(2 * n);
    std::iota(points.begin(), points.end(), 0);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<int> mate(2 * n);
    for (int c = 0; c < n; ++c) {
        mate[points[2 * c]] = points[2 * c + 1];
        mate[points[2 * c + 1]] = points[2 * c];
    }
    return ChordDiagram(mate);
}

SymmetryElement random_element(int m, std::mt19937& rng) {
    switch (rng() % 3) {
    case 0: return SymmetryElement::rotation(m, static_cast<int>(rng() % m));
    case 1: return SymmetryElement::reflection_through_points(m, static_cast<int>(rng() % m));
    default: return SymmetryElement::reflection_through_arcs(m, static_cast<int>(rng() % m));
    }
}

const ChordDiagram crossing = ChordDiagram({2, 3, 0, 1});
const ChordDiagram nested = ChordDiagram::from_pairs({{0, 3}, {1, 2}});
const ChordDiagram single = ChordDiagram({1, 0});

} // namespace

TEST_CASE("diagram construction and validation") {
    CHECK(ChordDiagram::from_pairs({{0, 1}}) == single);
    CHECK(single.chords() == 1);
    CHECK(crossing.chords() == 2);
    CHECK(crossing.chord_pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

    CHECK(ChordDiagram({}).points() == 0); // empty diagram is the recursion base

    CHECK_THROWS_WITH_AS(ChordDiagram::from_pairs({{0, 0}}), doctest::Contains("self-pair at point 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(ChordDiagram::from_pairs({{0, 1}, {1, 2}}), doctest::Contains("duplicate point 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(ChordDiagram::from_pairs({{0, 4}, {1, 2}}), doctest::Contains("out of range"),
                         std::invalid_argument);
    CHECK_THROWS_AS(ChordDiagram({1, 0, 2}), std::invalid_argument);    // odd length
    CHECK_THROWS_AS(ChordDiagram({1, 0, 3, 0}), std::invalid_argument); // not an involution
    CHECK_THROWS_AS(ChordDiagram({0, 1}), std::invalid_argument);       // fixed points
}

TEST_CASE("face walks") {
    const auto fw1 = face_walks(single);
    CHECK(fw1.count == 2);

    const auto fw2 = face_walks(crossing);
    CHECK(fw2.count == 1);
    REQUIRE(fw2.walks.size() == 1);
    CHECK(fw2.walks[0] == std::vector<int>{0, 3, 2, 1}); // orbit 0 -> 3 -> 2 -> 1

    CHECK(face_walks(nested).count == 3);
    CHECK(face_walks(ChordDiagram({})).count == 1);

    SUBCASE("walks partition the points and start at their smallest element") {
        std::mt19937 rng(20240811);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 7);
            const auto d = random_diagram(n, rng);
            const auto fw = face_walks(d);
            std::set<int> seen;
            for (const auto& walk : fw.walks) {
                CHECK(walk.front() == *std::min_element(walk.begin(), walk.end()));
                seen.insert(walk.begin(), walk.end());
            }
            CHECK(static_cast<int>(seen.size()) == 2 * n); // lengths sum to 2n, no repeats
            CHECK(fw.count == static_cast<int>(fw.walks.size()));
        }
    }
}

TEST_CASE("genus and maximality") {
    CHECK(genus(single) == 0);
    CHECK(genus(crossing) == 1);
    CHECK(genus(nested) == 0);
    CHECK(genus(ChordDiagram({})) == 0);
    // a planar pairing with three chords
    CHECK(genus(ChordDiagram::from_pairs({{0, 5}, {1, 2}, {3, 4}})) == 0);

    CHECK(is_maximal(crossing));
    CHECK_FALSE(is_maximal(single));
    CHECK_FALSE(is_maximal(nested));
    CHECK(is_maximal(ChordDiagram({})));

    SUBCASE("genus bounds hold on random diagrams") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 80; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 8);
            const auto d = random_diagram(n, rng);
            const int g = genus(d); // also asserts the parity relation internally
            CHECK(g >= 0);
            CHECK(g <= n / 2);
            if (is_maximal(d)) {
                CHECK(n % 2 == 0);
                CHECK(g == n / 2);
            }
        }
    }
}

TEST_CASE("symmetry elements") {
    const auto rot1 = SymmetryElement::rotation(4, 1);
    CHECK(rot1.apply(3) == 0);
    const auto refl_pts = SymmetryElement::reflection_through_points(4, 0); // i -> -i
    CHECK(refl_pts.apply(0) == 0);
    CHECK(refl_pts.apply(2) == 2);
    CHECK(refl_pts.apply(1) == 3);
    const auto refl_arcs = SymmetryElement::reflection_through_arcs(4, 1); // i -> 3-i
    CHECK(refl_arcs.apply(0) == 3);
    CHECK(refl_arcs.apply(1) == 2);

    CHECK(canonical_type2_axis(4) == refl_arcs);
    CHECK(canonical_type1_axis(4) == refl_pts);

    SUBCASE("every element is a bijection; reflections of each type behave as stated") {
        for (int m : {2, 4, 6, 10}) {
            for (const auto& s : dihedral_elements(m)) {
                std::set<int> image;
                for (int i = 0; i < m; ++i) image.insert(s.apply(i));
                CHECK(static_cast<int>(image.size()) == m);
                if (s.kind == SymmetryKind::reflection_arcs) {
                    for (int i = 0; i < m; ++i) CHECK(s.apply(i) != i); // no fixed points
                }
            }
            CHECK(dihedral_elements(m).size() == 2 * static_cast<size_t>(m));
        }
    }

    SUBCASE("composition matches pointwise composition and inverse cancels") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 200; ++trial) {
            const int m = 2 * (1 + static_cast<int>(rng() % 8));
            const auto a = random_element(m, rng);
            const auto b = random_element(m, rng);
            const auto c = compose(a, b);
            for (int i = 0; i < m; ++i) CHECK(c.apply(i) == a.apply(b.apply(i)));
            const auto e = compose(a, inverse(a));
            CHECK(e == SymmetryElement::rotation(m, 0));
        }
    }
}

TEST_CASE("apply_symmetry and is_fixed_by") {
    CHECK(apply_symmetry(crossing, SymmetryElement::rotation(4, 1)) == crossing);
    CHECK(apply_symmetry(crossing, SymmetryElement::rotation(4, 0)) == crossing);
    CHECK(apply_symmetry(nested, SymmetryElement::rotation(4, 1)) ==
          ChordDiagram::from_pairs({{1, 0}, {2, 3}}));

    CHECK(is_fixed_by(crossing, SymmetryElement::rotation(4, 1)));
    CHECK_FALSE(is_fixed_by(nested, SymmetryElement::rotation(4, 1)));
    CHECK(is_fixed_by(nested, SymmetryElement::rotation(4, 0)));

    CHECK_THROWS_AS(apply_symmetry(crossing, SymmetryElement::rotation(6, 1)), std::invalid_argument);

    SUBCASE("the dihedral group acts on diagrams") {
        std::mt19937 rng(4242);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 6);
            const auto d = random_diagram(n, rng);
            const auto a = random_element(2 * n, rng);
            const auto b = random_element(2 * n, rng);
            CHECK(apply_symmetry(d, compose(a, b)) == apply_symmetry(apply_symmetry(d, b), a));
            CHECK(apply_symmetry(apply_symmetry(d, a), inverse(a)) == d);
        }
    }

    SUBCASE("fixed iff the cyclic orbit is a singleton") {
        std::mt19937 rng(31337);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 5);
            const auto d = random_diagram(n, rng);
            const auto s = random_element(2 * n, rng);
            std::set<std::vector<int>> orbit;
            auto cur = d;
            do {
                cur = apply_symmetry(cur, s);
                orbit.insert(cur.mate_vector());
            } while (cur != d);
            CHECK(is_fixed_by(d, s) == (orbit.size() == 1));
        }
    }
}

TEST_CASE("axis chord classes") {
    SUBCASE("crossing pair under the arc axis: one mirror orbit") {
        const auto c = axis_chord_classes(crossing, SymmetryElement::reflection_through_arcs(4, 1));
        CHECK(c.vertical.empty());
        CHECK(c.horizontal.empty());
        REQUIRE(c.mirror_orbits.size() == 1);
        CHECK(c.mirror_orbits[0].first == std::pair{0, 2});
        CHECK(c.mirror_orbits[0].second == std::pair{1, 3});
    }
    SUBCASE("crossing pair under the point axis: one vertical, one horizontal") {
        const auto c = axis_chord_classes(crossing, SymmetryElement::reflection_through_points(4, 0));
        CHECK(c.vertical == std::vector<std::pair<int, int>>{{0, 2}});
        CHECK(c.horizontal == std::vector<std::pair<int, int>>{{1, 3}});
        CHECK(c.mirror_orbits.empty());
    }
    SUBCASE("single chord under the arc axis is horizontal") {
        const auto c = axis_chord_classes(single, SymmetryElement::reflection_through_arcs(2, 0));
        CHECK(c.horizontal == std::vector<std::pair<int, int>>{{0, 1}});
        CHECK(c.vertical.empty());
        CHECK(c.mirror_orbits.empty());
    }
    SUBCASE("rejects a diagram the reflection does not fix") {
        CHECK_THROWS_AS(axis_chord_classes(nested, SymmetryElement::reflection_through_points(4, 0)),
                        std::invalid_argument);
        CHECK_THROWS_AS(axis_chord_classes(crossing, SymmetryElement::rotation(4, 1)),
                        std::invalid_argument);
    }
    SUBCASE("the three classes partition the chords of any fixed diagram") {
        std::mt19937 rng(555);
        int checked = 0;
        for (int trial = 0; trial < 400; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 5);
            const auto d = random_diagram(n, rng);
            const auto s = random_element(2 * n, rng);
            if (!s.is_reflection() || !is_fixed_by(d, s)) continue;
            const auto c = axis_chord_classes(d, s);
            CHECK(c.vertical.size() + c.horizontal.size() + 2 * c.mirror_orbits.size() ==
                  static_cast<size_t>(n));
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("canonical form") {
    CHECK(canonical_form(nested) == canonical_form(apply_symmetry(nested, SymmetryElement::rotation(4, 1))));
    CHECK(canonical_form(crossing) == crossing); // already minimal
    CHECK(canonical_form(single) == single);

    SUBCASE("constant on dihedral orbits, and a class invariant") {
        std::mt19937 rng(808);
        for (int trial = 0; trial < 80; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 6);
            const auto d = random_diagram(n, rng);
            const auto canon = canonical_form(d);
            const auto s = random_element(2 * n, rng);
            CHECK(canonical_form(apply_symmetry(d, s)) == canon);
            CHECK_FALSE(canon.mate_vector() > d.mate_vector()); // minimal over the orbit
        }
    }
}

TEST_CASE("chord crossing test") {
    CHECK(chords_cross({0, 2}, {1, 3}));
    CHECK_FALSE(chords_cross({0, 3}, {1, 2}));
    CHECK_FALSE(chords_cross({0, 1}, {2, 3}));
    CHECK(chords_cross({1, 3}, {2, 0})); // order within a pair does not matter
}

TEST_CASE("diagram text round trip") {
    CHECK(to_text(crossing) == "2 3 0 1");
    CHECK(parse_diagram("2 3 0 1") == crossing);
    CHECK(parse_diagram("0-2 1-3") == crossing);
    CHECK(parse_diagram(" 1 0 ") == single);
    CHECK_THROWS_AS(parse_diagram("2 3 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("0-0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("not a diagram"), std::invalid_argument);

    std::mt19937 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = random_diagram(1 + static_cast<int>(rng() % 8), rng);
        CHECK(parse_diagram(to_text(d)) == d);
    }
}
