#include <catch2/catch_amalgamated.hpp>

#include "qsc/rootsys.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using namespace qsc;
using testsup::mk;

TEST_CASE("cartan tables for the small types") {
    SECTION("A2") {
        RootSystem rs(LieType::parse("A2"));
        REQUIRE(rs.cartan_matrix() == mk({{2, -1}, {-1, 2}}));
        REQUIRE(rs.symmetrizers() == std::vector<Int>{1, 1});
        REQUIRE(rs.positive_roots().size() == 3);
        RootVec highest = rs.simple_root(1) + rs.simple_root(2);
        bool found = false;
        for (const RootVec& b : rs.positive_roots()) found = found || b == highest;
        REQUIRE(found);
    }
    SECTION("B2: alpha1 long") {
        RootSystem rs(LieType::parse("B2"));
        REQUIRE(rs.symmetrizers() == std::vector<Int>{2, 1});
        REQUIRE(rs.pairing(rs.simple_root(1), rs.simple_root(1)) == 4);
        REQUIRE(rs.pairing(rs.simple_root(2), rs.simple_root(2)) == 2);
        REQUIRE(rs.positive_roots().size() == 4);
    }
    SECTION("G2: d = (1,3)") {
        RootSystem rs(LieType::parse("G2"));
        REQUIRE(rs.symmetrizers() == std::vector<Int>{1, 3});
        REQUIRE(rs.positive_roots().size() == 6);
    }
    SECTION("positive root counts") {
        REQUIRE(RootSystem(LieType::parse("A3")).positive_roots().size() == 6);
        REQUIRE(RootSystem(LieType::parse("B3")).positive_roots().size() == 9);
        REQUIRE(RootSystem(LieType::parse("C3")).positive_roots().size() == 9);
        REQUIRE(RootSystem(LieType::parse("D4")).positive_roots().size() == 12);
        REQUIRE(RootSystem(LieType::parse("F4")).positive_roots().size() == 24);
        REQUIRE(RootSystem(LieType::parse("A1")).positive_roots().size() == 1);
        REQUIRE(RootSystem(LieType::parse("E6")).positive_roots().size() == 36);
        REQUIRE(RootSystem(LieType::parse("E7")).positive_roots().size() == 63);
        REQUIRE(RootSystem(LieType::parse("E8")).positive_roots().size() == 120);
    }
}

TEST_CASE("type validation") {
    REQUIRE_THROWS_AS(LieType::parse("D3"), std::invalid_argument);
    REQUIRE_THROWS_AS(LieType::parse("E9"), std::invalid_argument);
    REQUIRE_THROWS_AS(LieType::parse("F5"), std::invalid_argument);
    REQUIRE_THROWS_AS(LieType::parse("B1"), std::invalid_argument);
    REQUIRE_THROWS_AS(LieType::parse("H3"), std::invalid_argument);
    REQUIRE_THROWS_AS(LieType::parse("A"), std::invalid_argument);
    REQUIRE_NOTHROW(LieType::parse("E8"));
}

TEST_CASE("pairing values") {
    RootSystem rs(LieType::parse("A2"));
    SECTION("simple roots") {
        REQUIRE(rs.pairing(rs.simple_root(1), rs.simple_root(2)) == -1);
        RootVec theta = rs.simple_root(1) + rs.simple_root(2);
        REQUIRE(rs.pairing(theta, theta) == 2);
    }
    SECTION("omega_i against alpha_j") {
        for (const char* type : {"A2", "B2", "G2", "B3", "F4"}) {
            RootSystem r2(LieType::parse(type));
            for (int i = 1; i <= static_cast<int>(r2.rank()); ++i)
                for (int j = 1; j <= static_cast<int>(r2.rank()); ++j) {
                    Rat expect = (i == j) ? Rat(r2.sym(j)) : Rat(0);
                    REQUIRE(r2.pairing(r2.fundamental_weight(i), r2.simple_root(j)) == expect);
                }
        }
    }
    SECTION("coroot pairing of fundamental weights") {
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                REQUIRE(rs.coroot_pairing(rs.fundamental_weight(i), rs.simple_root(j)) ==
                        (i == j ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("pairing symmetry and root norms", "[property]") {
    oracle::Rng rng(4242);
    for (const char* type : {"A2", "B2", "G2", "B3"}) {
        RootSystem rs(LieType::parse(type));
        const std::size_t r = rs.rank();
        for (int iter = 0; iter < 50; ++iter) {
            RootVec x(r), y(r);
            for (std::size_t k = 0; k < r; ++k) {
                x.c[k] = rng.pick(-4, 4);
                y.c[k] = rng.pick(-4, 4);
            }
            REQUIRE(rs.pairing(x, y) == rs.pairing(y, x));
            WeightVec u(r), v(r);
            for (std::size_t k = 0; k < r; ++k) {
                u.c[k] = Rat(rng.pick(-4, 4));
                v.c[k] = Rat(rng.pick(-4, 4));
            }
            REQUIRE(rs.pairing(u, v) == rs.pairing(v, u));
            REQUIRE(rs.pairing(u, x) == rs.pairing(x, u));
        }
        for (const RootVec& beta : rs.positive_roots()) {
            Int norm = rs.pairing(beta, beta);
            REQUIRE(norm > 0);
            REQUIRE((norm == 2 || norm == 4 || norm == 6));
        }
    }
}

TEST_CASE("weight and root coordinate conversions invert each other") {
    for (const char* type : {"A2", "B2", "G2", "F4"}) {
        RootSystem rs(LieType::parse(type));
        for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) {
            RootVec alpha = rs.simple_root(i);
            WeightVec w = rs.root_to_weight(alpha);
            REQUIRE(rs.weight_to_root(w) == alpha);
        }
        // a weight outside the root lattice stays rational (B2: omega_2)
        if (std::string(type) == "B2") {
            std::vector<Rat> coords = rs.weight_to_root_coords(rs.fundamental_weight(2));
            REQUIRE(coords[0] == Rat(1, 2));
            REQUIRE(coords[1] == Rat(1));
            REQUIRE_THROWS_AS(rs.weight_to_root(rs.fundamental_weight(2)), std::invalid_argument);
        }
    }
}

TEST_CASE("mixed root systems are rejected") {
    RootSystem a(LieType::parse("A2"));
    RootSystem b(LieType::parse("B3"));
    REQUIRE_THROWS_AS(a.pairing(a.simple_root(1), b.simple_root(1)), std::invalid_argument);
}
