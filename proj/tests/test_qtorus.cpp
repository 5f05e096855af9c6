#include <catch2/catch_amalgamated.hpp>

#include "qsc/qtorus.hpp"
#include "qsc/strata.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using namespace qsc;
using testsup::vec;

namespace {

TorusMonomial mono(const QTorus& t, const std::vector<long>& exps, const std::vector<long>& coeff) {
    TorusMonomial m;
    m.exps = vec(exps);
    m.coeff = ExpVec(vec(coeff));
    (void)t;
    return m;
}

Bicharacter q_twist(const RootSystem& rs, const std::vector<int>& sup, oracle::Rng& rng) {
    Bicharacter r(rs, sup, 1);
    for (std::size_t a = 0; a < sup.size(); ++a)
        for (std::size_t b = a + 1; b < sup.size(); ++b)
            r.set_entry(sup[a], sup[b], ExpVec::q_power(1, rng.pick(-3, 3)));
    return r;
}

}  // namespace

TEST_CASE("torus construction") {
    RootSystem a2(LieType::parse("A2"));
    std::vector<int> word{1, 2, 1};
    WeylElt w = WeylElt::from_word(a2, word);
    Bicharacter r = Bicharacter::trivial(a2, {1, 2});

    SECTION("full diagram leaves the base field") {
        CauchonDiagram d = cauchon_diagram_for(a2, word, w);
        QTorus t = build_torus(a2, word, d, r);
        REQUIRE(t.generators() == 0);
        REQUIRE(center_lattice(t, RelationsLattice(1)).ambient_rank() == 0);
    }
    SECTION("empty diagram gives the full torus with the skew pairing matrix") {
        CauchonDiagram d = cauchon_diagram_for(a2, word, WeylElt::identity(a2));
        QTorus t = build_torus(a2, word, d, r);
        REQUIRE(t.generators() == 3);
        long expect[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                REQUIRE(t.entry(a, b) == ExpVec::q_power(1, expect[a][b]));
    }
    SECTION("weights span the support lattice (asserted in the builder)") {
        for (const WeylElt& y : lower_interval(w)) {
            CauchonDiagram d = cauchon_diagram_for(a2, word, y);
            QTorus t = build_torus(a2, word, d, r);
            REQUIRE(t.weight_lattice() == qyw_lattice(a2, word, d));
        }
    }
}

TEST_CASE("monomial arithmetic") {
    RootSystem a2(LieType::parse("A2"));
    std::vector<int> word{1, 2, 1};
    CauchonDiagram d = cauchon_diagram_for(a2, word, WeylElt::identity(a2));
    Bicharacter r = Bicharacter::trivial(a2, {1, 2});
    QTorus t = build_torus(a2, word, d, r);

    SECTION("defining relation") {
        TorusMonomial z1 = mono(t, {1, 0, 0}, {0});
        TorusMonomial z2 = mono(t, {0, 1, 0}, {0});
        TorusMonomial p = multiply(t, z1, z2);
        REQUIRE(p.exps == vec({1, 1, 0}));
        REQUIRE(p.coeff == t.entry(0, 1));
        TorusMonomial q = multiply(t, z2, z1);
        REQUIRE(q.coeff.is_zero());  // already in normal order
    }
    SECTION("inverses cancel on both sides") {
        oracle::Rng rng(606);
        for (int iter = 0; iter < 40; ++iter) {
            TorusMonomial x = mono(t, {rng.pick(-3, 3), rng.pick(-3, 3), rng.pick(-3, 3)},
                                   {rng.pick(-3, 3)});
            TorusMonomial ix = inverse_monomial(t, x);
            REQUIRE(multiply(t, x, ix) == unit_monomial(t));
            REQUIRE(multiply(t, ix, x) == unit_monomial(t));
        }
    }
    SECTION("associativity, exhaustive over small exponents") {
        std::vector<long> range{-1, 0, 1};
        std::vector<TorusMonomial> ms;
        for (long a : range)
            for (long b : range)
                for (long c : range) ms.push_back(mono(t, {a, b, c}, {0}));
        for (const TorusMonomial& x : ms)
            for (const TorusMonomial& y : ms)
                for (const TorusMonomial& z : ms)
                    REQUIRE(multiply(t, multiply(t, x, y), z) ==
                            multiply(t, x, multiply(t, y, z)));
    }
    SECTION("commutation scalar is the skew form and its twist part is weight data") {
        oracle::Rng rng(7007);
        RootSystem b2(LieType::parse("B2"));
        std::vector<int> bword{1, 2, 1, 2};
        Bicharacter rr(b2, {1, 2}, 2);
        rr.set_entry(1, 2, ExpVec(vec({0, 1})));
        CauchonDiagram bd = cauchon_diagram_for(b2, bword, WeylElt::identity(b2));
        QTorus bt = build_torus(b2, bword, bd, rr);
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<Int> x(bt.generators()), y(bt.generators());
            for (std::size_t k = 0; k < bt.generators(); ++k) {
                x[k] = rng.pick(-2, 2);
                y[k] = rng.pick(-2, 2);
            }
            ExpVec s = commutation_scalar(bt, x, y);
            REQUIRE(s == -commutation_scalar(bt, y, x));
            // against the reordering cost computed by multiply
            TorusMonomial mx{x, ExpVec(2)}, my{y, ExpVec(2)};
            REQUIRE(s == multiply(bt, mx, my).coeff - multiply(bt, my, mx).coeff);
            // commuting past a single generator: the twist coordinates depend
            // only on the weight of the monomial
            for (std::size_t c = 0; c < bt.generators(); ++c) {
                std::vector<Int> ec(bt.generators());
                ec[c] = 1;
                ExpVec sc = commutation_scalar(bt, x, ec);
                RootVec wt(b2.rank());
                for (std::size_t a = 0; a < bt.generators(); ++a)
                    for (std::size_t k = 0; k < b2.rank(); ++k)
                        wt.c[k] += x[a] * bt.weight(a).c[k];
                ExpVec rpart = rr.eval(wt, bt.weight(c));
                for (std::size_t k = 1; k < 2; ++k) REQUIRE(sc.e[k] == rpart.e[k]);
            }
        }
    }
}

TEST_CASE("center lattices") {
    RootSystem a2(LieType::parse("A2"));
    std::vector<int> word{1, 2, 1};
    RelationsLattice none(1);

    SECTION("full torus of A2 has the diagonal center") {
        CauchonDiagram d = cauchon_diagram_for(a2, word, WeylElt::identity(a2));
        QTorus t = build_torus(a2, word, d, Bicharacter::trivial(a2, {1, 2}));
        IntLattice z = center_lattice(t, none);
        REQUIRE(z.rank() == 1);
        REQUIRE(z.contains(vec({1, 1, 1})));
    }
    SECTION("a commutative torus is all center") {
        QTorus t(a2, {1, 2}, {a2.simple_root(1), a2.simple_root(2)}, 1,
                 std::vector<ExpVec>(4, ExpVec(1)));
        REQUIRE(center_lattice(t, none) == IntLattice::full(2));
    }
    SECTION("untwisted center rank equals the kernel dimension formula") {
        for (const char* type : {"A2", "B2"}) {
            RootSystem rs(LieType::parse(type));
            WeylElt w0 = longest_element(rs);
            std::vector<int> w0word = w0.reduced_word();
            std::vector<int> sup;
            for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) sup.push_back(i);
            Bicharacter triv = Bicharacter::trivial(rs, sup);
            for (const WeylElt& y : lower_interval(w0)) {
                CauchonDiagram d = cauchon_diagram_for(rs, w0word, y);
                QTorus t = build_torus(rs, w0word, d, triv);
                REQUIRE(center_lattice(t, none).rank() == uniparameter_dimension(w0, y));
            }
        }
    }
    SECTION("q-power twists: center rank against the stratum lattice (reported)") {
        oracle::Rng rng(424242);
        RootSystem rs(LieType::parse("A2"));
        WeylElt w0 = longest_element(rs);
        std::vector<int> w0word = w0.reduced_word();
        int mismatches = 0;
        for (int iter = 0; iter < 10; ++iter) {
            Bicharacter r = q_twist(rs, {1, 2}, rng);
            for (const WeylElt& y : lower_interval(w0)) {
                CauchonDiagram d = cauchon_diagram_for(rs, w0word, y);
                QTorus t = build_torus(rs, w0word, d, r);
                std::size_t zrank = center_lattice(t, none).rank();
                std::size_t srank = stratum_dimension(w0, y, r, none);
                if (zrank != srank) {
                    ++mismatches;
                    WARN("center rank " << zrank << " vs stratum dimension " << srank << " at y = "
                                        << word_label(y.reduced_word()));
                }
            }
        }
        INFO("twisted center/stratum mismatches: " << mismatches);
        CHECK(mismatches == 0);  // asserted exactly by the acceptance suite
    }
}
