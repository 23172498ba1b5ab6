#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "random_combos.hpp"
#include "weylhom/tableaux.hpp"

#include <algorithm>

using namespace weylhom;
using weylhom::testing::ComboGen;

namespace {

HookTableau tab(std::vector<std::pair<int, int>> arm, std::vector<int> leg) {
    HookTableau t;
    t.arm = std::move(arm);
    t.leg = std::move(leg);
    return t;
}

TableauCombo single(const HookTableau& t, long c = 1) {
    TableauCombo x;
    x.add_term(t, c);
    return x;
}

Composition content_of_combo(const TableauCombo& x) {
    REQUIRE(!x.is_zero());
    return x.terms().begin()->first.content();
}

} // namespace

TEST_CASE("normalize sorts the leg with sign and merges the arm") {
    // one transposition: coeff picks up -1
    auto combo = normalize_tableau({{1, 1}}, {3, 2}, 1);
    REQUIRE(combo.size() == 1);
    CHECK(combo.coefficient(tab({{1, 1}}, {2, 3})) == -1);

    // repeated leg letter kills the term
    CHECK(normalize_tableau({{1, 1}}, {2, 2}, 1).is_zero());

    // already canonical
    auto c2 = normalize_tableau({{1, 2}}, {2}, 5);
    CHECK(c2.coefficient(tab({{1, 2}}, {2})) == 5);

    // duplicate arm letters merge, zero multiplicities drop
    auto c3 = normalize_tableau({{3, 1}, {1, 1}, {3, 1}, {2, 0}}, {}, 2);
    CHECK(c3.coefficient(tab({{1, 1}, {3, 2}}, {})) == 2);

    CHECK_THROWS_AS(normalize_tableau({{0, 1}}, {}, 1), std::invalid_argument);
}

TEST_CASE("standardness is the arm-head-below-leg-head test") {
    CHECK(tab({{1, 2}}, {2, 3}).is_standard());
    CHECK(!tab({{2, 2}}, {1}).is_standard());
    CHECK(tab({{1, 1}, {2, 1}}, {2}).is_standard());
    CHECK(tab({{2, 3}}, {}).is_standard()); // no leg, vacuous
    CHECK(!tab({{2, 1}}, {2}).is_standard());
}

TEST_CASE("straighten frozen expansions") {
    // antisymmetry of the two-box column
    CHECK(straighten(tab({{2, 1}}, {1})) == single(tab({{1, 1}}, {2}), -1));

    // leg head equal to the only arm letter: empty sum
    CHECK(straighten(tab({{1, 1}}, {1, 2})).is_zero());

    // one application of the head-below case
    CHECK(straighten(tab({{2, 2}}, {1})) ==
          single(tab({{1, 1}, {2, 1}}, {2}), -1));

    // head equal, two arm letters
    CHECK(straighten(tab({{1, 1}, {2, 1}}, {1, 3})) ==
          single(tab({{1, 2}}, {2, 3}), -1));

    // standard input is untouched
    auto s = single(tab({{1, 2}}, {2}), 7);
    CHECK(straighten(s) == s);
}

TEST_CASE("content frozen values") {
    CHECK(tab({{1, 2}}, {2}).content() == Composition{2, 1});
    CHECK(tab({{1, 1}, {3, 1}}, {2, 4}).content() == Composition{1, 1, 1, 1});
    CHECK(tab({{2, 3}}, {}).content() == Composition{0, 3});
}

TEST_CASE("standard basis of a content") {
    auto b1 = standard_content_basis(Hook(2, 1), {2, 1});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == tab({{1, 2}}, {2}));

    auto b2 = standard_content_basis(Hook(2, 1), {1, 1, 1});
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == tab({{1, 1}, {3, 1}}, {2}));
    CHECK(b2[1] == tab({{1, 1}, {2, 1}}, {3}));

    auto b3 = standard_content_basis(Hook(3, 0), {1, 2});
    REQUIRE(b3.size() == 1);
    CHECK(b3[0] == tab({{1, 1}, {2, 2}}, {}));

    CHECK_THROWS_AS(standard_content_basis(Hook(2, 1), {1, 1}), std::domain_error);
}

TEST_CASE("basis size matches the leg-placement count for partition contents") {
    for (int r = 2; r <= 8; ++r) {
        for (const Partition& lam : enumerate_partitions(r, r)) {
            Composition beta(lam.parts().begin(), lam.parts().end());
            for (const Hook& h : enumerate_hooks(r)) {
                const int m = lam.rows(), b = h.leg();
                const auto basis = standard_content_basis(h, beta);
                BigInt expect = binomial(m - 1, b);
                CHECK(BigInt(static_cast<long>(basis.size())) == expect);
            }
        }
    }
}

TEST_CASE("parse / print round-trip") {
    auto raw = parse_tableau("1^(2) 3 / 2 4");
    CHECK(raw.arm == std::vector<std::pair<int, int>>{{1, 2}, {3, 1}});
    CHECK(raw.leg == std::vector<int>{2, 4});
    CHECK(parse_tableau("2/1").arm == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(parse_tableau("2^2 / 1").arm == std::vector<std::pair<int, int>>{{2, 2}});
    CHECK_THROWS_AS(parse_tableau("1 2 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau("/1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau("1/2/3"), std::invalid_argument);

    ComboGen gen(7);
    for (int k = 0; k < 200; ++k) {
        auto combo = gen.make(2 + k % 7);
        for (auto& [t, c] : combo.terms()) {
            auto back = parse_tableau(t.to_string());
            auto normalized = normalize_tableau(back.arm, back.leg, 1);
            REQUIRE(normalized.size() == 1);
            CHECK(normalized.coefficient(t) == 1);
        }
    }
}

TEST_CASE("straightening properties: content, idempotence, linearity, confluence") {
    ComboGen gen(42);
    int nontrivial = 0;
    for (int k = 0; k < 600; ++k) {
        const int r = 2 + k % 7; // degrees 2..8
        TableauCombo x = gen.make(r);
        if (x.is_zero())
            continue;
        const Composition beta = content_of_combo(x);

        TableauCombo s = straighten(x);
        if (s != x)
            ++nontrivial;

        // all terms standard, content preserved
        for (auto& [t, c] : s.terms()) {
            CHECK(t.is_standard());
            CHECK(t.content() == beta);
        }

        // idempotence
        CHECK(straighten(s) == s);

        // confluence across expansion orders
        CHECK(straighten_with_policy(x, StraightenPolicy::leftmost) == s);
        CHECK(straighten_with_policy(x, StraightenPolicy::rightmost) == s);
        CHECK(straighten_with_policy(x, StraightenPolicy::random_order, k) == s);
        CHECK(straighten_with_policy(x, StraightenPolicy::random_order, k + 1) == s);

        // linearity against a second combo of the same content
        TableauCombo y;
        for (auto& [t, c] : x.terms()) {
            std::vector<std::pair<int, int>> arm = t.arm;
            std::vector<int> leg = t.leg;
            std::reverse(leg.begin(), leg.end());
            y += normalize_tableau(arm, leg, c + 2);
        }
        TableauCombo lhs = straighten(BigInt(3) * x + BigInt(-2) * y);
        TableauCombo rhs = BigInt(3) * straighten(x) + BigInt(-2) * straighten(y);
        CHECK(lhs == rhs);
    }
    CHECK(nontrivial > 100); // the generator must exercise real rewrites
}
