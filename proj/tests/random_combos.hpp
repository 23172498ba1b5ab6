#pragma once

// Test-only generator of random content-homogeneous tableau combinations:
// fix a letter multiset, then spread it over arm/leg in several random ways
// so every term shares one shape and content.

#include "weylhom/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace weylhom::testing {

struct ComboGen {
    std::mt19937_64 rng;

    explicit ComboGen(std::uint64_t seed) : rng(seed) {}

    int pick(int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }

    TableauCombo make(int r) {
        const int b = pick(0, r - 1);
        const int max_letter = std::max(b + 1, pick(2, std::max(2, r)));
        std::vector<int> letters;
        std::vector<int> distinct(max_letter);
        std::iota(distinct.begin(), distinct.end(), 1);
        std::shuffle(distinct.begin(), distinct.end(), rng);
        for (int i = 0; i < b; ++i)
            letters.push_back(distinct[i]);
        while (static_cast<int>(letters.size()) < r)
            letters.push_back(pick(1, max_letter));

        TableauCombo combo;
        const int terms = pick(1, 3);
        for (int k = 0; k < terms; ++k) {
            std::vector<int> pool = letters;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> leg;
            std::vector<std::pair<int, int>> arm;
            for (int v : pool) {
                if (static_cast<int>(leg.size()) < b &&
                    std::find(leg.begin(), leg.end(), v) == leg.end())
                    leg.push_back(v);
                else
                    arm.emplace_back(v, 1);
            }
            if (arm.empty() || static_cast<int>(leg.size()) < b)
                continue;
            long coeff = pick(-5, 5);
            if (coeff == 0)
                coeff = 1;
            combo += normalize_tableau(arm, leg, coeff);
        }
        return combo;
    }
};

} // namespace weylhom::testing
