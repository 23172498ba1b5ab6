#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylhom/loubert.hpp"

#include "weylhom/criterion.hpp"

using namespace weylhom;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
} // namespace

TEST_CASE("garnir-content route, frozen examples") {
    auto r1 = loubert_decide(P("5,1,1,1,1"), Hook(6, 3), Prime(3));
    CHECK(r1.dim == 1);
    CHECK(r1.kase.tag == LoubertCase::Tag::ii);
    CHECK(r1.kase.n_prime == 1);
    CHECK(r1.kase.m_prime == 1);
    CHECK(r1.kase.a == std::vector<long>{2});

    CHECK(loubert_decide(P("3,2,1"), Hook(5, 1), Prime(5)).dim == 0);

    auto r3 = loubert_decide(P("2,1,1"), Hook(2, 2), Prime(3));
    CHECK(r3.dim == 1);
    CHECK(r3.kase.tag == LoubertCase::Tag::i);

    auto r4 = loubert_decide(P("3,2,1"), Hook(5, 1), Prime(3));
    CHECK(r4.dim == 1);
    CHECK(r4.kase.tag == LoubertCase::Tag::iii);

    CHECK_THROWS_AS(loubert_decide(P("2,1,1"), Hook(2, 2), Prime(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(loubert_decide(P("2,2"), Hook(2, 2), Prime(3)),
                    std::domain_error); // m < b + 1
}

TEST_CASE("matched templates reconstruct the input partition") {
    for (long pv : {3L, 5L, 7L}) {
        Prime p(pv);
        for (int r = 1; r <= 9; ++r)
            for (const Partition& lam : enumerate_partitions(r, r))
                for (const Hook& h : enumerate_hooks(r)) {
                    if (lam.rows() < h.leg() + 1)
                        continue;
                    auto res = loubert_decide(lam, h, p);
                    if (res.dim == 1) {
                        CHECK(loubert_reconstruct(res.kase, h, p) == lam);
                        if (res.kase.tag == LoubertCase::Tag::ii)
                            CHECK(lam.degree() % pv == 0);
                    }
                }
    }
}

TEST_CASE("equivalence with the divisibility criterion") {
    // full r <= 9 runs in the acceptance suite
    for (long pv : {3L, 5L, 7L})
        for (int r = 1; r <= 7; ++r) {
            auto disc = loubert_equivalence_check(r, Prime(pv));
            for (auto& d : disc) {
                CAPTURE(d.lambda.to_string());
                CAPTURE(d.hook.to_string());
            }
            CHECK(disc.empty());
        }
    CHECK(loubert_equivalence_check(9, Prime(3)).empty()); // includes (5,1^4)
}
