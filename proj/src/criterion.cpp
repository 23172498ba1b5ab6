#include "weylhom/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace weylhom {

namespace {

void push_gcd_condition(HomReport& rep, int x, int y, Prime p) {
    rep.conditions.push_back({"binomial_gcd(" + std::to_string(x) + ", " +
                                  std::to_string(y) + ")",
                              binomial_gcd(x, y), p_divides_binomial_gcd(x, y, p)});
}

Partition strip_first_column(const Partition& lam) {
    std::vector<int> rest;
    for (int p : lam.parts())
        if (p > 1)
            rest.push_back(p - 1);
    return Partition(std::move(rest));
}

} // namespace

HomReport hom_dim_criterion(const Partition& lam, const Hook& h, Prime p) {
    if (lam.degree() != h.degree())
        throw std::domain_error("hom dimension needs partitions of equal degree");
    const int m = lam.rows();
    const int b = h.leg();

    HomReport rep;
    if (m < b + 1) {
        rep.case_tag = "dominance";
        rep.dim = 0;
        return rep;
    }
    if (m == b + 1) {
        // both first columns have length b+1; remove them
        Partition reduced = strip_first_column(lam);
        if (reduced.rows() <= 1) {
            // reduced pair is a single row against itself (or empty)
            rep.case_tag = "column-removal:equal";
            rep.dim = 1;
            return rep;
        }
        HomReport inner = hom_dim_criterion(reduced, Hook(h.arm() - 1, 0), p);
        inner.case_tag = "column-removal:" + inner.case_tag;
        inner.witness.clear(); // the witness shape belongs to the reduced pair
        return inner;
    }

    const auto [q, lam_q] = lam.q_statistic();
    if (q >= b + 1) {
        rep.case_tag = "case-ii";
        for (int i = 1; i <= b - 1; ++i)
            push_gcd_condition(rep, lam.part(i), lam.part(i + 1) - 1, p);
        if (b >= 1)
            push_gcd_condition(rep, lam.part(b), lam.part(b + 1), p);
        for (int i = b + 1; i <= m - 1; ++i)
            push_gcd_condition(rep, lam.part(i) + 1, lam.part(i + 1), p);
    } else {
        rep.case_tag = "case-iii";
        for (int i = 1; i <= q - 1; ++i)
            push_gcd_condition(rep, lam.part(i), lam.part(i + 1) - 1, p);
        const long corner = lam_q + b + 2 - q;
        rep.conditions.push_back({"lambda[q] + b + 2 - q = " + std::to_string(corner),
                                  BigInt(corner), corner % p.value() == 0});
        if (m - b >= 3)
            rep.conditions.push_back(
                {"2 (rows exceed the leg by 3 or more)", BigInt(2), p.value() == 2});
    }

    rep.dim = 1;
    for (const auto& c : rep.conditions)
        if (!c.divisible)
            rep.dim = 0;
    if (rep.dim == 1) {
        for (auto& [I, d] : witness_coeffs(lam, h)) {
            BigInt r;
            mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(),
                          static_cast<unsigned long>(p.value()));
            rep.witness.emplace(I, r.get_si());
        }
    }
    return rep;
}

HomReport hom_dim_hook_source(const Hook& h, const Partition& mu, Prime p) {
    if (h.degree() != mu.degree())
        throw std::domain_error("hom dimension needs partitions of equal degree");
    HomReport rep =
        hom_dim_criterion(mu.transpose(), Hook(h.leg() + 1, h.arm() - 1), p);
    rep.case_tag = "transpose:" + rep.case_tag;
    return rep;
}

std::vector<Partition> carter_payne_targets(const Partition& lam) {
    std::set<Partition> out;
    const int m = lam.rows();
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int c = 1; c <= lam.part(j); ++c) {
                std::vector<int> parts = lam.parts();
                parts[i - 1] += c;
                parts[j - 1] -= c;
                bool ok = true;
                for (size_t k = 1; k < parts.size(); ++k)
                    if (parts[k] > parts[k - 1])
                        ok = false;
                if (ok)
                    out.emplace(Partition(std::move(parts)));
            }
    return {out.begin(), out.end()};
}

std::vector<SweepRow> sweep_compare(int r, const std::vector<Prime>& primes,
                                    unsigned threads) {
    struct Pair {
        Partition lam;
        Hook h;
    };
    std::vector<Pair> pairs;
    for (const Partition& lam : enumerate_partitions(r, r))
        for (const Hook& h : enumerate_hooks(r))
            pairs.push_back({lam, h});

    std::vector<SweepRow> rows(pairs.size() * primes.size());
    auto work = [&](size_t k) {
        const auto& [lam, h] = pairs[k];
        const RelationMatrix rel = relation_matrix(lam, h); // prime-independent
        for (size_t pi = 0; pi < primes.size(); ++pi) {
            SweepRow& row = rows[k * primes.size() + pi];
            row.lambda = lam;
            row.hook = h;
            row.p = primes[pi].value();
            row.dim_oracle = oracle_from_matrix(rel, primes[pi]).dim;
            HomReport rep = hom_dim_criterion(lam, h, primes[pi]);
            row.dim_criterion = rep.dim;
            row.case_tag = rep.case_tag;
        }
    };

    if (threads <= 1) {
        for (size_t k = 0; k < pairs.size(); ++k)
            work(k);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t k = next.fetch_add(1); k < pairs.size();
                     k = next.fetch_add(1))
                    work(k);
            });
        for (auto& th : pool)
            th.join();
    }
    return rows;
}

} // namespace weylhom
