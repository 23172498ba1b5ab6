#include "weylhom/loubert.hpp"

#include "weylhom/criterion.hpp"

#include <stdexcept>

namespace weylhom {

namespace {

// rows lo..hi of lam must all be single boxes
bool tail_of_ones(const Partition& lam, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        if (lam.part(i) != 1)
            return false;
    return true;
}

// head rows 1..n'-1 must be exact p-multiples; fills a_1..a_{n'-1}
bool head_multiples(const Partition& lam, int n_prime, long p, std::vector<long>& a) {
    a.clear();
    for (int i = 1; i <= n_prime - 1; ++i) {
        if (lam.part(i) % p != 0)
            return false;
        a.push_back(lam.part(i) / p);
    }
    return true;
}

} // namespace

LoubertResult loubert_decide(const Partition& lam, const Hook& h, Prime p) {
    if (p.value() <= 2)
        throw std::invalid_argument("the Garnir-content route needs p > 2");
    if (lam.degree() != h.degree())
        throw std::domain_error("degree mismatch");
    const int m = lam.rows();
    const int b = h.leg();
    if (m < b + 1)
        throw std::domain_error("the Garnir-content route needs m >= b + 1");
    const long q = p.value();

    // (i): lambda = (a_1 p, ..., a_{n'} p - m', 1^{b-n'+1}), b+1 rows
    if (m == b + 1) {
        for (int np = 1; np <= b + 1; ++np) {
            if (!tail_of_ones(lam, np + 1, b + 1))
                continue;
            std::vector<long> a;
            if (!head_multiples(lam, np, q, a))
                continue;
            for (int mp = 0; mp < q; ++mp) {
                if ((lam.part(np) + mp) % q != 0)
                    continue;
                a.resize(np - 1);
                a.push_back((lam.part(np) + mp) / q);
                if (garnir_content_is_zero(a, p))
                    return {1, {LoubertCase::Tag::i, np, mp, a}};
            }
        }
    }

    // (ii): p | r and lambda = (a_1 p, ..., a_{n'} p - m', 1^{b-n'+2}), b+2 rows
    if (m == b + 2 && lam.degree() % q == 0) {
        for (int np = 1; np <= b; ++np) {
            if (!tail_of_ones(lam, np + 1, b + 2))
                continue;
            std::vector<long> a;
            if (!head_multiples(lam, np, q, a))
                continue;
            for (int mp = 0; mp < q; ++mp) {
                if ((lam.part(np) + mp) % q != 0)
                    continue;
                a.resize(np - 1);
                a.push_back((lam.part(np) + mp) / q);
                if (garnir_content_is_zero(a, p))
                    return {1, {LoubertCase::Tag::ii, np, mp, a}};
            }
        }
    }

    // (iii): lambda = (a_1 p, ..., a_b p, a_{b+1} p - 1, ..., a_{n'} p - 1 - m'),
    // n' = m rows, n' > b + 1
    if (m >= b + 2) {
        const int np = m;
        std::vector<long> a;
        bool head_ok = true;
        for (int i = 1; i <= b && head_ok; ++i) {
            if (lam.part(i) % q != 0)
                head_ok = false;
            else
                a.push_back(lam.part(i) / q);
        }
        for (int i = b + 1; i <= m - 1 && head_ok; ++i) {
            if ((lam.part(i) + 1) % q != 0)
                head_ok = false;
            else
                a.push_back((lam.part(i) + 1) / q);
        }
        if (head_ok) {
            for (int mp = 0; mp < q; ++mp) {
                if ((lam.part(m) + 1 + mp) % q != 0)
                    continue;
                a.resize(m - 1);
                a.push_back((lam.part(m) + 1 + mp) / q);
                if (garnir_content_is_zero(a, p))
                    return {1, {LoubertCase::Tag::iii, np, mp, a}};
            }
        }
    }

    return {0, {}};
}

Partition loubert_reconstruct(const LoubertCase& kase, const Hook& h, Prime p) {
    const long q = p.value();
    const int b = h.leg();
    std::vector<int> parts;
    switch (kase.tag) {
    case LoubertCase::Tag::none:
        throw std::invalid_argument("nothing to reconstruct");
    case LoubertCase::Tag::i:
    case LoubertCase::Tag::ii: {
        for (int i = 0; i + 1 < kase.n_prime; ++i)
            parts.push_back(static_cast<int>(kase.a[i] * q));
        parts.push_back(static_cast<int>(kase.a[kase.n_prime - 1] * q - kase.m_prime));
        const int ones =
            (kase.tag == LoubertCase::Tag::i) ? b - kase.n_prime + 1 : b - kase.n_prime + 2;
        for (int i = 0; i < ones; ++i)
            parts.push_back(1);
        break;
    }
    case LoubertCase::Tag::iii: {
        for (int i = 0; i < b; ++i)
            parts.push_back(static_cast<int>(kase.a[i] * q));
        for (int i = b; i + 1 < kase.n_prime; ++i)
            parts.push_back(static_cast<int>(kase.a[i] * q - 1));
        parts.push_back(
            static_cast<int>(kase.a[kase.n_prime - 1] * q - 1 - kase.m_prime));
        break;
    }
    }
    return Partition(std::move(parts));
}

std::vector<LoubertDiscrepancy> loubert_equivalence_check(int r, Prime p) {
    if (p.value() <= 2)
        throw std::invalid_argument("the Garnir-content route needs p > 2");
    std::vector<LoubertDiscrepancy> out;
    for (const Partition& lam : enumerate_partitions(r, r))
        for (const Hook& h : enumerate_hooks(r)) {
            if (lam.rows() < h.leg() + 1)
                continue;
            const int dl = loubert_decide(lam, h, p).dim;
            const int dc = hom_dim_criterion(lam, h, p).dim;
            if (dl != dc)
                out.push_back({lam, h, dl, dc});
        }
    return out;
}

} // namespace weylhom
