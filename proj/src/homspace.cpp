#include "weylhom/homspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylhom {

std::vector<LegIndex> enumerate_leg_indices(const Partition& lam, const Hook& h) {
    if (lam.degree() != h.degree())
        throw std::domain_error("leg indices need partitions of equal degree");
    const int m = lam.rows();
    const int b = h.leg();
    if (b == 0)
        return {LegIndex{}};
    if (b > m - 1)
        return {};
    std::vector<LegIndex> out;
    LegIndex cur(b);
    for (int i = 0; i < b; ++i)
        cur[i] = i + 2;
    for (;;) {
        out.push_back(cur);
        int i = b - 1;
        while (i >= 0 && cur[i] == m - (b - 1 - i))
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < b; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Composition DividedWord::content() const {
    int top = 0;
    for (auto& f : factors)
        for (auto& [letter, e] : f)
            top = std::max(top, letter);
    Composition beta(top, 0);
    for (auto& f : factors)
        for (auto& [letter, e] : f)
            beta[letter - 1] += e;
    return beta;
}

int DividedWord::degree() const {
    int d = 0;
    for (auto& f : factors)
        for (auto& [letter, e] : f)
            d += e;
    return d;
}

std::string DividedWord::to_string() const {
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i)
            out += " | ";
        for (size_t k = 0; k < factors[i].size(); ++k) {
            if (k)
                out += ' ';
            out += std::to_string(factors[i][k].first);
            if (factors[i][k].second != 1)
                out += "^(" + std::to_string(factors[i][k].second) + ")";
        }
    }
    return out;
}

DividedWord canonical_word(const Partition& lam) {
    DividedWord w;
    w.factors.reserve(lam.rows());
    for (int i = 1; i <= lam.rows(); ++i)
        w.factors.push_back({{i, lam.part(i)}});
    return w;
}

std::vector<RelationWord> relation_words(const Partition& lam) {
    const int m = lam.rows();
    std::vector<RelationWord> out;
    for (int i = 1; i <= m - 1; ++i) {
        for (int t = 1; t <= lam.part(i + 1); ++t) {
            DividedWord w;
            w.factors.reserve(m);
            for (int k = 1; k <= m; ++k) {
                if (k == i + 1) {
                    std::vector<std::pair<int, int>> f = {{i, t}};
                    if (lam.part(i + 1) - t > 0)
                        f.emplace_back(i + 1, lam.part(i + 1) - t);
                    w.factors.push_back(std::move(f));
                } else {
                    w.factors.push_back({{k, lam.part(k)}});
                }
            }
            out.push_back({i, t, std::move(w)});
        }
    }
    return out;
}

TableauCombo weight_map_image(const LegIndex& J, const DividedWord& w,
                              const Partition& lam, const Hook& h) {
    if (lam.degree() != h.degree())
        throw std::domain_error("degree mismatch");
    const int m = lam.rows();
    const int b = h.leg();
    if (static_cast<int>(w.factors.size()) != m)
        throw std::domain_error("word has the wrong number of factors");
    for (int i = 0; i < m; ++i) {
        int deg = 0;
        for (auto& [letter, e] : w.factors[i]) {
            if (letter < 1 || e < 1)
                throw std::domain_error("malformed divided word");
            deg += e;
        }
        if (deg != lam.part(i + 1))
            throw std::domain_error("word content incompatible with lambda");
    }
    if (static_cast<int>(J.size()) != b)
        throw std::domain_error("leg placement has the wrong length");
    for (size_t s = 0; s < J.size(); ++s)
        if (J[s] < 2 || J[s] > m || (s > 0 && J[s] <= J[s - 1]))
            throw std::domain_error("malformed leg placement");

    // odometer over the letter chosen from each split factor
    std::vector<size_t> choice(b, 0);
    TableauCombo raw;
    for (;;) {
        std::vector<int> leg_raw(b);
        std::vector<int> split_at(m, -1); // factor -> leg position
        for (int s = 0; s < b; ++s) {
            leg_raw[s] = w.factors[J[s] - 1][choice[s]].first;
            split_at[J[s] - 1] = s;
        }

        std::map<int, int> arm;
        BigInt coeff = 1;
        for (int f = 0; f < m; ++f) {
            for (auto& [letter, e] : w.factors[f]) {
                int rem = e;
                if (split_at[f] >= 0 && leg_raw[split_at[f]] == letter)
                    rem -= 1;
                if (rem == 0)
                    continue;
                int& total = arm[letter];
                coeff *= binomial(total + rem, rem); // divided-power merge
                total += rem;
            }
        }
        std::vector<std::pair<int, int>> arm_vec(arm.begin(), arm.end());
        raw += normalize_tableau(arm_vec, leg_raw, coeff);

        int s = b - 1;
        while (s >= 0 && choice[s] + 1 == w.factors[J[s] - 1].size()) {
            choice[s] = 0;
            --s;
        }
        if (s < 0)
            break;
        ++choice[s];
    }
    return straighten(raw);
}

RelationMatrix relation_matrix(const Partition& lam, const Hook& h) {
    RelationMatrix out;
    out.columns = enumerate_leg_indices(lam, h);
    if (out.columns.empty())
        return out;
    const size_t ncols = out.columns.size();
    for (const RelationWord& rw : relation_words(lam)) {
        Composition beta = rw.word.content();
        beta.resize(std::max<size_t>(beta.size(), lam.rows()), 0);
        std::vector<HookTableau> basis = standard_content_basis(h, beta);
        std::map<HookTableau, size_t> row_of;
        const size_t base = out.rows.size();
        for (size_t k = 0; k < basis.size(); ++k) {
            row_of.emplace(basis[k], base + k);
            out.rows.emplace_back(ncols, BigInt(0));
        }
        for (size_t col = 0; col < ncols; ++col) {
            TableauCombo image = weight_map_image(out.columns[col], rw.word, lam, h);
            for (auto& [t, c] : image.terms()) {
                auto it = row_of.find(t);
                if (it == row_of.end())
                    throw std::logic_error("straightened term missing from the "
                                           "standard basis of its content");
                out.rows[it->second][col] = c;
            }
        }
    }
    return out;
}

namespace {

long gfp_inv(long x, long p) {
    // extended euclid; x nonzero mod p
    long a = x % p, b = p, u = 1, v = 0;
    while (b != 0) {
        long q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    u %= p;
    return u < 0 ? u + p : u;
}

// in-place reduced row echelon form; returns pivot columns
std::vector<size_t> rref(GfpMatrix& m, long p) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0)
            ++piv;
        if (piv == m.rows)
            continue;
        if (piv != rank)
            for (size_t c = 0; c < m.cols; ++c)
                std::swap(m.at(piv, c), m.at(rank, c));
        const long inv = gfp_inv(m.at(rank, col), p);
        for (size_t c = col; c < m.cols; ++c)
            m.at(rank, c) = (m.at(rank, c) * inv) % p;
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0)
                continue;
            const long f = m.at(r, col);
            for (size_t c = col; c < m.cols; ++c)
                m.at(r, c) = (m.at(r, c) - f * m.at(rank, c) % p + p * p) % p;
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

} // namespace

KernelResult gfp_nullspace(GfpMatrix m, Prime p) {
    const long q = p.value();
    const size_t cols = m.cols;
    std::vector<size_t> pivots = rref(m, q);

    std::vector<long> pivot_col_of_row(pivots.size());
    std::vector<bool> is_pivot(cols, false);
    for (size_t k = 0; k < pivots.size(); ++k) {
        pivot_col_of_row[k] = static_cast<long>(pivots[k]);
        is_pivot[pivots[k]] = true;
    }

    KernelResult out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<long> v(cols, 0);
        v[f] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = (q - m.at(k, f)) % q;
        out.basis.push_back(std::move(v));
    }
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

int gfp_rank(GfpMatrix m, Prime p) {
    return static_cast<int>(rref(m, p.value()).size());
}

KernelResult oracle_from_matrix(const RelationMatrix& rel, Prime p) {
    if (rel.columns.empty())
        return {};
    GfpMatrix m(rel.rows.size(), rel.columns.size());
    for (size_t r = 0; r < rel.rows.size(); ++r)
        for (size_t c = 0; c < rel.columns.size(); ++c) {
            BigInt v;
            mpz_fdiv_r_ui(v.get_mpz_t(), rel.rows[r][c].get_mpz_t(),
                          static_cast<unsigned long>(p.value()));
            m.at(r, c) = v.get_si();
        }
    return gfp_nullspace(std::move(m), p);
}

KernelResult hom_dim_oracle(const Partition& lam, const Hook& h, Prime p) {
    return oracle_from_matrix(relation_matrix(lam, h), p);
}

KernelResult derived_relation_system(const Partition& lam, const Hook& h, Prime p) {
    if (lam.degree() != h.degree())
        throw std::domain_error("degree mismatch");
    const int b = h.leg();
    if (b == 0)
        return hom_dim_oracle(lam, h, p); // equation families index leg entries

    std::vector<LegIndex> B = enumerate_leg_indices(lam, h);
    if (B.empty())
        return {};
    std::map<LegIndex, size_t> col_of;
    for (size_t k = 0; k < B.size(); ++k)
        col_of.emplace(B[k], k);

    const long q = p.value();
    const int m = lam.rows();
    std::vector<std::vector<long>> rows;
    auto bin = [&](long n, long k) { return binomial_mod(n, k, p); };

    for (const LegIndex& I : B) {
        const bool has2 = !I.empty() && I.front() == 2;
        if (!has2) {
            // adjacent rows (1, 2): coupling into every placement with a 2
            for (int t = 1; t <= lam.part(2); ++t) {
                std::vector<long> row(B.size(), 0);
                row[col_of.at(I)] = bin(lam.part(1) + t, t);
                const long c2 = bin(lam.part(1) + t - 1, t - 1);
                for (int u = 1; u <= b; ++u) {
                    LegIndex K;
                    K.reserve(b);
                    K.push_back(2);
                    for (int v = 0; v < b; ++v)
                        if (v != u - 1)
                            K.push_back(I[v]);
                    long sgn = (u % 2 == 0) ? c2 : (q - c2) % q;
                    row[col_of.at(K)] = (row[col_of.at(K)] + sgn) % q;
                }
                rows.push_back(std::move(row));
            }
        } else {
            for (int t = 1; t <= lam.part(2) - 1; ++t) {
                std::vector<long> row(B.size(), 0);
                row[col_of.at(I)] = bin(lam.part(1) + t - 1, t);
                rows.push_back(std::move(row));
            }
        }
        for (int i = 2; i <= m - 1; ++i) {
            const bool in_i = std::binary_search(I.begin(), I.end(), i);
            const bool in_i1 = std::binary_search(I.begin(), I.end(), i + 1);
            const int li = lam.part(i), li1 = lam.part(i + 1);
            if (in_i && !in_i1) {
                LegIndex K = I;
                *std::find(K.begin(), K.end(), i) = i + 1;
                std::sort(K.begin(), K.end());
                for (int t = 1; t <= li1; ++t) {
                    std::vector<long> row(B.size(), 0);
                    row[col_of.at(I)] = bin(li + t - 1, t);
                    row[col_of.at(K)] =
                        (row[col_of.at(K)] + bin(li + t - 1, t - 1)) % q;
                    rows.push_back(std::move(row));
                }
            } else if (!in_i && in_i1) {
                for (int t = 1; t <= li1 - 1; ++t) {
                    std::vector<long> row(B.size(), 0);
                    row[col_of.at(I)] = bin(li + t, t);
                    rows.push_back(std::move(row));
                }
            } else if (!in_i && !in_i1) {
                for (int t = 1; t <= li1; ++t) {
                    std::vector<long> row(B.size(), 0);
                    row[col_of.at(I)] = bin(li + t, t);
                    rows.push_back(std::move(row));
                }
            } else {
                for (int t = 1; t <= li1 - 1; ++t) {
                    std::vector<long> row(B.size(), 0);
                    row[col_of.at(I)] = bin(li + t - 1, t);
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    GfpMatrix mat(rows.size(), B.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < B.size(); ++c)
            mat.at(r, c) = rows[r][c];
    return gfp_nullspace(std::move(mat), p);
}

std::map<LegIndex, BigInt> witness_coeffs(const Partition& lam, const Hook& h) {
    if (lam.degree() != h.degree())
        throw std::domain_error("degree mismatch");
    if (lam.rows() < h.leg() + 2)
        throw std::domain_error("witness coefficients need m >= b + 2");
    std::map<LegIndex, BigInt> out;
    for (const LegIndex& I : enumerate_leg_indices(lam, h)) {
        BigInt d = 1;
        for (size_t u = 1; u <= I.size(); ++u)
            for (int v = static_cast<int>(u); v <= I[u - 1] - 2; ++v)
                d *= -BigInt(lam.part(v + 1));
        out.emplace(I, std::move(d));
    }
    return out;
}

HookTableau canonical_tableau(const Partition& lam, const Hook& h) {
    if (lam.degree() != h.degree())
        throw std::domain_error("degree mismatch");
    const int b = h.leg();
    if (lam.rows() < b + 1)
        throw std::domain_error("canonical tableau needs m >= b + 1");
    HookTableau t;
    for (int i = 1; i <= lam.rows(); ++i) {
        int mult = lam.part(i) - (i >= 2 && i <= b + 1 ? 1 : 0);
        if (mult > 0)
            t.arm.emplace_back(i, mult);
    }
    for (int j = 2; j <= b + 1; ++j)
        t.leg.push_back(j);
    return t;
}

TableauCombo witness_image_of_canonical(const Partition& lam, const Hook& h,
                                        Prime p) {
    const DividedWord w = canonical_word(lam);
    TableauCombo sum;
    for (auto& [I, d] : witness_coeffs(lam, h))
        sum += d * weight_map_image(I, w, lam, h);
    return sum.reduced_mod(p);
}

} // namespace weylhom
