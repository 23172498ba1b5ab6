#pragma once

#include "weylhom/arith.hpp"
#include "weylhom/partitions.hpp"
#include "weylhom/tableaux.hpp"

#include <map>
#include <string>
#include <vector>

namespace weylhom {

/// Strictly increasing leg placement (j_1 < ... < j_b), entries in 2..m.
/// Indexes the weight-space basis of maps D(lambda) -> Delta(h); the empty
/// placement indexes the multiplication map when the hook has no leg.
using LegIndex = std::vector<int>;

/// "(2,4)" / "()"; used as a stable map key in reports and JSON output.
inline std::string leg_index_label(const LegIndex& idx) {
    std::string out = "(";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(idx[i]);
    }
    return out + ")";
}

/// All leg placements for the pair, lexicographically. Empty when the leg
/// is longer than m-1 (the weight space is then zero); the singleton {()}
/// when the hook has no leg.
std::vector<LegIndex> enumerate_leg_indices(const Partition& lam, const Hook& h);

/// Pure tensor of divided-power monomials, one factor per row of lambda.
/// Factor i is a sorted (letter, exponent) list with exponents >= 1.
struct DividedWord {
    std::vector<std::vector<std::pair<int, int>>> factors;

    Composition content() const;
    int degree() const;
    std::string to_string() const;

    bool operator==(const DividedWord&) const = default;
};

/// 1^(l1) x 2^(l2) x ... x m^(lm).
DividedWord canonical_word(const Partition& lam);

/// Generator of the relation submodule attached to adjacent rows (row,
/// row+1) and split depth t: factor `row` holds row^(l_row) and factor
/// row+1 holds row^(t) (row+1)^(l_{row+1}-t).
struct RelationWord {
    int row; // 1..m-1
    int t;   // 1..lambda_{row+1}
    DividedWord word;
};

/// All relation generators, in (row, t) order. Empty for a single row.
std::vector<RelationWord> relation_words(const Partition& lam);

/// Image of a divided word under the basis map indexed by J: splits one
/// letter out of each factor named by J into the leg (all choices, each
/// with coefficient 1), multiplies the rest into the arm with the exact
/// multinomial coefficients, and straightens.
TableauCombo weight_map_image(const LegIndex& J, const DividedWord& w,
                              const Partition& lam, const Hook& h);

/// Exact relation matrix: rows indexed by (relation word, standard tableau
/// of its content) in (row, t, leg-lex) order, columns by leg placement.
struct RelationMatrix {
    std::vector<LegIndex> columns;
    std::vector<std::vector<BigInt>> rows;
};

RelationMatrix relation_matrix(const Partition& lam, const Hook& h);

/// Nullspace over GF(p): dimension plus a reduced-echelon kernel basis
/// (each vector has a 1 in its own free column).
struct KernelResult {
    int dim = 0;
    std::vector<std::vector<long>> basis;
};

/// Dense matrix over GF(p), row-major, entries in 0..p-1.
struct GfpMatrix {
    size_t rows = 0, cols = 0;
    std::vector<long> a;

    GfpMatrix() = default;
    GfpMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    long& at(size_t r, size_t c) { return a[r * cols + c]; }
    long at(size_t r, size_t c) const { return a[r * cols + c]; }
};

KernelResult gfp_nullspace(GfpMatrix m, Prime p);
int gfp_rank(GfpMatrix m, Prime p);

/// Brute-force dimension of Hom(Delta(lambda), Delta(h)) over GF(p): the
/// nullity of the relation matrix, with the kernel in leg-placement
/// coordinates.
KernelResult hom_dim_oracle(const Partition& lam, const Hook& h, Prime p);

/// Same nullspace computed from the relation matrix already assembled
/// (assembly is prime-independent, so sweeps share it across primes).
KernelResult oracle_from_matrix(const RelationMatrix& m, Prime p);

/// The closed-form linear system on the leg coefficients, one equation
/// family per adjacent row pair; must agree with the oracle. Falls back to
/// the oracle when the hook has no leg (the families index leg entries).
KernelResult derived_relation_system(const Partition& lam, const Hook& h, Prime p);

/// Exact witness coefficients d_I: the predicted kernel vector, with
/// d = 1 on the least placement (2, ..., b+1). Requires m >= b+2.
std::map<LegIndex, BigInt> witness_coeffs(const Partition& lam, const Hook& h);

/// The standard tableau the canonical word maps to under the least leg
/// placement: leg (2, ..., b+1), arm the remaining content of lambda.
HookTableau canonical_tableau(const Partition& lam, const Hook& h);

/// Image of the canonical word under the witness map, reduced mod p. Its
/// canonical-tableau coefficient certifies the induced map is nonzero.
TableauCombo witness_image_of_canonical(const Partition& lam, const Hook& h,
                                        Prime p);

} // namespace weylhom
