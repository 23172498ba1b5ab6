#pragma once

#include "weylhom/arith.hpp"
#include "weylhom/partitions.hpp"

#include <string>
#include <vector>

namespace weylhom {

/// Which Garnir-content template matched, with its parameters. The
/// templates write lambda as p-multiples a_i*p (the last one lowered by
/// m' < p, and by an extra 1 per row past the leg in the long-tail case),
/// padded with single-box rows.
struct LoubertCase {
    enum class Tag { none, i, ii, iii } tag = Tag::none;
    int n_prime = 0;
    int m_prime = 0;
    std::vector<long> a;
};

struct LoubertResult {
    int dim = 0;
    LoubertCase kase;
};

/// Garnir-content classification of Hom(Delta(lambda), Delta(h)) for
/// p > 2 (Loubert's criterion, transported from Specht modules). Requires
/// p > 2 and m >= b + 1.
LoubertResult loubert_decide(const Partition& lam, const Hook& h, Prime p);

/// Rebuilds lambda from a matched template; the inverse of the matcher.
Partition loubert_reconstruct(const LoubertCase& kase, const Hook& h, Prime p);

struct LoubertDiscrepancy {
    Partition lambda;
    Hook hook;
    int dim_loubert = 0;
    int dim_criterion = 0;
};

/// Compares the Garnir-content route against the divisibility criterion on
/// every (lambda, hook) pair of degree r with m >= b + 1. Expected empty.
std::vector<LoubertDiscrepancy> loubert_equivalence_check(int r, Prime p);

} // namespace weylhom
