#pragma once

#include "weylhom/arith.hpp"
#include "weylhom/homspace.hpp"
#include "weylhom/partitions.hpp"

#include <map>
#include <string>
#include <vector>

namespace weylhom {

/// One checked divisibility: what was checked, the exact integer, and
/// whether p divides it.
struct ConditionDiag {
    std::string description;
    BigInt value;
    bool divisible;
};

/// Decision certificate for one Hom-space query. dim is 1 exactly when
/// every listed condition is divisible; the witness (values of the
/// predicted kernel vector mod p) is present iff dim = 1 and m >= b + 2.
struct HomReport {
    int dim = 0;
    std::string case_tag;
    std::vector<ConditionDiag> conditions;
    std::map<LegIndex, long> witness;
};

/// Closed-form dimension of Hom(Delta(lambda), Delta(h)) over GF(p):
/// dominance kills m < b+1, a shared first column of length b+1 is removed
/// and the reduced pair recursed on, and otherwise the arithmetic
/// divisibility conditions decide.
HomReport hom_dim_criterion(const Partition& lam, const Hook& h, Prime p);

/// Hom(Delta(h), Delta(mu)) with the hook as the source, computed by
/// transposing both partitions (the transpose of a hook is a hook) and
/// delegating to hom_dim_criterion.
HomReport hom_dim_hook_source(const Hook& h, const Partition& mu, Prime p);

/// All partitions of the same degree reachable from lam by moving c >= 1
/// boxes from one row to an earlier row.
std::vector<Partition> carter_payne_targets(const Partition& lam);

/// One criterion-vs-oracle comparison.
struct SweepRow {
    Partition lambda;
    Hook hook{1, 0};
    long p = 0;
    int dim_criterion = 0;
    int dim_oracle = 0;
    std::string case_tag;

    bool agree() const { return dim_criterion == dim_oracle; }
};

/// Every (lambda, hook, p) triple of degree r, criterion and oracle side
/// by side. Workers share nothing; rows come back in enumeration order
/// regardless of the thread count.
std::vector<SweepRow> sweep_compare(int r, const std::vector<Prime>& primes,
                                    unsigned threads = 1);

} // namespace weylhom
