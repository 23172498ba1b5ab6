#include "weylhom/ext_classical.hpp"

#include "weylhom/criterion.hpp"

#include <stdexcept>

namespace weylhom {

std::string to_string(ExtGroup g) {
    return g == ExtGroup::z2 ? "Z/2" : "0";
}

ExtGroup ext1_between_hooks(const Hook& h, int d) {
    if (d < 2)
        throw std::invalid_argument("ext1_between_hooks needs d >= 2");
    if (h.leg() < d)
        throw std::domain_error("the target hook (a+d, 1^(b-d)) needs b >= d");
    return (h.degree() + d) % 2 != 0 ? ExtGroup::z2 : ExtGroup::zero;
}

bool ext1_cross_check(const Hook& h, int d) {
    const bool torsion = ext1_between_hooks(h, d) == ExtGroup::z2;
    const Partition target = Hook(h.arm() + d, h.leg() - d).to_partition();
    const int dim2 = hom_dim_hook_source(h, target, Prime(2)).dim;
    if (torsion != (dim2 == 1))
        return false;
    for (long p : {3L, 5L, 7L})
        if (hom_dim_hook_source(h, target, Prime(p)).dim != 0)
            return false;
    return true;
}

std::string to_string(Nonvanishing v) {
    return v == Nonvanishing::guaranteed_nonzero ? "guaranteed_nonzero" : "unknown";
}

Nonvanishing classical_nonvanishing(const Partition& lam, const Hook& mu, Prime p,
                                    ClassicalType type, int rank) {
    if (rank < 1)
        throw std::invalid_argument("rank must be >= 1");
    const Partition mup = mu.to_partition();
    if (lam.rows() > rank || mup.rows() > rank)
        throw std::domain_error("partitions must have at most `rank` parts");
    if ((type == ClassicalType::B || type == ClassicalType::D) && p.value() == 2)
        return Nonvanishing::unknown;
    if (type == ClassicalType::D && (lam.part(rank) != 0 || mup.part(rank) != 0))
        return Nonvanishing::unknown;
    return hom_dim_criterion(lam, mu, p).dim == 1 ? Nonvanishing::guaranteed_nonzero
                                                  : Nonvanishing::unknown;
}

} // namespace weylhom
