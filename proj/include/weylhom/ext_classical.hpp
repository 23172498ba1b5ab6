#pragma once

#include "weylhom/arith.hpp"
#include "weylhom/partitions.hpp"

#include <string>

namespace weylhom {

/// Integral Ext^1 between two hooks: either 0 or Z/2.
enum class ExtGroup { zero, z2 };

std::string to_string(ExtGroup g);

/// Ext^1 over the integers from Delta(a, 1^b) to Delta(a+d, 1^(b-d)):
/// Z/2 when r + d is odd, 0 when even. Requires d >= 2 (neighboring hooks
/// are out of range) and b >= d.
ExtGroup ext1_between_hooks(const Hook& h, int d);

/// Universal-coefficient consistency: the parity answer must match the
/// mod-2 Hom dimension between the same hooks (1 exactly when Z/2), and
/// the Hom spaces must vanish at p = 3, 5, 7.
bool ext1_cross_check(const Hook& h, int d);

/// Simple classical group families, with rank.
enum class ClassicalType { B, C, D };

enum class Nonvanishing { guaranteed_nonzero, unknown };

std::string to_string(Nonvanishing v);

/// Sufficient condition for a nonzero map between induced modules of the
/// rank-n classical group: the GL criterion gives dimension 1 and the
/// group-specific assumptions hold (p > 2 for types B and D; both n-th
/// parts zero for type D). One-directional: never claims vanishing.
Nonvanishing classical_nonvanishing(const Partition& lam, const Hook& mu, Prime p,
                                    ClassicalType type, int rank);

} // namespace weylhom
