#pragma once

#include "weylhom/arith.hpp"
#include "weylhom/partitions.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weylhom {

/// Hook-shaped tableau in canonical form: the arm is a multiset of letters
/// written as (letter, multiplicity) pairs with strictly increasing letters,
/// the leg a strictly increasing letter sequence. Any sign produced while
/// sorting the leg lives in the enclosing coefficient, not here.
struct HookTableau {
    std::vector<std::pair<int, int>> arm;
    std::vector<int> leg;

    int arm_degree() const;
    int leg_size() const { return static_cast<int>(leg.size()); }

    /// Standard means the least arm letter is below the leg head
    /// (vacuously true for an empty leg).
    bool is_standard() const;

    /// Letter occurrence counts, sized to the largest letter present.
    Composition content() const;

    std::string to_string() const; // "1^(2) 3 / 2 4"

    bool operator==(const HookTableau&) const = default;
    auto operator<=>(const HookTableau&) const = default;
};

/// Exact integer linear combination of canonical tableaux of one shape and
/// content. Zero coefficients are never stored.
class TableauCombo {
public:
    using Terms = std::map<HookTableau, BigInt>;

    TableauCombo() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Accumulates coefficient onto a canonical tableau, dropping zeros.
    void add_term(const HookTableau& t, const BigInt& c);

    BigInt coefficient(const HookTableau& t) const;

    TableauCombo& operator+=(const TableauCombo& other);
    TableauCombo& operator*=(const BigInt& scalar);
    friend TableauCombo operator+(TableauCombo a, const TableauCombo& b) {
        a += b;
        return a;
    }
    friend TableauCombo operator*(const BigInt& c, TableauCombo x) {
        x *= c;
        return x;
    }

    /// Coefficients reduced into {0, ..., p-1}, zero terms dropped.
    TableauCombo reduced_mod(Prime p) const;

    std::string to_string() const; // "-1 * 1 2 / 2" terms joined by " + "

    bool operator==(const TableauCombo&) const = default;

private:
    Terms terms_;
};

/// Canonicalizes a raw tableau: merges duplicate arm letters, drops zero
/// multiplicities, kills repeated leg letters, and sorts the leg, folding
/// the permutation sign into the coefficient. Result has at most one term.
TableauCombo normalize_tableau(const std::vector<std::pair<int, int>>& arm_raw,
                               const std::vector<int>& leg_raw,
                               const BigInt& coeff);

/// Rewrites every term into standard form. The result represents the same
/// module element; straightening a straightened combo is the identity.
TableauCombo straighten(const TableauCombo& x);
TableauCombo straighten(const HookTableau& t, const BigInt& coeff = 1);

/// Which non-standard term the stepwise rewriter expands next. All
/// policies must produce the same result; tests rely on that.
enum class StraightenPolicy { leftmost, rightmost, random_order };

TableauCombo straighten_with_policy(const TableauCombo& x, StraightenPolicy policy,
                                    std::uint64_t seed = 0);

/// All standard tableaux of the given hook shape and content, ordered by
/// leg, lexicographically. The content must sum to the hook degree.
std::vector<HookTableau> standard_content_basis(const Hook& h,
                                                const Composition& content);

struct RawTableau {
    std::vector<std::pair<int, int>> arm;
    std::vector<int> leg;
};

/// Parses "1^(2) 3 / 2 4" (also accepts 1^2 without parentheses). The leg
/// may be empty; the arm may not.
RawTableau parse_tableau(std::string_view text);

} // namespace weylhom
