#include "weylhom/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weylhom {

namespace {

constexpr std::size_t kStraightenStepCap = 1'000'000;

[[noreturn]] void step_cap_exceeded() {
    throw std::runtime_error("straightening exceeded its iteration bound; "
                             "the rewrite failed to terminate");
}

} // namespace

int HookTableau::arm_degree() const {
    int d = 0;
    for (auto& [letter, mult] : arm)
        d += mult;
    return d;
}

bool HookTableau::is_standard() const {
    if (leg.empty())
        return true;
    return !arm.empty() && arm.front().first < leg.front();
}

Composition HookTableau::content() const {
    int top = 0;
    for (auto& [letter, mult] : arm)
        top = std::max(top, letter);
    for (int j : leg)
        top = std::max(top, j);
    Composition beta(top, 0);
    for (auto& [letter, mult] : arm)
        beta[letter - 1] += mult;
    for (int j : leg)
        beta[j - 1] += 1;
    return beta;
}

std::string HookTableau::to_string() const {
    std::string out;
    for (size_t i = 0; i < arm.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(arm[i].first);
        if (arm[i].second != 1)
            out += "^(" + std::to_string(arm[i].second) + ")";
    }
    out += " /";
    for (int j : leg) {
        out += ' ';
        out += std::to_string(j);
    }
    return out;
}

void TableauCombo::add_term(const HookTableau& t, const BigInt& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigInt TableauCombo::coefficient(const HookTableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? BigInt(0) : it->second;
}

TableauCombo& TableauCombo::operator+=(const TableauCombo& other) {
    for (auto& [t, c] : other.terms_)
        add_term(t, c);
    return *this;
}

TableauCombo& TableauCombo::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, c] : terms_)
        c *= scalar;
    return *this;
}

TableauCombo TableauCombo::reduced_mod(Prime p) const {
    TableauCombo out;
    for (auto& [t, c] : terms_) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(),
                      static_cast<unsigned long>(p.value()));
        out.add_term(t, r);
    }
    return out;
}

std::string TableauCombo::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto& [t, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += c.get_str() + " * " + t.to_string();
    }
    return out;
}

TableauCombo normalize_tableau(const std::vector<std::pair<int, int>>& arm_raw,
                               const std::vector<int>& leg_raw,
                               const BigInt& coeff) {
    std::map<int, int> arm_counts;
    for (auto& [letter, mult] : arm_raw) {
        if (letter < 1)
            throw std::invalid_argument("tableau letters must be >= 1");
        if (mult < 0)
            throw std::invalid_argument("arm multiplicities must be >= 0");
        if (mult > 0)
            arm_counts[letter] += mult;
    }
    for (int j : leg_raw)
        if (j < 1)
            throw std::invalid_argument("tableau letters must be >= 1");

    // sort the leg, tracking the permutation sign; repeats kill the term
    std::vector<int> leg = leg_raw;
    int inversions = 0;
    for (size_t i = 0; i < leg.size(); ++i)
        for (size_t j = i + 1; j < leg.size(); ++j) {
            if (leg[i] == leg[j])
                return {};
            if (leg[i] > leg[j])
                ++inversions;
        }
    std::sort(leg.begin(), leg.end());

    HookTableau t;
    t.arm.assign(arm_counts.begin(), arm_counts.end());
    t.leg = std::move(leg);
    TableauCombo out;
    out.add_term(t, (inversions % 2 == 0) ? coeff : BigInt(-coeff));
    return out;
}

namespace {

// One application of the rewrite law at the leg head. Precondition: t is
// canonical and not standard, so leg[0] <= least arm letter.
TableauCombo expand_head(const HookTableau& t) {
    const int j1 = t.leg.front();
    const int i1 = t.arm.empty() ? 0 : t.arm.front().first;
    std::vector<int> tail(t.leg.begin() + 1, t.leg.end());
    TableauCombo out;

    auto emit = [&](const std::vector<std::pair<int, int>>& arm, int new_head) {
        std::vector<int> leg_raw;
        leg_raw.reserve(tail.size() + 1);
        leg_raw.push_back(new_head);
        leg_raw.insert(leg_raw.end(), tail.begin(), tail.end());
        out += normalize_tableau(arm, leg_raw, BigInt(-1));
    };

    if (!t.arm.empty() && j1 == i1) {
        // absorb the head into the first arm entry, pull each later arm
        // letter down into the leg
        for (size_t s = 1; s < t.arm.size(); ++s) {
            auto arm = t.arm;
            arm[0].second += 1;
            arm[s].second -= 1;
            emit(arm, t.arm[s].first);
        }
    } else {
        // move the head into the arm as a fresh letter, pull each arm
        // letter down into the leg
        for (size_t s = 0; s < t.arm.size(); ++s) {
            auto arm = t.arm;
            arm[s].second -= 1;
            arm.insert(arm.begin(), {j1, 1});
            emit(arm, t.arm[s].first);
        }
    }
    return out;
}

TableauCombo straighten_one(const HookTableau& t,
                            std::map<HookTableau, TableauCombo>& memo,
                            std::size_t& steps) {
    if (t.is_standard()) {
        TableauCombo out;
        out.add_term(t, 1);
        return out;
    }
    if (auto it = memo.find(t); it != memo.end())
        return it->second;
    if (++steps > kStraightenStepCap)
        step_cap_exceeded();
    TableauCombo out;
    const TableauCombo expanded = expand_head(t);
    for (auto& [u, c] : expanded.terms())
        out += c * straighten_one(u, memo, steps);
    memo.emplace(t, out);
    return out;
}

} // namespace

TableauCombo straighten(const TableauCombo& x) {
    TableauCombo out;
    std::map<HookTableau, TableauCombo> memo;
    std::size_t steps = 0;
    for (auto& [t, c] : x.terms())
        out += c * straighten_one(t, memo, steps);
    return out;
}

TableauCombo straighten(const HookTableau& t, const BigInt& coeff) {
    TableauCombo x;
    x.add_term(t, coeff);
    return straighten(x);
}

TableauCombo straighten_with_policy(const TableauCombo& x, StraightenPolicy policy,
                                    std::uint64_t seed) {
    TableauCombo work = x;
    std::mt19937_64 gen(seed);
    std::size_t steps = 0;
    for (;;) {
        std::vector<HookTableau> pending;
        for (auto& [t, c] : work.terms())
            if (!t.is_standard())
                pending.push_back(t);
        if (pending.empty())
            return work;
        if (++steps > kStraightenStepCap)
            step_cap_exceeded();

        size_t pick = 0;
        switch (policy) {
        case StraightenPolicy::leftmost:
            pick = 0;
            break;
        case StraightenPolicy::rightmost:
            pick = pending.size() - 1;
            break;
        case StraightenPolicy::random_order:
            pick = static_cast<size_t>(gen() % pending.size());
            break;
        }
        const HookTableau chosen = pending[pick];
        const BigInt c = work.coefficient(chosen);
        work.add_term(chosen, -c); // remove
        work += c * expand_head(chosen);
    }
}

std::vector<HookTableau> standard_content_basis(const Hook& h,
                                                const Composition& content) {
    long total = 0;
    for (int c : content) {
        if (c < 0)
            throw std::invalid_argument("content entries must be >= 0");
        total += c;
    }
    if (total != h.degree())
        throw std::domain_error("content does not sum to the hook degree");

    std::vector<int> letters; // letters available for the leg
    for (size_t i = 0; i < content.size(); ++i)
        if (content[i] >= 1)
            letters.push_back(static_cast<int>(i + 1));

    const int b = h.leg();
    std::vector<HookTableau> out;
    if (b > static_cast<int>(letters.size()))
        return out;

    // walk b-subsets of `letters` in lexicographic order
    std::vector<int> idx(b);
    for (int i = 0; i < b; ++i)
        idx[i] = i;
    for (;;) {
        HookTableau t;
        t.leg.reserve(b);
        for (int i : idx)
            t.leg.push_back(letters[i]);
        for (size_t c = 0; c < content.size(); ++c) {
            int mult = content[c];
            if (std::binary_search(t.leg.begin(), t.leg.end(),
                                   static_cast<int>(c + 1)))
                mult -= 1;
            if (mult > 0)
                t.arm.emplace_back(static_cast<int>(c + 1), mult);
        }
        if (!t.arm.empty() && t.is_standard())
            out.push_back(std::move(t));

        if (b == 0)
            break;
        int i = b - 1;
        while (i >= 0 && idx[i] == static_cast<int>(letters.size()) - b + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < b; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const HookTableau& x, const HookTableau& y) { return x.leg < y.leg; });
    return out;
}

namespace {

int parse_letter(std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
        throw std::invalid_argument("bad tableau letter: '" + std::string(tok) + "'");
    return v;
}

} // namespace

RawTableau parse_tableau(std::string_view text) {
    std::string s(text);
    size_t slash = s.find('/');
    if (slash == std::string::npos || s.find('/', slash + 1) != std::string::npos)
        throw std::invalid_argument("tableau must contain exactly one '/'");

    auto tokens = [](std::string_view part) {
        std::vector<std::string> toks;
        std::string cur;
        for (char c : part) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) {
                    toks.push_back(cur);
                    cur.clear();
                }
            } else {
                cur += c;
            }
        }
        if (!cur.empty())
            toks.push_back(cur);
        return toks;
    };

    RawTableau raw;
    for (const std::string& tok : tokens(std::string_view(s).substr(0, slash))) {
        size_t caret = tok.find('^');
        if (caret == std::string::npos) {
            raw.arm.emplace_back(parse_letter(tok), 1);
        } else {
            std::string_view exp(tok);
            exp = exp.substr(caret + 1);
            if (exp.size() >= 2 && exp.front() == '(' && exp.back() == ')')
                exp = exp.substr(1, exp.size() - 2);
            raw.arm.emplace_back(parse_letter(std::string_view(tok).substr(0, caret)),
                                 parse_letter(exp));
        }
    }
    if (raw.arm.empty())
        throw std::invalid_argument("tableau arm may not be empty");
    for (const std::string& tok : tokens(std::string_view(s).substr(slash + 1)))
        raw.leg.push_back(parse_letter(tok));
    return raw;
}

} // namespace weylhom
