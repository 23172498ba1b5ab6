#include "weylhom/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace weylhom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    if (parts_.empty())
        return {};
    std::vector<int> cols(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

Partition::QStat Partition::q_statistic() const {
    for (int i = rows(); i >= 1; --i)
        if (part(i) >= 2)
            return {i, part(i)};
    return {0, 0};
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

long parse_int(std::string_view tok) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad integer: '" + std::string(tok) + "'");
    return v;
}

} // namespace

Partition Partition::parse(std::string_view text) {
    std::string clean;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            clean += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (clean.empty())
        throw std::invalid_argument("empty partition string");

    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= clean.size()) {
        size_t comma = clean.find(',', pos);
        std::string_view tok(clean.data() + pos,
                             (comma == std::string::npos ? clean.size() : comma) - pos);
        if (tok.empty())
            throw std::invalid_argument("empty component in '" + clean + "'");
        size_t caret = tok.find('^');
        long value, repeat = 1;
        if (caret == std::string_view::npos) {
            value = parse_int(tok);
        } else {
            value = parse_int(tok.substr(0, caret));
            repeat = parse_int(tok.substr(caret + 1));
            if (repeat < 0)
                throw std::invalid_argument("negative repeat count");
        }
        for (long i = 0; i < repeat; ++i)
            parts.push_back(static_cast<int>(value));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Hook::Hook(int a, int b) : a_(a), b_(b) {
    if (a < 1 || b < 0)
        throw std::invalid_argument("hook requires arm >= 1 and leg >= 0");
}

Partition Hook::to_partition() const {
    std::vector<int> parts(1 + b_, 1);
    parts[0] = a_;
    return Partition(std::move(parts));
}

std::optional<Hook> Hook::from_partition(const Partition& p) {
    if (p.empty())
        return std::nullopt;
    for (int i = 2; i <= p.rows(); ++i)
        if (p.part(i) != 1)
            return std::nullopt;
    return Hook(p.part(1), p.rows() - 1);
}

Hook Hook::parse(std::string_view text) {
    auto h = from_partition(Partition::parse(text));
    if (!h)
        throw std::invalid_argument("not a hook: '" + std::string(text) + "'");
    return *h;
}

bool dominance_leq(const Partition& lam, const Partition& mu) {
    if (lam.degree() != mu.degree())
        throw std::domain_error("dominance compares partitions of equal degree");
    long sl = 0, sm = 0;
    int n = std::max(lam.rows(), mu.rows());
    for (int i = 1; i <= n; ++i) {
        sl += lam.part(i);
        sm += mu.part(i);
        if (sl > sm)
            return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(int r, int max_parts) {
    if (r < 1 || max_parts < 1)
        return {};
    std::vector<Partition> out;
    struct Rec {
        std::vector<Partition>& out;
        int max_parts;
        void go(std::vector<int>& prefix, int remaining, int max_val) {
            if (remaining == 0) {
                out.emplace_back(prefix);
                return;
            }
            if (static_cast<int>(prefix.size()) == max_parts)
                return;
            int slots = max_parts - static_cast<int>(prefix.size());
            for (int v = 1; v <= std::min(remaining, max_val); ++v) {
                if (static_cast<long>(v) * slots < remaining)
                    continue;
                prefix.push_back(v);
                go(prefix, remaining - v, v);
                prefix.pop_back();
            }
        }
    } rec{out, max_parts};
    std::vector<int> prefix;
    rec.go(prefix, r, r);
    return out;
}

std::vector<Hook> enumerate_hooks(int r) {
    std::vector<Hook> out;
    for (int a = r; a >= 1; --a)
        out.emplace_back(a, r - a);
    return out;
}

} // namespace weylhom
