#include "ferrers/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ferrers {

namespace {

void validate(const std::vector<int>& parts)
{
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw domain_error("partition has a negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw domain_error("partition parts are not nonincreasing");
    }
    if (parts.size() >= 2 && parts[parts.size() - 2] == 0)
        throw domain_error("partition has more than one zero part");
}

Partition sorted_partition(std::vector<int> v)
{
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

void require_nonempty(const Partition& p, const char* op)
{
    if (p.empty())
        throw domain_error(std::string(op) + ": empty partition");
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    validate(parts_);
}

Partition Partition::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    if (s.empty()) return Partition{};

    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string_view tok(s.data() + pos,
                             (comma == std::string::npos ? s.size() : comma) - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw domain_error("cannot parse partition part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

long long Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::is_distinct() const noexcept
{
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] <= parts_[i + 1]) return false;
    return true;
}

std::string Partition::str() const
{
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

Partition append_zero(const Partition& p)
{
    std::vector<int> v = p.parts();
    v.push_back(0);
    return Partition(std::move(v));
}

Partition drop_last(const Partition& p)
{
    require_nonempty(p, "drop_last");
    std::vector<int> v = p.parts();
    v.pop_back();
    return Partition(std::move(v));
}

Partition phi_pointwise(Phi kind, const Partition& p)
{
    require_nonempty(p, "phi");
    std::vector<int> v = p.parts();
    const size_t n = v.size();
    switch (kind) {
        case Phi::plus:
            v.back() += 1;
            return sorted_partition(std::move(v));
        case Phi::minus:
            v.back() -= 1;
            return Partition(std::move(v));
        case Phi::plus_e:
            for (int& x : v) x += 2;
            return Partition(std::move(v));
        case Phi::minus_e:
            for (int& x : v) x -= 2;
            return Partition(std::move(v));
        case Phi::plus_o:
            for (size_t i = 0; i + 1 < n; ++i) v[i] += 2;
            v.back() += 1;
            return Partition(std::move(v));
        case Phi::minus_o:
            for (size_t i = 0; i + 1 < n; ++i) v[i] -= 2;
            v.back() -= 1;
            return sorted_partition(std::move(v));
        case Phi::star:
            for (int& x : v) x -= 1;
            return Partition(std::move(v));
    }
    throw domain_error("phi: unknown operator kind");
}

Partition phi_split(const Partition& p)
{
    require_nonempty(p, "phi_split");
    int best = -1;
    size_t best_index = 0;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        int x = p.parts()[i];
        if (x % 2 == 1 && x > best) {
            best = x;
            best_index = i;
        }
    }
    if (best < 0)
        throw domain_error("phi_split: no odd part");
    std::vector<int> v = p.parts();
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(best_index));
    v.push_back((best + 1) / 2);
    v.push_back((best - 1) / 2);
    return sorted_partition(std::move(v));
}

Partition phi_merge(const Partition& p)
{
    if (p.length() < 2)
        throw domain_error("phi_merge: needs at least two parts");
    std::vector<int> v = p.parts();
    int sum = v[v.size() - 1] + v[v.size() - 2];
    v.pop_back();
    v.back() = sum;
    return sorted_partition(std::move(v));
}

Partition conjugate(const Partition& p)
{
    if (p.has_zero_part())
        throw domain_error("conjugate: zero part present");
    if (p.empty()) return Partition{};
    std::vector<int> out(static_cast<size_t>(p.first()), 0);
    for (int col = 1; col <= p.first(); ++col) {
        int count = 0;
        for (int part : p.parts())
            if (part >= col) ++count;
        out[static_cast<size_t>(col - 1)] = count;
    }
    return Partition(std::move(out));
}

FrobeniusSymbol frobenius_symbol(const Partition& p)
{
    require_nonempty(p, "frobenius_symbol");
    if (p.has_zero_part())
        throw domain_error("frobenius_symbol: zero part present");
    const Partition conj = conjugate(p);
    int d = 0;
    while (d < p.length() && p.parts()[static_cast<size_t>(d)] >= d + 1) ++d;
    FrobeniusSymbol fs;
    fs.durfee_side = d;
    for (int i = 1; i <= d; ++i) {
        fs.top.push_back(p.parts()[static_cast<size_t>(i - 1)] - i);
        fs.bottom.push_back(conj.parts()[static_cast<size_t>(i - 1)] - i);
    }
    return fs;
}

Partition from_frobenius(const FrobeniusSymbol& fs)
{
    const int d = fs.durfee_side;
    if (d <= 0 || fs.top.size() != static_cast<size_t>(d) ||
        fs.bottom.size() != static_cast<size_t>(d))
        throw domain_error("from_frobenius: malformed symbol");
    for (int i = 0; i < d; ++i) {
        if (fs.top[static_cast<size_t>(i)] < 0 || fs.bottom[static_cast<size_t>(i)] < 0)
            throw domain_error("from_frobenius: negative entry");
        if (i + 1 < d && (fs.top[static_cast<size_t>(i)] <= fs.top[static_cast<size_t>(i + 1)] ||
                          fs.bottom[static_cast<size_t>(i)] <= fs.bottom[static_cast<size_t>(i + 1)]))
            throw domain_error("from_frobenius: rows not strictly decreasing");
    }
    std::vector<int> parts;
    for (int i = 0; i < d; ++i)
        parts.push_back(fs.top[static_cast<size_t>(i)] + i + 1);
    // Column lengths below the diagonal give the remaining rows.
    std::vector<int> cols;
    for (int j = 0; j < d; ++j)
        cols.push_back(fs.bottom[static_cast<size_t>(j)] + j + 1);
    for (int row = d + 1; row <= cols[0]; ++row) {
        int count = 0;
        for (int c : cols)
            if (c >= row) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

std::optional<std::string> p_omega_violation(const Partition& p)
{
    require_nonempty(p, "is_in_p_omega");
    const auto& v = p.parts();
    if (v.size() >= 2 && v[v.size() - 2] <= v.back())
        return "smallest part not unique";
    for (int x : v)
        if (x % 2 == 1 && x > 2 * p.last() + 1)
            return "odd part exceeds twice the smallest part plus 1";
    return std::nullopt;
}

std::optional<std::string> p_nu_violation(const Partition& p)
{
    require_nonempty(p, "is_in_p_nu");
    if (!p.is_distinct())
        return "parts not strictly decreasing";
    for (int x : p.parts())
        if (x % 2 == 1 && x >= 2 * p.last())
            return "odd part not less than twice the smallest part";
    return std::nullopt;
}

bool is_in_p_omega(const Partition& p) { return !p_omega_violation(p); }

bool is_in_p_nu(const Partition& p) { return !p_nu_violation(p); }

}  // namespace ferrers
