#include "ferrers/families.hpp"

#include <algorithm>
#include <array>

namespace ferrers {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    bool graph;
    bool distinct;
    bool trivariate;
};

constexpr std::array<FamilyInfo, 13> kFamilies{{
    {Family::b_nu, "b_nu", true, true, true},
    {Family::b_omega, "b_omega", true, false, true},
    {Family::b1_nu, "b1_nu", true, true, false},
    {Family::b2_nu, "b2_nu", true, true, false},
    {Family::b3_nu, "b3_nu", true, true, false},
    {Family::b4_nu, "b4_nu", true, true, false},
    {Family::b1_omega, "b1_omega", true, false, false},
    {Family::b1p_omega, "b1p_omega", true, false, false},
    {Family::b2_omega, "b2_omega", true, false, false},
    {Family::b2p_omega, "b2p_omega", true, false, false},
    {Family::b3_omega, "b3_omega", true, false, false},
    {Family::p_omega, "p_omega", false, false, false},
    {Family::p_nu, "p_nu", false, false, false},
}};

const FamilyInfo& info(Family f)
{
    for (const auto& fi : kFamilies)
        if (fi.family == f) return fi;
    throw domain_error("unknown family");
}

// z-statistic of a graph member (the exponent recorded by z).
int z_stat(Family f, const OddFerrersGraph& g)
{
    switch (f) {
        case Family::b_nu:
        case Family::b_omega:
        case Family::b1_nu:
        case Family::b1_omega:
            return g.rows() - 1;
        case Family::b2_nu:
        case Family::b1p_omega:
            return g.cols() - 1;
        case Family::b3_nu:
        case Family::b2p_omega:
            return g.cols() - g.rows();
        case Family::b2_omega:
            return g.rows() - g.cols();
        case Family::b4_nu:
        case Family::b3_omega:
            return g.sharp();
        default:
            throw domain_error("z_stat: not a graph family");
    }
}

void rec_partitions(long long remaining, int max_part, int remaining_parts,
                    std::vector<int>& acc, std::vector<Partition>& out)
{
    if (remaining_parts == 0) {
        if (remaining == 0) out.push_back(Partition(acc));
        return;
    }
    // Each of the remaining parts is between 1 and max_part.
    for (int p = std::min<long long>(max_part, remaining); p >= 1; --p) {
        if (static_cast<long long>(remaining_parts) * p < remaining) break;
        acc.push_back(p);
        rec_partitions(remaining - p, p, remaining_parts - 1, acc, out);
        acc.pop_back();
    }
}

void rec_shapes(long long budget, int max_part, bool distinct,
                std::vector<int>& acc, std::vector<Partition>& out)
{
    // Every row after the first contributes 2p-1 to the graph size.
    for (int p = distinct ? std::min<long long>(max_part - 1, (budget + 1) / 2)
                          : std::min<long long>(max_part, (budget + 1) / 2);
         p >= 1; --p) {
        acc.push_back(p);
        out.push_back(Partition(acc));
        rec_shapes(budget - (2 * p - 1), p, distinct, acc, out);
        acc.pop_back();
    }
}

}  // namespace

bool is_graph_family(Family f) noexcept { return info(f).graph; }
bool is_trivariate_family(Family f) noexcept { return info(f).trivariate; }
std::string_view family_name(Family f) noexcept { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name)
{
    for (const auto& fi : kFamilies)
        if (fi.name == name) return fi.family;
    return std::nullopt;
}

std::vector<Partition> partitions_of(long long n)
{
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    for (int len = 1; len <= n; ++len) {
        auto chunk = partitions_exact_length(n, len);
        out.insert(out.end(), chunk.begin(), chunk.end());
    }
    return out;
}

std::vector<Partition> partitions_exact_length(long long n, int length)
{
    std::vector<Partition> out;
    if (length <= 0) {
        if (n == 0 && length == 0) out.push_back(Partition{});
        return out;
    }
    std::vector<int> acc;
    rec_partitions(n, static_cast<int>(std::min<long long>(n, 1 << 20)), length,
                   acc, out);
    return out;
}

std::vector<Partition> zero_extended_partitions(long long n, int length)
{
    std::vector<Partition> out = partitions_exact_length(n, length);
    for (auto& p : partitions_exact_length(n, length - 1))
        out.push_back(append_zero(p));
    return out;
}

std::vector<Partition> shapes_with_graph_size_up_to(long long n_max,
                                                    bool distinct_only)
{
    std::vector<Partition> out;
    if (n_max < 0) return out;
    std::vector<int> acc;
    // First row of length k contributes k-1.
    for (int k = 1; k <= n_max + 1; ++k) {
        acc.push_back(k);
        out.push_back(Partition(acc));
        rec_shapes(n_max - (k - 1), k, distinct_only, acc, out);
        acc.pop_back();
    }
    return out;
}

std::vector<OddFerrersGraph> enumerate_graphs(Family f, int m, long long n)
{
    const auto& fi = info(f);
    if (!fi.graph) throw domain_error("enumerate_graphs: partition family");
    if (fi.trivariate)
        throw domain_error("enumerate_graphs: trivariate family needs (ell, m, n)");
    std::vector<OddFerrersGraph> out;
    for (const auto& shape : shapes_with_graph_size_up_to(n, fi.distinct)) {
        OddFerrersGraph g(shape);
        if (g.size() == n && z_stat(f, g) == m) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OddFerrersGraph> enumerate_graphs(Family f, int ell, int m,
                                              long long n)
{
    const auto& fi = info(f);
    if (!fi.trivariate)
        throw domain_error("enumerate_graphs: not a trivariate family");
    std::vector<OddFerrersGraph> out;
    for (const auto& shape : shapes_with_graph_size_up_to(n, fi.distinct)) {
        OddFerrersGraph g(shape);
        if (g.size() == n && g.rows() == ell + 1 && g.cols() == m + 1)
            out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_partitions(Family f, int m, long long n)
{
    if (f != Family::p_omega && f != Family::p_nu)
        throw domain_error("enumerate_partitions: graph family");
    std::vector<Partition> out;
    for (auto& p : zero_extended_partitions(n, m + 1)) {
        const bool member = (f == Family::p_omega) ? is_in_p_omega(p) : is_in_p_nu(p);
        if (member) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long family_count(Family f, int m, long long n)
{
    if (is_graph_family(f)) {
        if (is_trivariate_family(f))
            throw domain_error("family_count: trivariate family needs (ell, m, n)");
        return static_cast<long long>(enumerate_graphs(f, m, n).size());
    }
    return static_cast<long long>(enumerate_partitions(f, m, n).size());
}

LaurentSeries gf_from_enumeration(Family f, int order, Weight w)
{
    const auto& fi = info(f);
    LaurentSeries out(order);
    if (fi.graph) {
        for (const auto& shape : shapes_with_graph_size_up_to(order, fi.distinct)) {
            const OddFerrersGraph g(shape);
            Int c = 1;
            if (w == Weight::signed_sharp && g.sharp() % 2 != 0) c = -1;
            if (fi.trivariate)
                out.add_term(static_cast<int>(g.size()), g.cols() - 1,
                             g.rows() - 1, c);
            else
                out.add_term(static_cast<int>(g.size()), 0, z_stat(f, g), c);
        }
        return out;
    }
    if (w == Weight::signed_sharp)
        throw domain_error("gf_from_enumeration: partition families are unsigned");
    for (long long n = 0; n <= order; ++n) {
        for (int len = 1; len <= n + 1; ++len) {
            for (const auto& p : zero_extended_partitions(n, len)) {
                const bool member =
                    (f == Family::p_omega) ? is_in_p_omega(p) : is_in_p_nu(p);
                if (member)
                    out.add_term(static_cast<int>(n), 0, len - 1, 1);
            }
        }
    }
    return out;
}

}  // namespace ferrers
