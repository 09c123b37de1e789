#include "ferrers/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace ferrers {

namespace {

void require_p_omega(const Partition& p, const char* op)
{
    if (auto why = p_omega_violation(p))
        throw domain_error(std::string(op) + ": " + *why);
}

void require_p_nu(const Partition& p, const char* op)
{
    if (auto why = p_nu_violation(p))
        throw domain_error(std::string(op) + ": " + *why);
}

bool all_even_except_last(const Partition& p)
{
    for (int i = 0; i + 1 < p.length(); ++i)
        if (p.parts()[static_cast<size_t>(i)] % 2 != 0) return false;
    return true;
}

bool all_even(const Partition& p)
{
    for (int x : p.parts())
        if (x % 2 != 0) return false;
    return true;
}

}  // namespace

std::pair<Partition, long long> psi_minus(const Partition& p)
{
    require_p_omega(p, "psi_minus");
    if (p.length() < 2)
        throw domain_error("psi_minus: needs at least two parts");
    const int last = p.last();
    const int prev = p.parts()[static_cast<size_t>(p.length() - 2)];
    Partition out;
    if (last == 0 && prev >= 2) {
        out = phi_pointwise(Phi::minus, drop_last(p));
    } else if (prev == last + 1) {
        out = phi_pointwise(Phi::minus, phi_merge(p));
    } else {  // last >= 1 and prev >= last + 2
        out = phi_pointwise(Phi::minus_o, p);
    }
    const long long delta = p.size() - out.size();
    require_p_omega(out, "psi_minus result");
    return {std::move(out), delta};
}

Partition psi_plus(const Partition& p, Branch branch)
{
    require_p_omega(p, "psi_plus");
    Partition out;
    if (branch == Branch::two) {
        out = phi_pointwise(Phi::plus_o, p);
    } else if (p.last() % 2 == 1 && all_even_except_last(p)) {
        out = append_zero(phi_pointwise(Phi::plus, p));
    } else {
        out = phi_split(phi_pointwise(Phi::plus, p));
    }
    require_p_omega(out, "psi_plus result");
    return out;
}

std::pair<Partition, long long> rho_minus(const Partition& p)
{
    require_p_nu(p, "rho_minus");
    if (p.length() < 2)
        throw domain_error("rho_minus: needs at least two parts");
    const int last = p.last();
    const int prev = p.parts()[static_cast<size_t>(p.length() - 2)];
    Partition out;
    if (last == 0) {
        out = phi_pointwise(Phi::minus_e, drop_last(p));
    } else if (prev == last + 1) {
        out = phi_pointwise(Phi::minus_e, phi_merge(p));
    } else {  // last >= 1 and prev >= last + 2
        out = phi_pointwise(Phi::minus_o, p);
    }
    const long long delta = p.size() - out.size();
    require_p_nu(out, "rho_minus result");
    return {std::move(out), delta};
}

Partition rho_plus(const Partition& p, Branch branch)
{
    require_p_nu(p, "rho_plus");
    Partition out;
    if (branch == Branch::two) {
        out = phi_pointwise(Phi::plus_o, p);
    } else if (all_even(p)) {
        out = append_zero(phi_pointwise(Phi::plus_e, p));
    } else {
        out = phi_split(phi_pointwise(Phi::plus_e, p));
    }
    require_p_nu(out, "rho_plus result");
    return out;
}

std::pair<OddFerrersGraph, BijectionTrace> omega_forward(const Partition& lambda)
{
    require_p_omega(lambda, "omega_forward");
    BijectionTrace trace;
    trace.diffs.kind = DiffKind::omega_d;
    trace.partition_chain.push_back(lambda);
    Partition cur = lambda;
    while (cur.length() > 1) {
        auto [next, delta] = psi_minus(cur);
        trace.diffs.values.push_back(delta);
        trace.partition_chain.push_back(next);
        cur = std::move(next);
    }

    // Rebuild the graph from the terminal partition and the difference
    // sequence processed in reverse: drop 1 appends a single-box row, drop
    // 2k+1 > 1 appends one box to each of the k+1 rows.
    const size_t t = trace.diffs.values.size();
    std::vector<Partition> shapes(t + 1);
    std::vector<int> shape{static_cast<int>(cur.size()) + 1};
    shapes[t] = Partition(shape);
    for (size_t i = t; i-- > 0;) {
        const long long d = trace.diffs.values[i];
        if (d == 1) {
            shape.push_back(1);
        } else {
            const long long k = (d - 1) / 2;
            if (static_cast<long long>(shape.size()) != k + 1)
                throw std::logic_error("omega_forward: row-count law violated");
            for (int& part : shape) ++part;
        }
        shapes[i] = Partition(shape);
    }
    trace.shape_chain = std::move(shapes);

    OddFerrersGraph graph(trace.shape_chain.front());
    if (graph.size() != lambda.size() || graph.rows() != lambda.length())
        throw std::logic_error("omega_forward: statistics not preserved");
    return {std::move(graph), std::move(trace)};
}

std::pair<Partition, BijectionTrace> omega_inverse(const OddFerrersGraph& graph)
{
    BijectionTrace trace;
    trace.diffs.kind = DiffKind::omega_h;
    trace.shape_chain.push_back(graph.shape());
    std::vector<int> shape = graph.shape().parts();
    while (shape.size() > 1) {
        if (shape.back() >= 2) {
            // Peel the last box of every row: a 1 from the first row and a
            // 2 from each of the others.
            trace.diffs.values.push_back(2 * static_cast<long long>(shape.size()) - 1);
            for (int& part : shape) --part;
        } else {
            trace.diffs.values.push_back(1);
            shape.pop_back();
        }
        trace.shape_chain.push_back(Partition(shape));
    }

    const size_t r = trace.diffs.values.size();
    std::vector<Partition> chain(r + 1);
    Partition cur(std::vector<int>{shape.front() - 1});
    chain[r] = cur;
    for (size_t i = r; i-- > 0;) {
        const long long h = trace.diffs.values[i];
        cur = psi_plus(cur, h == 1 ? Branch::one : Branch::two);
        if (cur.size() != chain[i + 1].size() + h)
            throw std::logic_error("omega_inverse: sizes do not telescope");
        chain[i] = cur;
    }
    trace.partition_chain = std::move(chain);

    Partition out = trace.partition_chain.front();
    if (out.size() != graph.size() || out.length() != graph.rows())
        throw std::logic_error("omega_inverse: statistics not preserved");
    return {std::move(out), std::move(trace)};
}

std::pair<OddFerrersGraph, BijectionTrace> nu_forward(const Partition& lambda)
{
    require_p_nu(lambda, "nu_forward");
    BijectionTrace trace;
    trace.diffs.kind = DiffKind::nu_d;
    trace.partition_chain.push_back(lambda);
    Partition cur = lambda;
    while (cur.length() > 1) {
        auto [next, delta] = rho_minus(cur);
        trace.diffs.values.push_back(delta);
        trace.partition_chain.push_back(next);
        cur = std::move(next);
    }

    // Rebuild the graph: an even drop 2k adds a box to each of the k rows
    // and a new single-box row, an odd drop 2k+1 adds a box to each of the
    // k+1 rows.
    const size_t t = trace.diffs.values.size();
    std::vector<Partition> shapes(t + 1);
    std::vector<int> shape{static_cast<int>(cur.size()) + 1};
    shapes[t] = Partition(shape);
    for (size_t i = t; i-- > 0;) {
        const long long d = trace.diffs.values[i];
        if (d % 2 == 0) {
            if (static_cast<long long>(shape.size()) != d / 2)
                throw std::logic_error("nu_forward: row-count law violated");
            for (int& part : shape) ++part;
            shape.push_back(1);
        } else {
            if (static_cast<long long>(shape.size()) != (d + 1) / 2)
                throw std::logic_error("nu_forward: row-count law violated");
            for (int& part : shape) ++part;
        }
        shapes[i] = Partition(shape);
    }
    trace.shape_chain = std::move(shapes);

    OddFerrersGraph graph(trace.shape_chain.front());
    if (!graph.is_distinct())
        throw std::logic_error("nu_forward: produced a non-distinct shape");
    if (graph.size() != lambda.size() || graph.rows() != lambda.length())
        throw std::logic_error("nu_forward: statistics not preserved");
    return {std::move(graph), std::move(trace)};
}

std::pair<Partition, BijectionTrace> nu_inverse(const OddFerrersGraph& graph)
{
    if (!graph.is_distinct())
        throw domain_error("nu_inverse: shape is not distinct");
    BijectionTrace trace;
    trace.diffs.kind = DiffKind::nu_h;
    trace.shape_chain.push_back(graph.shape());
    std::vector<int> shape = graph.shape().parts();
    while (shape.size() > 1) {
        // Peel the last box of every row; a last row of a single box
        // vanishes, which turns the drop even.
        const long long ell = static_cast<long long>(shape.size());
        const bool vanishes = shape.back() == 1;
        for (int& part : shape) --part;
        if (vanishes) shape.pop_back();
        trace.diffs.values.push_back(vanishes ? 2 * ell - 2 : 2 * ell - 1);
        trace.shape_chain.push_back(Partition(shape));
    }

    const size_t r = trace.diffs.values.size();
    std::vector<Partition> chain(r + 1);
    Partition cur(std::vector<int>{shape.front() - 1});
    chain[r] = cur;
    for (size_t i = r; i-- > 0;) {
        const long long h = trace.diffs.values[i];
        cur = rho_plus(cur, h % 2 == 0 ? Branch::one : Branch::two);
        if (cur.size() != chain[i + 1].size() + h)
            throw std::logic_error("nu_inverse: sizes do not telescope");
        chain[i] = cur;
    }
    trace.partition_chain = std::move(chain);

    Partition out = trace.partition_chain.front();
    if (out.size() != graph.size() || out.length() != graph.rows())
        throw std::logic_error("nu_inverse: statistics not preserved");
    return {std::move(out), std::move(trace)};
}

bool check_claims(const DifferenceSequence& seq)
{
    const auto& v = seq.values;
    if (v.empty()) return true;
    const bool omega =
        seq.kind == DiffKind::omega_d || seq.kind == DiffKind::omega_h;
    for (long long x : v)
        if (x <= 0) return false;
    if (omega) {
        for (long long x : v)
            if (x % 2 == 0) return false;
        if (v.back() != 1) return false;
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 3) continue;
            const long long k = (v[i] - 1) / 2;
            long long ones = 0;
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[j] == 1) ++ones;
            if (ones != k) return false;
        }
        return true;
    }
    if (v.back() != 2) return false;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] % 2 == 0) continue;
        const long long k = (v[i] - 1) / 2;
        long long evens = 0;
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[j] % 2 == 0) ++evens;
        if (evens != k) return false;
    }
    return true;
}

}  // namespace ferrers
