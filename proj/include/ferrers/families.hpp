#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ferrers/odd_ferrers.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/series.hpp"

namespace ferrers {

// The refined counting families.  Graph families collect odd Ferrers graphs
// of size n refined by a statistic m; partition families collect members of
// P_omega / P_nu of size n and length m+1.
//
//   b_nu / b_omega   trivariate: rows-1 counted by z, cols-1 counted by y
//                    (shapes distinct for the nu families, arbitrary for
//                    omega)
//   b1_*   m+1 rows                  b1p_omega  m+1 columns
//   b2_nu  m+1 columns               b2_omega   rows - cols = m
//   b3_nu  cols - rows = m           b2p_omega  cols - rows = m
//   b4_nu  sharp = m                 b3_omega   sharp = m
enum class Family {
    b_nu,
    b_omega,
    b1_nu,
    b2_nu,
    b3_nu,
    b4_nu,
    b1_omega,
    b1p_omega,
    b2_omega,
    b2p_omega,
    b3_omega,
    p_omega,
    p_nu,
};

enum class Weight { plain, signed_sharp };

bool is_graph_family(Family) noexcept;
bool is_trivariate_family(Family) noexcept;
std::string_view family_name(Family) noexcept;
std::optional<Family> family_from_name(std::string_view);

// All partitions of n with parts >= 1, in descending lexicographic order.
std::vector<Partition> partitions_of(long long n);
// Partitions of n with exactly the given number of parts, all >= 1.
std::vector<Partition> partitions_exact_length(long long n, int length);
// Same but allowing one trailing zero part (length counts it).
std::vector<Partition> zero_extended_partitions(long long n, int length);

// Shapes whose odd Ferrers graph has size at most n_max.
std::vector<Partition> shapes_with_graph_size_up_to(long long n_max,
                                                    bool distinct_only);

// Members of a bivariate cell.  Trivariate families reject this overload;
// use the (ell, m, n) one.
std::vector<OddFerrersGraph> enumerate_graphs(Family, int m, long long n);
std::vector<OddFerrersGraph> enumerate_graphs(Family, int ell, int m,
                                              long long n);
std::vector<Partition> enumerate_partitions(Family, int m, long long n);

long long family_count(Family, int m, long long n);

// Generating function by direct enumeration, truncated at the given order:
// sum over members of (+-1)^sharp z^stat1 y^stat2 q^size.
LaurentSeries gf_from_enumeration(Family, int order, Weight);

}  // namespace ferrers
