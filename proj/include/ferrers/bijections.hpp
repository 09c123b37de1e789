#pragma once

#include <utility>
#include <vector>

#include "ferrers/odd_ferrers.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

// The per-step size drops recorded while destructing a partition (d-kinds)
// or peeling a graph (h-kinds).
enum class DiffKind { omega_d, omega_h, nu_d, nu_h };

struct DifferenceSequence {
    std::vector<long long> values;
    DiffKind kind = DiffKind::omega_d;
};

// Full record of one run of a bijection.  partition_chain holds the
// partitions lambda^0..lambda^t and shape_chain the shapes of the graphs
// eta^0..eta^t, so |diffs| = t and both chains have t+1 entries.  Sizes
// telescope on both chains: consecutive entries differ by the matching diff.
struct BijectionTrace {
    DifferenceSequence diffs;
    std::vector<Partition> partition_chain;
    std::vector<Partition> shape_chain;
};

enum class Branch { one, two };

// Destructive operator on P_omega (length >= 2): keyed on the last two
// parts; returns the image and the (always odd) size drop.
std::pair<Partition, long long> psi_minus(const Partition&);

// Constructive operators on P_omega.  Branch two preserves the length,
// branch one grows it by 1.
Partition psi_plus(const Partition&, Branch);

// Destructive operator on P_nu (length >= 2); the drop is even exactly when
// the length shrinks.
std::pair<Partition, long long> rho_minus(const Partition&);

Partition rho_plus(const Partition&, Branch);

// The two bijections.  Forward maps send a partition of size n and length
// m+1 to an odd Ferrers graph of size n with m+1 rows (distinct shape for
// the nu family); inverse maps undo them exactly.  Forward and inverse are
// implemented independently; round-trip equality is a property, not a
// construction.
std::pair<OddFerrersGraph, BijectionTrace> omega_forward(const Partition&);
std::pair<Partition, BijectionTrace> omega_inverse(const OddFerrersGraph&);
std::pair<OddFerrersGraph, BijectionTrace> nu_forward(const Partition&);
std::pair<Partition, BijectionTrace> nu_inverse(const OddFerrersGraph&);

// Laws of the difference sequences: omega kinds have odd entries, terminal
// entry 1, and every entry 2k+1 (k >= 1) is followed by exactly k entries
// equal to 1; nu kinds have terminal entry 2 and every odd entry 2k+1 is
// followed by exactly k even entries.  Empty sequences pass vacuously.
bool check_claims(const DifferenceSequence&);

}  // namespace ferrers
