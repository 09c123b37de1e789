#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/series.hpp"

namespace ferrers {

// One verifiable identity: both sides are built from their own displayed
// formula, never derived from each other, so the comparison is a genuine
// double computation.
struct IdentityEntry {
    std::string name;
    std::string anchor;     // the identity in plain text
    std::string variables;  // which of y,z appear: "", "z" or "yz"
    std::function<LaurentSeries(int)> lhs;
    std::function<LaurentSeries(int)> rhs;
};

struct Discrepancy {
    int q = 0;
    int y = 0;
    int z = 0;
    Int lhs;
    Int rhs;
};

struct VerificationReport {
    std::string name;
    int order = 0;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
};

const std::vector<IdentityEntry>& registry();
const IdentityEntry* find_entry(std::string_view name);

// Builds both sides at the given order and compares coefficient-exactly.
VerificationReport verify(const IdentityEntry&, int order);

Int coefficient_of(const LaurentSeries&, int qdeg, int y, int z);

// The trivariate series definitions, shared by specialization tests and the
// enumeration cross-checks.
LaurentSeries nu_trivariate(int order);     // sum (yz)^n q^(n^2+n) / (yq;q^2)_{n+1}
LaurentSeries omega_trivariate(int order);  // sum (yz)^n q^(2n^2+2n) / ((yq;q^2)_{n+1}(zq;q^2)_{n+1})

}  // namespace ferrers
