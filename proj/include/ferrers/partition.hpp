#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/errors.hpp"

namespace ferrers {

// A partition in the extended sense used throughout this project: parts are
// nonincreasing nonnegative integers, at most one part equals 0 and it must
// be the last one.  The zero part is significant: (3,1,0) has length 3 while
// (3,1) has length 2, although both have size 4.
class Partition {
public:
    Partition() = default;  // the empty partition; rejected by most operations
    explicit Partition(std::vector<int> parts);

    // Accepts "(6,4,3,3,2)", "6,4,3,3,2" and "()".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    long long size() const noexcept;
    int first() const { return parts_.front(); }
    int last() const { return parts_.back(); }
    bool is_distinct() const noexcept;  // strictly decreasing parts
    bool has_zero_part() const noexcept
    {
        return !parts_.empty() && parts_.back() == 0;
    }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Two-row array (top over bottom) of strictly decreasing nonnegative rows of
// equal length durfee_side.
struct FrobeniusSymbol {
    std::vector<int> top;
    std::vector<int> bottom;
    int durfee_side = 0;
};

Partition append_zero(const Partition&);  // lambda with an extra 0 part
Partition drop_last(const Partition&);    // lambda without its last part

enum class Phi { plus, minus, plus_e, minus_e, plus_o, minus_o, star };

// The pointwise operators: plus/minus change the last part by 1 (plus
// re-sorts), plus_e/minus_e shift every part by 2, plus_o/minus_o shift all
// but the last part by 2 and the last by 1 (minus_o re-sorts), star lowers
// every part by 1.  Results violating the partition invariants are rejected.
Partition phi_pointwise(Phi kind, const Partition&);

// Replace one largest odd part 2a+1 by the pair a+1, a; the result does not
// depend on which maximal odd part is removed.
Partition phi_split(const Partition&);

// Replace the last two parts by their sum, re-sorting.
Partition phi_merge(const Partition&);

Partition conjugate(const Partition&);
FrobeniusSymbol frobenius_symbol(const Partition&);
Partition from_frobenius(const FrobeniusSymbol&);

// Membership in the two partition sets underlying the bijections.
//
//   P_omega: unique smallest part (which may be 0); every odd part is at
//            most twice the smallest part plus 1.
//   P_nu:    strictly decreasing parts (smallest may be 0); every odd part
//            is less than twice the smallest part.
//
// Both reject the empty partition with domain_error.
bool is_in_p_omega(const Partition&);
bool is_in_p_nu(const Partition&);

// The violated predicate spelled out, or nullopt for members.
std::optional<std::string> p_omega_violation(const Partition&);
std::optional<std::string> p_nu_violation(const Partition&);

}  // namespace ferrers
