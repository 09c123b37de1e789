#pragma once

#include <stdexcept>

namespace ferrers {

// Precondition violation on a combinatorial object (empty partition,
// negative part, membership failure, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// poch_inf called with a factor that does not tend to 1 under truncation.
struct nonconvergent_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// geom_inverse called on a series whose constant term is not a unit.
struct not_invertible_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// sum_series whose certified degree bound fails to clear the truncation
// order within the iteration cap, or is not nondecreasing.
struct divergence_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Access past the truncation order, or mixing incompatible orders.
struct order_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace ferrers
