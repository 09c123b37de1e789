#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

// Odd Ferrers graph of a shape: the boxes of the shape filled with 0 in the
// top-left corner, 1 in the rest of the first row and first column, and 2
// everywhere else.  The size is the sum of all entries and every row sum
// except the first one is odd.  Statistics come from the closed formulas
//
//   size  = 2|shape| - shape_1 - length(shape)
//   sharp = shape_1 + length(shape) - 2        (number of 1-entries)
//
// and the explicit grid is materialized only for display and tests.
class OddFerrersGraph {
public:
    explicit OddFerrersGraph(Partition shape);

    static OddFerrersGraph from_shape(Partition shape)
    {
        return OddFerrersGraph(std::move(shape));
    }

    const Partition& shape() const noexcept { return shape_; }
    int rows() const noexcept { return shape_.length(); }
    int cols() const noexcept { return shape_.first(); }
    long long size() const noexcept
    {
        return 2 * shape_.size() - cols() - rows();
    }
    int sharp() const noexcept { return cols() + rows() - 2; }
    bool is_distinct() const noexcept { return shape_.is_distinct(); }

    std::vector<std::vector<int>> grid() const;
    std::string render() const;  // digit rows, entries space-separated
    std::string str() const;     // "F(9,5,4,3,1)"

    friend bool operator==(const OddFerrersGraph&, const OddFerrersGraph&) = default;
    friend auto operator<=>(const OddFerrersGraph&, const OddFerrersGraph&) = default;

private:
    Partition shape_;
};

OddFerrersGraph conjugate_graph(const OddFerrersGraph&);

}  // namespace ferrers
