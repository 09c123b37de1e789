#include "ferrers/odd_ferrers.hpp"

#include <sstream>

namespace ferrers {

OddFerrersGraph::OddFerrersGraph(Partition shape) : shape_(std::move(shape))
{
    if (shape_.empty())
        throw domain_error("odd Ferrers graph: empty shape");
    if (shape_.has_zero_part())
        throw domain_error("odd Ferrers graph: zero part in shape");
}

std::vector<std::vector<int>> OddFerrersGraph::grid() const
{
    std::vector<std::vector<int>> g;
    for (int r = 0; r < rows(); ++r) {
        const int len = shape_.parts()[static_cast<size_t>(r)];
        std::vector<int> row(static_cast<size_t>(len), 2);
        if (r == 0) {
            for (int c = 0; c < len; ++c) row[static_cast<size_t>(c)] = 1;
            row[0] = 0;
        } else {
            row[0] = 1;
        }
        g.push_back(std::move(row));
    }
    return g;
}

std::string OddFerrersGraph::render() const
{
    std::ostringstream out;
    for (const auto& row : grid()) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ' ';
            out << row[c];
        }
        out << '\n';
    }
    return out.str();
}

std::string OddFerrersGraph::str() const { return "F" + shape_.str(); }

OddFerrersGraph conjugate_graph(const OddFerrersGraph& g)
{
    return OddFerrersGraph(conjugate(g.shape()));
}

}  // namespace ferrers
