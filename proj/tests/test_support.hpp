#pragma once

#include <vector>

#include "qsc/intlin.hpp"

namespace testsup {

inline qsc::IntMat mk(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty = 0) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    qsc::IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline std::vector<qsc::Int> vec(const std::vector<long>& v) {
    return std::vector<qsc::Int>(v.begin(), v.end());
}

}  // namespace testsup
