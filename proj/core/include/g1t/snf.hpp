#pragma once

#include <vector>

#include "g1t/intmatrix.hpp"

namespace g1t {

// Smith normal form with transform certificates:
//   u * m * v == diag(d),  |det u| == |det v| == 1,
//   d[i] >= 0 and d[i] | d[i+1] (zeros trail).
struct SnfResult {
    std::vector<Int> d;
    IntMatrix u;
    IntMatrix v;

    IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

// Deterministic reduction using smallest-nonzero-absolute-value pivoting
// to keep intermediate entries small.  Throws DimensionError on an empty
// matrix.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace g1t
