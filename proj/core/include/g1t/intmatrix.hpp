#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "g1t/errors.hpp"

namespace g1t {

// All integer arithmetic in this library is exact.
using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.  Zero rows are allowed (an empty
// relation set); zero columns only together with zero rows.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Int>& entries() const { return entries_; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void scale_row(std::size_t i, const Int& s);
    void scale_col(std::size_t i, const Int& s);
    // row i += s * row j
    void add_row(std::size_t i, std::size_t j, const Int& s);
    void add_col(std::size_t i, std::size_t j, const Int& s);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Text format: one row per line of whitespace-separated signed decimal
// integers; blank lines and `#` comments are skipped.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

}  // namespace g1t
