#include "g1t/intmatrix.hpp"

#include <ostream>
#include <sstream>

namespace g1t {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows*cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged initializer");
        for (long long v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::scale_row(std::size_t i, const Int& s) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) *= s;
}

void IntMatrix::scale_col(std::size_t i, const Int& s) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) *= s;
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& s) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += s * at(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& s) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += s * at(r, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
    return os;
}

IntMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Int>> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) {
            try {
                row.emplace_back(Int(tok));
            } catch (const std::exception&) {
                throw ParseError("bad integer '" + tok + "' on line " + std::to_string(lineno));
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged row on line " + std::to_string(lineno));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

std::string format_matrix(const IntMatrix& m) { return m.to_string(); }

}  // namespace g1t
