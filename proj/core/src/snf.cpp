#include "g1t/snf.hpp"

#include <cstdlib>

namespace g1t {

namespace {

using boost::multiprecision::abs;

// Smallest nonzero |entry| in the trailing submatrix d[t:, t:]; returns
// false when that submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = t; r < d.rows(); ++r)
        for (std::size_t c = t; c < d.cols(); ++c) {
            const Int& x = d.at(r, c);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
            }
        }
    return found;
}

}  // namespace

IntMatrix SnfResult::diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m.at(i, i) = d[i];
    return m;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    if (m.empty()) throw DimensionError("smith_normal_form: empty matrix");

    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t n = std::min(rows, cols);
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(d, t, pr, pc)) break;  // trailing block is zero
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            // Clear column t, then row t, by division steps; remainders
            // become new (smaller) pivots, so this terminates.
            bool dirty = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d.at(r, t) == 0) continue;
                Int q = d.at(r, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row(r, t, -q);
                    u.add_row(r, t, -q);
                }
                if (d.at(r, t) != 0) {
                    d.swap_rows(t, r);
                    u.swap_rows(t, r);
                    dirty = true;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d.at(t, c) == 0) continue;
                Int q = d.at(t, c) / d.at(t, t);
                if (q != 0) {
                    d.add_col(c, t, -q);
                    v.add_col(c, t, -q);
                }
                if (d.at(t, c) != 0) {
                    d.swap_cols(t, c);
                    v.swap_cols(t, c);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Pivot now divides its row and column; force it to divide the
            // rest of the submatrix too.
            bool fixed = true;
            for (std::size_t r = t + 1; r < rows && fixed; ++r)
                for (std::size_t c = t + 1; c < cols && fixed; ++c)
                    if (d.at(r, c) % d.at(t, t) != 0) {
                        d.add_row(t, r, 1);
                        u.add_row(t, r, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (d.at(t, t) < 0) {
            d.scale_row(t, -1);
            u.scale_row(t, -1);
        }
    }

    SnfResult out;
    out.d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.d.push_back(d.at(i, i));
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

}  // namespace g1t
