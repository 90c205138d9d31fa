#pragma once

#include <string>
#include <vector>

#include "g1t/intmatrix.hpp"

namespace g1t {

// Finitely generated abelian group in canonical form: Z^freeRank plus
// cyclic factors whose orders form a divisibility chain with no 1s.
// Equality of groups is field-wise equality.
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(std::size_t free_rank, std::vector<Int> torsion);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    bool operator==(const AbelianGroup& rhs) const = default;

    // "Z^2 + Z/3", "Z", "Z/2 + Z/6", "0"
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
};

// Cokernel of `relations` acting on Z^n_generators, classified.
// relations may have zero rows (no relations).  Throws DimensionError
// when the column count disagrees with n_generators.
AbelianGroup cokernel_group(const IntMatrix& relations, std::size_t n_generators);

// Product of the torsion coefficients; 1 for torsion-free groups.
Int torsion_order(const AbelianGroup& g);

}  // namespace g1t
