#include "g1t/abelian.hpp"

#include <sstream>

#include "g1t/snf.hpp"

namespace g1t {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw Error("torsion coefficient below 2");
        if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
            throw Error("torsion coefficients must form a divisibility chain");
    }
}

std::string AbelianGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank_ == 1) {
        os << "Z";
        first = false;
    } else if (free_rank_ > 1) {
        os << "Z^" << free_rank_;
        first = false;
    }
    for (const Int& t : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianGroup cokernel_group(const IntMatrix& relations, std::size_t n_generators) {
    if (relations.rows() != 0 && relations.cols() != n_generators)
        throw DimensionError("cokernel_group: relation columns != generator count");
    if (relations.rows() == 0 || n_generators == 0)
        return AbelianGroup(n_generators, {});

    SnfResult snf = smith_normal_form(relations);
    std::size_t rank = 0;
    std::vector<Int> torsion;
    for (const Int& di : snf.d) {
        if (di == 0) continue;
        ++rank;
        if (di > 1) torsion.push_back(di);
    }
    return AbelianGroup(n_generators - rank, std::move(torsion));
}

Int torsion_order(const AbelianGroup& g) {
    Int p = 1;
    for (const Int& t : g.torsion()) p *= t;
    return p;
}

}  // namespace g1t
