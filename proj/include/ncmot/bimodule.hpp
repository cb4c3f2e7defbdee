#ifndef NCMOT_BIMODULE_HPP
#define NCMOT_BIMODULE_HPP

#include "ncmot/matrix.hpp"
#include "ncmot/quiver.hpp"

#include <string>
#include <vector>

namespace ncmot {

// A-B-bimodule with explicit matrix actions on a chosen basis.
// left_action[p] is the matrix of the left action of basis path p of A,
// right_action[q] the right action of basis path q of B.
struct Bimodule {
    PathAlgebraPtr left_algebra;
    PathAlgebraPtr right_algebra;
    std::size_t dim = 0;
    std::vector<RatMatrix> left_action;
    std::vector<RatMatrix> right_action;
    std::vector<std::string> basis_names;  // optional, for reports

    // Unitality, action multiplicativity, and commutation of the two
    // actions. Throws BadBimodule on failure.
    void validate() const;

    RatMatrix left_of(const RatVector& a) const;   // action of an algebra element
    RatMatrix right_of(const RatVector& b) const;

    static Bimodule diagonal(PathAlgebraPtr a);

    // Explicit realization of P_(v,u) = A e_v (x) e_u B; basis = pairs
    // (p, q) with p in A e_v and q in e_u B, ordered lexicographically.
    static Bimodule projective(PathAlgebraPtr a, PathAlgebraPtr b,
                               std::size_t v, std::size_t u);

    static Bimodule direct_sum(const Bimodule& x, const Bimodule& y);
};

// Basis (as columns) of the corner subspace e_x W e_y.
RatMatrix corner_basis(const Bimodule& w, std::size_t x, std::size_t y);

}  // namespace ncmot

#endif
