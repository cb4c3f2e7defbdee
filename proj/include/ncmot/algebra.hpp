#ifndef NCMOT_ALGEBRA_HPP
#define NCMOT_ALGEBRA_HPP

#include "ncmot/matrix.hpp"

#include <vector>

namespace ncmot {

// Finite-dimensional associative unital algebra over Q, presented by
// structure constants: product(i, j) is the coordinate vector of e_i * e_j.
class StructureAlgebra {
public:
    StructureAlgebra(std::size_t dim, std::vector<std::vector<RatVector>> products);

    std::size_t dim() const { return dim_; }
    const RatVector& product(std::size_t i, std::size_t j) const { return products_[i][j]; }

    RatVector multiply(const RatVector& x, const RatVector& y) const;

    // Throws NotAssociative / NoUnit when the presentation fails validation.
    void validate() const;

    // Two-sided unit, solved for as a linear system.
    RatVector unit() const;

    // Matrix of left multiplication by x in the regular representation.
    RatMatrix left_mult(const RatVector& x) const;

    // Gram matrix of the trace form (x, y) -> Tr(L_x L_y).
    RatMatrix trace_form() const;

    // Dickson's criterion: basis of {x : Tr(L_x L_y) = 0 for all y}.
    // Equals the Jacobson radical in characteristic 0. Validates first.
    std::vector<RatVector> jacobson_radical() const;

private:
    std::size_t dim_;
    std::vector<std::vector<RatVector>> products_;
};

}  // namespace ncmot

#endif
