#ifndef NCMOT_MATRIX_HPP
#define NCMOT_MATRIX_HPP

#include "ncmot/rational.hpp"

#include <cstddef>
#include <vector>

namespace ncmot {

using RatVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals. The substrate for every
// hom-space, differential, and pairing computation.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix scaled(const Rational& s) const;

    RatVector apply(const RatVector& v) const;        // M * v
    RatVector apply_left(const RatVector& v) const;   // v^T * M

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Rank over Q by fraction-free (Bareiss) elimination on an integer-scaled
// copy, with partial pivoting by absolute numerator size.
std::size_t rank(const RatMatrix& m);

// Basis of the right null space {v : M v = 0}; empty when the kernel is 0.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// Left radical {x : x^T G = 0} of a bilinear pairing given by its Gram
// matrix; dimension = rows(G) - rank(G).
std::vector<RatVector> pairing_radical(const RatMatrix& g);

// Reduced row echelon form; returns the pivot column indices.
std::vector<std::size_t> rref_in_place(RatMatrix& m);

// Coordinates of v in the span of the columns of basis, if it lies there.
bool solve_in_span(const RatMatrix& basis_cols, const RatVector& v, RatVector* coords);

// True iff v lies in the column span of basis_cols.
bool in_span(const RatMatrix& basis_cols, const RatVector& v);

RatMatrix columns_to_matrix(const std::vector<RatVector>& cols, std::size_t dim);

}  // namespace ncmot

#endif
