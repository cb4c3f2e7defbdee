#include "ncmot/algebra.hpp"

namespace ncmot {

StructureAlgebra::StructureAlgebra(std::size_t dim,
                                   std::vector<std::vector<RatVector>> products)
    : dim_(dim), products_(std::move(products))
{
    if (products_.size() != dim_)
        throw Error("DimensionMismatch", "structure constant table has wrong size");
    for (const auto& row : products_) {
        if (row.size() != dim_)
            throw Error("DimensionMismatch", "structure constant table has wrong size");
        for (const auto& p : row)
            if (p.size() != dim_)
                throw Error("DimensionMismatch", "structure constant entry has wrong length");
    }
}

RatVector StructureAlgebra::multiply(const RatVector& x, const RatVector& y) const
{
    if (x.size() != dim_ || y.size() != dim_)
        throw Error("DimensionMismatch", "algebra element has wrong length");
    RatVector out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0)
                continue;
            Rational c = x[i] * y[j];
            const RatVector& p = products_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (p[k] != 0)
                    out[k] += c * p[k];
        }
    }
    return out;
}

void StructureAlgebra::validate() const
{
    RatVector ei(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        ei.assign(dim_, Rational(0));
        ei[i] = 1;
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                RatVector ej(dim_, Rational(0)), ek(dim_, Rational(0));
                ej[j] = 1;
                ek[k] = 1;
                if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek)))
                    throw Error("NotAssociative",
                                "associativity fails on basis triple (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
    unit();  // throws NoUnit on failure
}

RatVector StructureAlgebra::unit() const
{
    // u * e_j = e_j and e_j * u = e_j for all j: 2 * dim^2 linear
    // conditions on the dim coordinates of u.
    RatMatrix system(2 * dim_ * dim_, dim_);
    RatVector rhs(2 * dim_ * dim_, Rational(0));
    std::size_t row = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
            for (std::size_t i = 0; i < dim_; ++i) {
                system.at(row, i) = products_[i][j][k];          // (u e_j)_k
                system.at(row + 1, i) = products_[j][i][k];      // (e_j u)_k
            }
            rhs[row] = (j == k) ? 1 : 0;
            rhs[row + 1] = rhs[row];
            row += 2;
        }
    }
    RatMatrix aug(system.rows(), dim_ + 1);
    for (std::size_t r = 0; r < system.rows(); ++r) {
        for (std::size_t c = 0; c < dim_; ++c)
            aug.at(r, c) = system.at(r, c);
        aug.at(r, dim_) = rhs[r];
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == dim_)
        throw Error("NoUnit", "algebra has no two-sided unit");
    RatVector u(dim_, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        u[pivots[i]] = aug.at(i, dim_);
    return u;
}

RatMatrix StructureAlgebra::left_mult(const RatVector& x) const
{
    RatMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        RatVector ej(dim_, Rational(0));
        ej[j] = 1;
        RatVector col = multiply(x, ej);
        for (std::size_t k = 0; k < dim_; ++k)
            m.at(k, j) = col[k];
    }
    return m;
}

RatMatrix StructureAlgebra::trace_form() const
{
    std::vector<RatMatrix> left(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        RatVector ei(dim_, Rational(0));
        ei[i] = 1;
        left[i] = left_mult(ei);
    }
    RatMatrix g(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            Rational tr = 0;
            for (std::size_t r = 0; r < dim_; ++r)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (left[i].at(r, k) != 0 && left[j].at(k, r) != 0)
                        tr += left[i].at(r, k) * left[j].at(k, r);
            g.at(i, j) = tr;
        }
    return g;
}

std::vector<RatVector> StructureAlgebra::jacobson_radical() const
{
    validate();
    return pairing_radical(trace_form());
}

}  // namespace ncmot
