#include "ncmot/bimodule.hpp"

namespace ncmot {

void Bimodule::validate() const
{
    const PathAlgebra& a = *left_algebra;
    const PathAlgebra& b = *right_algebra;
    if (left_action.size() != a.dim() || right_action.size() != b.dim())
        throw Error("BadBimodule", "action table size mismatch");
    for (const RatMatrix& m : left_action)
        if (m.rows() != dim || m.cols() != dim)
            throw Error("BadBimodule", "action matrix shape mismatch");
    for (const RatMatrix& m : right_action)
        if (m.rows() != dim || m.cols() != dim)
            throw Error("BadBimodule", "action matrix shape mismatch");

    // Unitality: the sums of vertex idempotent actions are identities.
    RatMatrix lsum(dim, dim), rsum(dim, dim);
    for (std::size_t v = 0; v < a.n_vertices(); ++v)
        lsum = lsum + left_action[a.idempotent(v)];
    for (std::size_t u = 0; u < b.n_vertices(); ++u)
        rsum = rsum + right_action[b.idempotent(u)];
    if (lsum != RatMatrix::identity(dim) || rsum != RatMatrix::identity(dim))
        throw Error("BadBimodule", "unit does not act as identity");

    // Multiplicativity: L_p L_q = L_{pq}, R_q R_p = R_{pq}.
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < a.dim(); ++q) {
            std::size_t pq = a.mult(p, q);
            RatMatrix lhs = left_action[p] * left_action[q];
            RatMatrix rhs = (pq == npos) ? RatMatrix(dim, dim) : left_action[pq];
            if (lhs != rhs)
                throw Error("BadBimodule", "left action is not multiplicative");
        }
    for (std::size_t p = 0; p < b.dim(); ++p)
        for (std::size_t q = 0; q < b.dim(); ++q) {
            std::size_t pq = b.mult(p, q);
            // right action reverses order: m.(pq) = (m.p).q
            RatMatrix lhs = right_action[q] * right_action[p];
            RatMatrix rhs = (pq == npos) ? RatMatrix(dim, dim) : right_action[pq];
            if (lhs != rhs)
                throw Error("BadBimodule", "right action is not multiplicative");
        }

    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < b.dim(); ++q)
            if (left_action[p] * right_action[q] != right_action[q] * left_action[p])
                throw Error("BadBimodule", "left and right actions do not commute");
}

RatMatrix Bimodule::left_of(const RatVector& a) const
{
    RatMatrix m(dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            m = m + left_action[i].scaled(a[i]);
    return m;
}

RatMatrix Bimodule::right_of(const RatVector& b) const
{
    RatMatrix m(dim, dim);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0)
            m = m + right_action[i].scaled(b[i]);
    return m;
}

Bimodule Bimodule::diagonal(PathAlgebraPtr a)
{
    Bimodule w;
    w.left_algebra = a;
    w.right_algebra = a;
    w.dim = a->dim();
    w.left_action.assign(a->dim(), RatMatrix(w.dim, w.dim));
    w.right_action.assign(a->dim(), RatMatrix(w.dim, w.dim));
    for (std::size_t p = 0; p < a->dim(); ++p)
        for (std::size_t m = 0; m < a->dim(); ++m) {
            std::size_t pm = a->mult(p, m);
            if (pm != npos)
                w.left_action[p].at(pm, m) = 1;
            std::size_t mp = a->mult(m, p);
            if (mp != npos)
                w.right_action[p].at(mp, m) = 1;
        }
    for (std::size_t m = 0; m < a->dim(); ++m)
        w.basis_names.push_back(a->path_name(m));
    return w;
}

Bimodule Bimodule::projective(PathAlgebraPtr a, PathAlgebraPtr b,
                              std::size_t v, std::size_t u)
{
    if (v >= a->n_vertices() || u >= b->n_vertices())
        throw Error("UnknownVertex", "vertex index out of range");
    const auto& ps = a->paths_from(v);   // basis of A e_v
    const auto& qs = b->paths_into(u);   // basis of e_u B
    Bimodule w;
    w.left_algebra = a;
    w.right_algebra = b;
    w.dim = ps.size() * qs.size();
    auto index = [&](std::size_t pi, std::size_t qi) { return pi * qs.size() + qi; };

    w.left_action.assign(a->dim(), RatMatrix(w.dim, w.dim));
    w.right_action.assign(b->dim(), RatMatrix(w.dim, w.dim));
    for (std::size_t pi = 0; pi < ps.size(); ++pi)
        for (std::size_t qi = 0; qi < qs.size(); ++qi) {
            for (std::size_t x = 0; x < a->dim(); ++x) {
                std::size_t xp = a->mult(x, ps[pi]);
                if (xp == npos)
                    continue;
                for (std::size_t pj = 0; pj < ps.size(); ++pj)
                    if (ps[pj] == xp)
                        w.left_action[x].at(index(pj, qi), index(pi, qi)) = 1;
            }
            for (std::size_t y = 0; y < b->dim(); ++y) {
                std::size_t qy = b->mult(qs[qi], y);
                if (qy == npos)
                    continue;
                for (std::size_t qj = 0; qj < qs.size(); ++qj)
                    if (qs[qj] == qy)
                        w.right_action[y].at(index(pi, qj), index(pi, qi)) = 1;
            }
            w.basis_names.push_back(a->path_name(ps[pi]) + "(x)" + b->path_name(qs[qi]));
        }
    return w;
}

Bimodule Bimodule::direct_sum(const Bimodule& x, const Bimodule& y)
{
    if (x.left_algebra != y.left_algebra || x.right_algebra != y.right_algebra)
        throw Error("DimensionMismatch", "direct sum over different algebras");
    Bimodule w;
    w.left_algebra = x.left_algebra;
    w.right_algebra = x.right_algebra;
    w.dim = x.dim + y.dim;
    auto block = [&](const RatMatrix& a, const RatMatrix& b) {
        RatMatrix m(w.dim, w.dim);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                m.at(r, c) = a.at(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                m.at(x.dim + r, x.dim + c) = b.at(r, c);
        return m;
    };
    for (std::size_t p = 0; p < x.left_action.size(); ++p)
        w.left_action.push_back(block(x.left_action[p], y.left_action[p]));
    for (std::size_t q = 0; q < x.right_action.size(); ++q)
        w.right_action.push_back(block(x.right_action[q], y.right_action[q]));
    w.basis_names = x.basis_names;
    w.basis_names.insert(w.basis_names.end(), y.basis_names.begin(), y.basis_names.end());
    return w;
}

RatMatrix corner_basis(const Bimodule& w, std::size_t x, std::size_t y)
{
    RatMatrix proj = w.left_action[w.left_algebra->idempotent(x)] *
                     w.right_action[w.right_algebra->idempotent(y)];
    // Pivot columns of the projector span its image.
    RatMatrix r = proj;
    std::vector<std::size_t> pivots = rref_in_place(r);
    RatMatrix basis(w.dim, pivots.size());
    for (std::size_t c = 0; c < pivots.size(); ++c)
        for (std::size_t row = 0; row < w.dim; ++row)
            basis.at(row, c) = proj.at(row, pivots[c]);
    return basis;
}

}  // namespace ncmot
