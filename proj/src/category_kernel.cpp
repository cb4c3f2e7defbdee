#include "ncmot/category_kernel.hpp"

#include "ncmot/algebra.hpp"

namespace ncmot {

namespace {

RatVector unit_vec(std::size_t dim, std::size_t i)
{
    RatVector v(dim, 0);
    v[i] = 1;
    return v;
}

bool all_zero(const RatVector& v)
{
    for (const Rational& x : v)
        if (x != 0)
            return false;
    return true;
}

RatVector column_of(const RatMatrix& m, std::size_t c)
{
    RatVector v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        v[r] = m.at(r, c);
    return v;
}

// Deterministic complement of a subspace: greedily add the earliest
// unit vectors that grow the span.
std::vector<std::size_t> complement_indices(const std::vector<RatVector>& subspace,
                                            std::size_t dim)
{
    std::vector<RatVector> cols = subspace;
    std::size_t current = rank(columns_to_matrix(cols, dim));
    std::vector<std::size_t> picked;
    for (std::size_t t = 0; t < dim && cols.size() < dim; ++t) {
        cols.push_back(unit_vec(dim, t));
        std::size_t r = rank(columns_to_matrix(cols, dim));
        if (r > current) {
            current = r;
            picked.push_back(t);
        } else {
            cols.pop_back();
        }
    }
    return picked;
}

}  // namespace

RatVector PresentedCategory::compose(std::size_t a, std::size_t b, std::size_t c,
                                     const RatVector& f, const RatVector& g) const
{
    if (f.size() != hom_dims[a][b] || g.size() != hom_dims[b][c])
        throw Error("DimensionMismatch", "morphism coordinate length mismatch");
    RatVector out(hom_dims[a][c], 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j] == 0)
                continue;
            const RatVector& sc = comp[a][b][c][i][j];
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] += f[i] * g[j] * sc[k];
        }
    }
    return out;
}

RatVector PresentedCategory::mor_tensor(std::size_t a, std::size_t b, std::size_t c,
                                        std::size_t d, const RatVector& f,
                                        const RatVector& g) const
{
    if (!has_tensor)
        throw Error("BadCategory", "no tensor data");
    std::size_t pa = prod[a][c], pb = prod[b][d];
    if (pa == no_object || pb == no_object)
        return RatVector();  // factors through the zero object
    RatVector out(hom_dims[pa][pb], 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j] == 0)
                continue;
            const RatVector& sc = mor_prod[a][b][c][d][i][j];
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] += f[i] * g[j] * sc[k];
        }
    }
    return out;
}

Rational PresentedCategory::tr(std::size_t a, const RatVector& endo) const
{
    if (!has_trace)
        throw Error("TraceMissing", "category carries no trace data");
    Rational t = 0;
    for (std::size_t i = 0; i < endo.size(); ++i)
        t += trace[a][i] * endo[i];
    return t;
}

std::size_t PresentedCategory::object_index(const std::string& label) const
{
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == label)
            return i;
    throw Error("UnknownObject", "no object labelled '" + label + "'");
}

void PresentedCategory::validate() const
{
    const std::size_t n = n_objects();
    if (hom_dims.size() != n || comp.size() != n || ids.size() != n)
        throw Error("BadCategory", "table sizes do not match object count");
    for (std::size_t a = 0; a < n; ++a) {
        if (hom_dims[a].size() != n || comp[a].size() != n)
            throw Error("BadCategory", "table sizes do not match object count");
        if (ids[a].size() != hom_dims[a][a])
            throw Error("BadCategory", "identity coordinate length mismatch");
        for (std::size_t b = 0; b < n; ++b) {
            if (comp[a][b].size() != n)
                throw Error("BadCategory", "composition table shape mismatch");
            for (std::size_t c = 0; c < n; ++c) {
                const auto& table = comp[a][b][c];
                if (table.size() != hom_dims[a][b])
                    throw Error("BadCategory", "composition table shape mismatch");
                for (const auto& row : table) {
                    if (row.size() != hom_dims[b][c])
                        throw Error("BadCategory", "composition table shape mismatch");
                    for (const RatVector& v : row)
                        if (v.size() != hom_dims[a][c])
                            throw Error("BadCategory",
                                        "composition structure constants have wrong length");
                }
            }
        }
    }

    // Unit laws.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t i = 0; i < hom_dims[a][b]; ++i) {
                RatVector f = unit_vec(hom_dims[a][b], i);
                if (compose(a, a, b, ids[a], f) != f ||
                    compose(a, b, b, f, ids[b]) != f)
                    throw Error("BadCategory", "identity laws fail");
            }

    // Associativity on basis triples.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    for (std::size_t i = 0; i < hom_dims[a][b]; ++i)
                        for (std::size_t j = 0; j < hom_dims[b][c]; ++j)
                            for (std::size_t k = 0; k < hom_dims[c][d]; ++k) {
                                RatVector f = unit_vec(hom_dims[a][b], i);
                                RatVector g = unit_vec(hom_dims[b][c], j);
                                RatVector h = unit_vec(hom_dims[c][d], k);
                                RatVector left =
                                    compose(a, c, d, compose(a, b, c, f, g), h);
                                RatVector right =
                                    compose(a, b, d, f, compose(b, c, d, g, h));
                                if (left != right)
                                    throw Error("BadCategory",
                                                "composition is not associative");
                            }

    if (has_trace) {
        if (trace.size() != n)
            throw Error("BadCategory", "trace table size mismatch");
        for (std::size_t a = 0; a < n; ++a)
            if (trace[a].size() != hom_dims[a][a])
                throw Error("BadCategory", "trace functional length mismatch");
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t i = 0; i < hom_dims[x][y]; ++i)
                    for (std::size_t j = 0; j < hom_dims[y][x]; ++j) {
                        RatVector f = unit_vec(hom_dims[x][y], i);
                        RatVector g = unit_vec(hom_dims[y][x], j);
                        if (tr(x, compose(x, y, x, f, g)) !=
                            tr(y, compose(y, x, y, g, f)))
                            throw Error("TraceCyclicityViolation",
                                        "tr(g o f) != tr(f o g)");
                    }
    }

    if (has_tensor) {
        if (unit == no_object || unit >= n)
            throw Error("BadCategory", "tensor data without a unit object");
        if (prod.size() != n || mor_prod.size() != n)
            throw Error("BadCategory", "tensor table size mismatch");
        for (std::size_t a = 0; a < n; ++a) {
            if (prod[a].size() != n)
                throw Error("BadCategory", "tensor table size mismatch");
            if (prod[unit][a] != a || prod[a][unit] != a)
                throw Error("BadCategory", "unit object is not strict");
        }
        // Identities are multiplicative; unit identity acts trivially.
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::size_t p = prod[a][b];
                if (p == no_object)
                    continue;
                if (mor_tensor(a, a, b, b, ids[a], ids[b]) != ids[p])
                    throw Error("BadCategory", "id (x) id != id");
            }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t i = 0; i < hom_dims[a][b]; ++i) {
                    RatVector f = unit_vec(hom_dims[a][b], i);
                    if (mor_tensor(a, b, unit, unit, f, ids[unit]) != f ||
                        mor_tensor(unit, unit, a, b, ids[unit], f) != f)
                        throw Error("BadCategory", "unit morphism laws fail");
                }
        // Interchange: (g o f) (x) (k o h) = (g (x) k) o (f (x) h)
        // wherever every product object involved exists.
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t a2 = 0; a2 < n; ++a2)
                        for (std::size_t b2 = 0; b2 < n; ++b2)
                            for (std::size_t c2 = 0; c2 < n; ++c2) {
                                std::size_t pa = prod[a][a2], pb = prod[b][b2],
                                            pc = prod[c][c2];
                                if (pa == no_object || pb == no_object ||
                                    pc == no_object)
                                    continue;
                                for (std::size_t i = 0; i < hom_dims[a][b]; ++i)
                                    for (std::size_t j = 0; j < hom_dims[b][c]; ++j)
                                        for (std::size_t i2 = 0;
                                             i2 < hom_dims[a2][b2]; ++i2)
                                            for (std::size_t j2 = 0;
                                                 j2 < hom_dims[b2][c2]; ++j2) {
                                                RatVector f = unit_vec(hom_dims[a][b], i);
                                                RatVector g = unit_vec(hom_dims[b][c], j);
                                                RatVector h =
                                                    unit_vec(hom_dims[a2][b2], i2);
                                                RatVector k =
                                                    unit_vec(hom_dims[b2][c2], j2);
                                                RatVector lhs = mor_tensor(
                                                    a, c, a2, c2,
                                                    compose(a, b, c, f, g),
                                                    compose(a2, b2, c2, h, k));
                                                RatVector rhs = compose(
                                                    pa, pb, pc,
                                                    mor_tensor(a, b, a2, b2, f, h),
                                                    mor_tensor(b, c, b2, c2, g, k));
                                                if (lhs != rhs)
                                                    throw Error(
                                                        "BadCategory",
                                                        "tensor interchange fails");
                                            }
                            }
    }
}

PresentedCategory PresentedCategory::scalar(const std::string& label)
{
    PresentedCategory c;
    c.objects = {label};
    c.hom_dims = {{1}};
    c.comp = {{{{{RatVector{Rational(1)}}}}}};
    c.ids = {RatVector{Rational(1)}};
    c.has_trace = true;
    c.trace = {RatVector{Rational(1)}};
    c.has_tensor = true;
    c.unit = 0;
    c.prod = {{0}};
    c.mor_prod = {{{{{{RatVector{Rational(1)}}}}}}};
    return c;
}

bool TensorIdeal::contains(std::size_t a, std::size_t b, const RatVector& f) const
{
    if (all_zero(f))
        return true;
    return in_span(columns_to_matrix(basis[a][b], f.size()), f);
}

TensorIdeal numerical_ideal(const PresentedCategory& c)
{
    if (!c.has_trace)
        throw Error("TraceMissing", "numerical ideal needs trace data");
    const std::size_t n = c.n_objects();
    TensorIdeal ideal;
    ideal.basis.assign(n, std::vector<std::vector<RatVector>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t df = c.dim(x, y), dg = c.dim(y, x);
            RatMatrix g(df, dg);
            for (std::size_t i = 0; i < df; ++i)
                for (std::size_t j = 0; j < dg; ++j)
                    g.at(i, j) = c.tr(x, c.compose(x, y, x, unit_vec(df, i),
                                                   unit_vec(dg, j)));
            ideal.basis[x][y] = pairing_radical(g);
        }
    validate_ideal(c, ideal);
    return ideal;
}

void validate_ideal(const PresentedCategory& c, const TensorIdeal& i)
{
    const std::size_t n = c.n_objects();
    if (i.basis.size() != n)
        throw Error("NotAnIdeal", "ideal table size mismatch");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (const RatVector& v : i.basis[a][b]) {
                if (v.size() != c.dim(a, b))
                    throw Error("NotAnIdeal", "ideal vector length mismatch");
                for (std::size_t z = 0; z < n; ++z) {
                    for (std::size_t j = 0; j < c.dim(b, z); ++j)
                        if (!i.contains(a, z,
                                        c.compose(a, b, z, v,
                                                  unit_vec(c.dim(b, z), j))))
                            throw Error("NotAnIdeal",
                                        "not closed under post-composition");
                    for (std::size_t j = 0; j < c.dim(z, a); ++j)
                        if (!i.contains(z, b,
                                        c.compose(z, a, b,
                                                  unit_vec(c.dim(z, a), j), v)))
                            throw Error("NotAnIdeal",
                                        "not closed under pre-composition");
                    if (c.has_tensor) {
                        RatVector right = c.mor_tensor(a, b, z, z, v, c.ids[z]);
                        std::size_t pa = c.prod[a][z], pb = c.prod[b][z];
                        if (pa != PresentedCategory::no_object &&
                            pb != PresentedCategory::no_object &&
                            !i.contains(pa, pb, right))
                            throw Error("NotAnIdeal",
                                        "not closed under tensor with identities");
                        RatVector left = c.mor_tensor(z, z, a, b, c.ids[z], v);
                        pa = c.prod[z][a];
                        pb = c.prod[z][b];
                        if (pa != PresentedCategory::no_object &&
                            pb != PresentedCategory::no_object &&
                            !i.contains(pa, pb, left))
                            throw Error("NotAnIdeal",
                                        "not closed under tensor with identities");
                    }
                }
            }
}

QuotientResult quotient_by_ideal(const PresentedCategory& c, const TensorIdeal& i)
{
    validate_ideal(c, i);
    const std::size_t n = c.n_objects();
    QuotientResult out;
    out.projection.assign(n, std::vector<RatMatrix>(n));
    out.section.assign(n, std::vector<RatMatrix>(n));

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t dim = c.dim(a, b);
            std::vector<std::size_t> picked = complement_indices(i.basis[a][b], dim);
            const std::size_t q = picked.size();
            RatMatrix section(dim, q);
            for (std::size_t k = 0; k < q; ++k)
                section.at(picked[k], k) = 1;
            out.section[a][b] = section;

            // Solve [ideal | section] * w = e_t; the tail of w is the
            // quotient coordinate vector of e_t.
            const std::size_t ki = i.basis[a][b].size();
            RatMatrix span(dim, ki + q);
            for (std::size_t col = 0; col < ki; ++col)
                for (std::size_t r = 0; r < dim; ++r)
                    span.at(r, col) = i.basis[a][b][col][r];
            for (std::size_t col = 0; col < q; ++col)
                for (std::size_t r = 0; r < dim; ++r)
                    span.at(r, ki + col) = section.at(r, col);
            RatMatrix proj(q, dim);
            for (std::size_t t = 0; t < dim; ++t) {
                RatVector coords;
                if (!solve_in_span(span, unit_vec(dim, t), &coords))
                    throw Error("Internal", "quotient span is not full");
                for (std::size_t k = 0; k < q; ++k)
                    proj.at(k, t) = coords[ki + k];
            }
            out.projection[a][b] = proj;
        }

    PresentedCategory& q = out.category;
    q.objects = c.objects;
    q.hom_dims.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            q.hom_dims[a][b] = out.section[a][b].cols();
    q.comp.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
        q.comp[a].assign(n, {});
        for (std::size_t b = 0; b < n; ++b) {
            q.comp[a][b].assign(n, {});
            for (std::size_t cc = 0; cc < n; ++cc) {
                auto& table = q.comp[a][b][cc];
                table.assign(q.hom_dims[a][b],
                             std::vector<RatVector>(q.hom_dims[b][cc]));
                for (std::size_t ii = 0; ii < q.hom_dims[a][b]; ++ii)
                    for (std::size_t jj = 0; jj < q.hom_dims[b][cc]; ++jj)
                        table[ii][jj] = out.projection[a][cc].apply(
                            c.compose(a, b, cc, column_of(out.section[a][b], ii),
                                      column_of(out.section[b][cc], jj)));
            }
        }
    }
    q.ids.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        q.ids[a] = out.projection[a][a].apply(c.ids[a]);

    if (c.has_trace) {
        for (std::size_t a = 0; a < n; ++a)
            for (const RatVector& v : i.basis[a][a])
                if (c.tr(a, v) != 0)
                    throw Error("BadCategory", "trace does not descend to the quotient");
        q.has_trace = true;
        q.trace.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            RatVector t(q.hom_dims[a][a], 0);
            for (std::size_t k = 0; k < t.size(); ++k)
                t[k] = c.tr(a, column_of(out.section[a][a], k));
            q.trace[a] = t;
        }
    }

    if (c.has_tensor) {
        q.has_tensor = true;
        q.unit = c.unit;
        q.prod = c.prod;
        q.mor_prod.assign(n, {});
        for (std::size_t a = 0; a < n; ++a) {
            q.mor_prod[a].assign(n, {});
            for (std::size_t b = 0; b < n; ++b) {
                q.mor_prod[a][b].assign(n, {});
                for (std::size_t cc = 0; cc < n; ++cc) {
                    q.mor_prod[a][b][cc].assign(n, {});
                    for (std::size_t d = 0; d < n; ++d) {
                        std::size_t pa = c.prod[a][cc], pb = c.prod[b][d];
                        auto& table = q.mor_prod[a][b][cc][d];
                        table.assign(q.hom_dims[a][b],
                                     std::vector<RatVector>(q.hom_dims[cc][d]));
                        if (pa == PresentedCategory::no_object ||
                            pb == PresentedCategory::no_object)
                            continue;
                        for (std::size_t ii = 0; ii < q.hom_dims[a][b]; ++ii)
                            for (std::size_t jj = 0; jj < q.hom_dims[cc][d]; ++jj)
                                table[ii][jj] = out.projection[pa][pb].apply(
                                    c.mor_tensor(a, b, cc, d,
                                                 column_of(out.section[a][b], ii),
                                                 column_of(out.section[cc][d], jj)));
                    }
                }
            }
        }
    }
    q.validate();
    return out;
}

KaroubiResult karoubi_envelope(const PresentedCategory& c,
                               const std::vector<std::vector<RatVector>>& idempotents)
{
    const std::size_t n = c.n_objects();
    if (idempotents.size() != n)
        throw Error("NotIdempotent", "idempotent table size mismatch");
    for (std::size_t x = 0; x < n; ++x)
        for (const RatVector& e : idempotents[x])
            if (c.compose(x, x, x, e, e) != e)
                throw Error("NotIdempotent", "listed element is not idempotent");

    KaroubiResult out;
    out.identity_object.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        out.identity_object[x] = out.base_object.size();
        out.base_object.push_back(x);
        out.idempotent.push_back(c.ids[x]);
        out.category.objects.push_back(c.objects[x]);
        for (std::size_t k = 0; k < idempotents[x].size(); ++k) {
            out.base_object.push_back(x);
            out.idempotent.push_back(idempotents[x][k]);
            out.category.objects.push_back(c.objects[x] + "[e" + std::to_string(k) +
                                           "]");
        }
    }

    const std::size_t m = out.base_object.size();
    PresentedCategory& k = out.category;
    out.embed.assign(m, std::vector<RatMatrix>(m));
    k.hom_dims.assign(m, std::vector<std::size_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t x = out.base_object[i], y = out.base_object[j];
            const std::size_t dim = c.dim(x, y);
            // Image of f -> e' o f o e, basis from pivot columns.
            RatMatrix compressed(dim, dim);
            for (std::size_t t = 0; t < dim; ++t) {
                RatVector v = c.compose(x, x, y, out.idempotent[i], unit_vec(dim, t));
                v = c.compose(x, y, y, v, out.idempotent[j]);
                for (std::size_t r = 0; r < dim; ++r)
                    compressed.at(r, t) = v[r];
            }
            RatMatrix red = compressed;
            std::vector<std::size_t> pivots = rref_in_place(red);
            RatMatrix basis(dim, pivots.size());
            for (std::size_t cc = 0; cc < pivots.size(); ++cc)
                for (std::size_t r = 0; r < dim; ++r)
                    basis.at(r, cc) = compressed.at(r, pivots[cc]);
            out.embed[i][j] = basis;
            k.hom_dims[i][j] = pivots.size();
        }

    k.comp.assign(m, {});
    for (std::size_t a = 0; a < m; ++a) {
        k.comp[a].assign(m, {});
        for (std::size_t b = 0; b < m; ++b) {
            k.comp[a][b].assign(m, {});
            for (std::size_t cc = 0; cc < m; ++cc) {
                std::size_t x = out.base_object[a], y = out.base_object[b],
                            z = out.base_object[cc];
                auto& table = k.comp[a][b][cc];
                table.assign(k.hom_dims[a][b],
                             std::vector<RatVector>(k.hom_dims[b][cc]));
                for (std::size_t ii = 0; ii < k.hom_dims[a][b]; ++ii)
                    for (std::size_t jj = 0; jj < k.hom_dims[b][cc]; ++jj) {
                        RatVector amb = c.compose(x, y, z,
                                                  column_of(out.embed[a][b], ii),
                                                  column_of(out.embed[b][cc], jj));
                        RatVector coords;
                        if (!solve_in_span(out.embed[a][cc], amb, &coords))
                            throw Error("Internal",
                                        "karoubi composite left its hom space");
                        table[ii][jj] = coords;
                    }
            }
        }
    }

    k.ids.resize(m);
    for (std::size_t a = 0; a < m; ++a) {
        RatVector coords;
        if (!solve_in_span(out.embed[a][a], out.idempotent[a], &coords))
            throw Error("Internal", "idempotent missing from its own hom space");
        k.ids[a] = coords;
    }

    if (c.has_trace) {
        k.has_trace = true;
        k.trace.resize(m);
        for (std::size_t a = 0; a < m; ++a) {
            std::size_t x = out.base_object[a];
            RatVector t(k.hom_dims[a][a], 0);
            for (std::size_t i = 0; i < t.size(); ++i)
                t[i] = c.tr(x, column_of(out.embed[a][a], i));
            k.trace[a] = t;
        }
    }

    if (c.has_tensor) {
        bool closed = true;
        std::vector<std::vector<std::size_t>> prod(m,
                                                   std::vector<std::size_t>(m, 0));
        for (std::size_t a = 0; a < m && closed; ++a)
            for (std::size_t b = 0; b < m && closed; ++b) {
                std::size_t base =
                    c.prod[out.base_object[a]][out.base_object[b]];
                if (base == PresentedCategory::no_object) {
                    prod[a][b] = PresentedCategory::no_object;
                    continue;
                }
                RatVector e = c.mor_tensor(out.base_object[a], out.base_object[a],
                                           out.base_object[b], out.base_object[b],
                                           out.idempotent[a], out.idempotent[b]);
                std::size_t found = PresentedCategory::no_object;
                for (std::size_t t = 0; t < m; ++t)
                    if (out.base_object[t] == base && out.idempotent[t] == e) {
                        found = t;
                        break;
                    }
                if (found == PresentedCategory::no_object)
                    closed = false;
                else
                    prod[a][b] = found;
            }
        if (closed) {
            k.has_tensor = true;
            k.unit = out.identity_object[c.unit];
            k.prod = std::move(prod);
            k.mor_prod.assign(m, {});
            for (std::size_t a = 0; a < m; ++a) {
                k.mor_prod[a].assign(m, {});
                for (std::size_t b = 0; b < m; ++b) {
                    k.mor_prod[a][b].assign(m, {});
                    for (std::size_t cc = 0; cc < m; ++cc) {
                        k.mor_prod[a][b][cc].assign(m, {});
                        for (std::size_t d = 0; d < m; ++d) {
                            std::size_t pa = k.prod[a][cc], pb = k.prod[b][d];
                            auto& table = k.mor_prod[a][b][cc][d];
                            table.assign(k.hom_dims[a][b],
                                         std::vector<RatVector>(k.hom_dims[cc][d]));
                            if (pa == PresentedCategory::no_object ||
                                pb == PresentedCategory::no_object)
                                continue;
                            for (std::size_t ii = 0; ii < k.hom_dims[a][b]; ++ii)
                                for (std::size_t jj = 0; jj < k.hom_dims[cc][d];
                                     ++jj) {
                                    RatVector amb = c.mor_tensor(
                                        out.base_object[a], out.base_object[b],
                                        out.base_object[cc], out.base_object[d],
                                        column_of(out.embed[a][b], ii),
                                        column_of(out.embed[cc][d], jj));
                                    RatVector coords;
                                    if (!solve_in_span(out.embed[pa][pb], amb,
                                                       &coords))
                                        throw Error("Internal",
                                                    "karoubi tensor left its hom "
                                                    "space");
                                    table[ii][jj] = coords;
                                }
                        }
                    }
                }
            }
        }
    }
    k.validate();
    return out;
}

std::size_t orbit_power(const PresentedCategory& c, const OrbitSpec& spec,
                        std::size_t x, long j)
{
    std::size_t step = (j >= 0) ? spec.obj : spec.inverse;
    std::size_t cur = x;
    for (long t = 0; t < (j >= 0 ? j : -j); ++t) {
        if (cur == PresentedCategory::no_object)
            return cur;
        cur = c.prod[cur][step];
    }
    return cur;
}

namespace {

// h: u -> v tensored on the right with id of O^(x)j; returns the final
// pair of objects alongside the coordinates (empty when zero).
struct Shifted {
    std::size_t src = PresentedCategory::no_object;
    std::size_t dst = PresentedCategory::no_object;
    RatVector coords;
};

Shifted shift_by_power(const PresentedCategory& c, const OrbitSpec& spec,
                       std::size_t u, std::size_t v, RatVector h, long j)
{
    std::size_t step = (j >= 0) ? spec.obj : spec.inverse;
    Shifted out;
    std::size_t cu = u, cv = v;
    for (long t = 0; t < (j >= 0 ? j : -j); ++t) {
        if (cu == PresentedCategory::no_object || cv == PresentedCategory::no_object) {
            h.clear();
            break;
        }
        if (!h.empty())
            h = c.mor_tensor(cu, cv, step, step, h, c.ids[step]);
        cu = (cu == PresentedCategory::no_object)
                 ? cu
                 : c.prod[cu][step];
        cv = (cv == PresentedCategory::no_object)
                 ? cv
                 : c.prod[cv][step];
    }
    out.src = cu;
    out.dst = cv;
    out.coords = std::move(h);
    return out;
}

}  // namespace

OrbitResult orbit_category(const PresentedCategory& c, const OrbitSpec& spec)
{
    if (!c.has_tensor)
        throw Error("BadCategory", "orbit category needs tensor data");
    if (spec.obj >= c.n_objects() || spec.inverse >= c.n_objects())
        throw Error("UnknownObject", "orbit object out of range");
    if (c.prod[spec.obj][spec.inverse] != c.unit ||
        c.prod[spec.inverse][spec.obj] != c.unit)
        throw Error("BadCategory", "orbit object is not strictly invertible");
    if (spec.bound < 0)
        throw Error("UnboundedSupport", "negative support bound");

    const std::size_t n = c.n_objects();
    const long b = spec.bound;
    // Support validation: probe a window past the declared bound.
    const long probe = b + static_cast<long>(n) + 1;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (long j = -probe; j <= probe; ++j) {
                if (j >= -b && j <= b)
                    continue;
                std::size_t yj = orbit_power(c, spec, y, j);
                if (yj != PresentedCategory::no_object && c.dim(x, yj) != 0)
                    throw Error("UnboundedSupport",
                                "hom support exceeds the declared bound");
            }

    OrbitResult out;
    out.bound = b;
    PresentedCategory& o = out.category;
    o.objects = c.objects;
    const std::size_t nblocks = static_cast<std::size_t>(2 * b + 1);
    out.block_offset.assign(n, std::vector<std::vector<std::size_t>>(
                                   n, std::vector<std::size_t>(nblocks, 0)));
    out.block_dim.assign(n, std::vector<std::vector<std::size_t>>(
                                n, std::vector<std::size_t>(nblocks, 0)));
    o.hom_dims.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t total = 0;
            for (long j = -b; j <= b; ++j) {
                std::size_t blk = static_cast<std::size_t>(j + b);
                std::size_t yj = orbit_power(c, spec, y, j);
                std::size_t d =
                    (yj == PresentedCategory::no_object) ? 0 : c.dim(x, yj);
                out.block_offset[x][y][blk] = total;
                out.block_dim[x][y][blk] = d;
                total += d;
            }
            o.hom_dims[x][y] = total;
        }

    o.comp.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
        o.comp[x].assign(n, {});
        for (std::size_t y = 0; y < n; ++y) {
            o.comp[x][y].assign(n, {});
            for (std::size_t z = 0; z < n; ++z) {
                auto& table = o.comp[x][y][z];
                table.assign(o.hom_dims[x][y],
                             std::vector<RatVector>(
                                 o.hom_dims[y][z], RatVector(o.hom_dims[x][z], 0)));
                for (long j = -b; j <= b; ++j) {
                    std::size_t bj = static_cast<std::size_t>(j + b);
                    std::size_t yj = orbit_power(c, spec, y, j);
                    if (out.block_dim[x][y][bj] == 0)
                        continue;
                    for (long j2 = -b; j2 <= b; ++j2) {
                        std::size_t bj2 = static_cast<std::size_t>(j2 + b);
                        if (out.block_dim[y][z][bj2] == 0)
                            continue;
                        long jt = j + j2;
                        if (jt < -b || jt > b)
                            continue;  // zero by the validated support bound
                        std::size_t bjt = static_cast<std::size_t>(jt + b);
                        std::size_t zj2 = orbit_power(c, spec, z, j2);
                        std::size_t zt = orbit_power(c, spec, z, jt);
                        for (std::size_t ii = 0; ii < out.block_dim[x][y][bj]; ++ii)
                            for (std::size_t jj = 0; jj < out.block_dim[y][z][bj2];
                                 ++jj) {
                                // (g (x) id_{O^j}) o f
                                Shifted sg = shift_by_power(
                                    c, spec, y, zj2,
                                    unit_vec(c.dim(y, zj2), jj), j);
                                if (sg.coords.empty())
                                    continue;
                                if (sg.src != yj || sg.dst != zt)
                                    throw Error("BadCategory",
                                                "orbit power table is not "
                                                "associative");
                                RatVector res = c.compose(
                                    x, yj, zt,
                                    unit_vec(c.dim(x, yj), ii), sg.coords);
                                RatVector& cell =
                                    table[out.block_offset[x][y][bj] + ii]
                                         [out.block_offset[y][z][bj2] + jj];
                                for (std::size_t r = 0; r < res.size(); ++r)
                                    cell[out.block_offset[x][z][bjt] + r] += res[r];
                            }
                    }
                }
            }
        }
    }

    o.ids.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        RatVector id(o.hom_dims[x][x], 0);
        std::size_t off = out.block_offset[x][x][static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < c.ids[x].size(); ++i)
            id[off + i] = c.ids[x][i];
        o.ids[x] = id;
    }

    if (c.has_trace) {
        // The categorical trace of the orbit category reads off the
        // degree-zero block.
        o.has_trace = true;
        o.trace.resize(n);
        for (std::size_t x = 0; x < n; ++x) {
            RatVector t(o.hom_dims[x][x], 0);
            std::size_t off = out.block_offset[x][x][static_cast<std::size_t>(b)];
            for (std::size_t i = 0; i < c.trace[x].size(); ++i)
                t[off + i] = c.trace[x][i];
            o.trace[x] = t;
        }
    }

    o.validate();
    return out;
}

bool is_largest_ideal(const PresentedCategory& c, const TensorIdeal& i)
{
    if (c.unit == PresentedCategory::no_object || c.dim(c.unit, c.unit) != 1 ||
        all_zero(c.ids[c.unit]))
        throw Error("UnitEndNotF", "End of the unit object is not the base field");
    TensorIdeal n = numerical_ideal(c);
    const std::size_t m = c.n_objects();
    // The improper case: the numerical ideal swallowing the unit
    // identity means no proper largest ideal exists.
    if (n.contains(c.unit, c.unit, c.ids[c.unit]))
        return false;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (i.basis[a][b].size() != n.basis[a][b].size())
                return false;
            for (const RatVector& v : i.basis[a][b])
                if (!n.contains(a, b, v))
                    return false;
            for (const RatVector& v : n.basis[a][b])
                if (!i.contains(a, b, v))
                    return false;
            // Witness property for basis vectors outside the ideal.
            for (std::size_t t = 0; t < c.dim(a, b); ++t) {
                RatVector f = unit_vec(c.dim(a, b), t);
                if (i.contains(a, b, f))
                    continue;
                bool witness = false;
                for (std::size_t j = 0; j < c.dim(b, a) && !witness; ++j)
                    if (c.tr(a, c.compose(a, b, a, f,
                                          unit_vec(c.dim(b, a), j))) != 0)
                        witness = true;
                if (!witness)
                    return false;
            }
        }
    return true;
}

SemisimpleReport check_semisimple(const PresentedCategory& c)
{
    const std::size_t n = c.n_objects();
    SemisimpleReport rep;
    rep.end_radical_dims.assign(n, 0);
    rep.pairing_defects.assign(n, std::vector<std::size_t>(n, 0));
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t d = c.dim(a, a);
        if (d == 0)
            continue;
        std::vector<std::vector<RatVector>> products(d, std::vector<RatVector>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                // algebra product x*y = x o y
                products[i][j] = c.compose(a, a, a, unit_vec(d, j), unit_vec(d, i));
        StructureAlgebra alg(d, std::move(products));
        rep.end_radical_dims[a] = alg.jacobson_radical().size();
        if (rep.end_radical_dims[a] != 0)
            ok = false;
    }
    if (c.has_trace) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t df = c.dim(x, y), dg = c.dim(y, x);
                RatMatrix g(df, dg);
                for (std::size_t i = 0; i < df; ++i)
                    for (std::size_t j = 0; j < dg; ++j)
                        g.at(i, j) = c.tr(x, c.compose(x, y, x, unit_vec(df, i),
                                                       unit_vec(dg, j)));
                rep.pairing_defects[x][y] = df - rank(g);
                if (rep.pairing_defects[x][y] != 0)
                    ok = false;
            }
    }
    rep.semisimple = ok;
    return rep;
}

bool nilpotent_trace_check(const PresentedCategory& c, std::size_t obj,
                           const RatVector& f)
{
    const std::size_t d = c.dim(obj, obj);
    RatVector power = f;
    bool traces_zero = true;
    bool nilpotent = false;
    for (std::size_t m = 1; m <= d + 1; ++m) {
        if (all_zero(power)) {
            nilpotent = true;
            break;
        }
        if (c.has_trace && c.tr(obj, power) != 0)
            traces_zero = false;
        power = c.compose(obj, obj, obj, power, f);
    }
    if (!nilpotent)
        throw Error("NotNilpotent", "endomorphism is not nilpotent");
    return traces_zero;
}

std::optional<RatVector> invert_morphism(const PresentedCategory& c, std::size_t a,
                                         std::size_t b, const RatVector& f)
{
    const std::size_t dg = c.dim(b, a);
    const std::size_t rows = c.dim(a, a) + c.dim(b, b);
    RatMatrix m(rows, dg);
    for (std::size_t j = 0; j < dg; ++j) {
        RatVector gj = unit_vec(dg, j);
        RatVector left = c.compose(a, b, a, f, gj);   // g o f = id_a
        RatVector right = c.compose(b, a, b, gj, f);  // f o g = id_b
        for (std::size_t r = 0; r < left.size(); ++r)
            m.at(r, j) = left[r];
        for (std::size_t r = 0; r < right.size(); ++r)
            m.at(c.dim(a, a) + r, j) = right[r];
    }
    RatVector rhs(rows, 0);
    for (std::size_t r = 0; r < c.dim(a, a); ++r)
        rhs[r] = c.ids[a][r];
    for (std::size_t r = 0; r < c.dim(b, b); ++r)
        rhs[c.dim(a, a) + r] = c.ids[b][r];
    RatVector coords;
    if (!solve_in_span(m, rhs, &coords))
        return std::nullopt;
    return coords;
}

ConservativityReport conservativity_check(const PresentedCategory& c,
                                          const OrbitSpec& spec, std::size_t a,
                                          std::size_t b, const RatVector& f)
{
    ConservativityReport rep;
    rep.invertible_in_c = invert_morphism(c, a, b, f).has_value();
    OrbitResult orb = orbit_category(c, spec);
    RatVector pf(orb.category.hom_dims[a][b], 0);
    std::size_t off = orb.block_offset[a][b][static_cast<std::size_t>(orb.bound)];
    for (std::size_t i = 0; i < f.size(); ++i)
        pf[off + i] = f[i];
    rep.invertible_in_orbit = invert_morphism(orb.category, a, b, pf).has_value();
    rep.consistent = rep.invertible_in_c == rep.invertible_in_orbit;
    return rep;
}

ConstructionOrderReport verify_construction_order(const PresentedCategory& d, const OrbitSpec& spec,
                           const std::vector<std::vector<RatVector>>& idempotents)
{
    ConstructionOrderReport rep;
    const std::size_t n = d.n_objects();
    if (!d.has_tensor || !d.has_trace)
        throw Error("BadCategory", "verify_construction_order needs tensor and trace data");

    // Hypothesis: Hom(1, O^(x)j) is F for j = 0 and 0 elsewhere.
    const long probe = spec.bound + static_cast<long>(n) + 1;
    rep.hypothesis_ok = true;
    for (long j = -probe; j <= probe; ++j) {
        std::size_t oj = orbit_power(d, spec, d.unit, j);
        std::size_t dim =
            (oj == PresentedCategory::no_object) ? 0 : d.dim(d.unit, oj);
        if (dim != (j == 0 ? 1u : 0u))
            rep.hypothesis_ok = false;
    }
    if (!rep.hypothesis_ok)
        throw Error("HypothesisFailed",
                    "Hom(1, O^j) is not F-for-j=0-and-0-otherwise");

    // First order: orbit, then numerical quotient, then Karoubi.
    OrbitResult orb = orbit_category(d, spec);
    TensorIdeal n1 = numerical_ideal(orb.category);
    QuotientResult q1 = quotient_by_ideal(orb.category, n1);

    // Second order: numerical quotient, Karoubi, then orbit.
    TensorIdeal nd = numerical_ideal(d);
    QuotientResult qd = quotient_by_ideal(d, nd);

    const long b = spec.bound;
    const std::size_t nblocks = static_cast<std::size_t>(2 * b + 1);

    // alpha, blockwise: Hom_{Orb(D)}(x,y) -> (+)_j Hom_{D/N}(x, y (x) O^j).
    std::vector<std::vector<RatMatrix>> alpha(n, std::vector<RatMatrix>(n));
    rep.ker_alpha_in_ideal = true;
    rep.beta_bijective = true;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t src = orb.category.hom_dims[x][y];
            std::size_t dst = 0;
            std::vector<std::size_t> tgt_off(nblocks, 0);
            std::vector<std::size_t> tgt_obj(nblocks, PresentedCategory::no_object);
            for (long j = -b; j <= b; ++j) {
                std::size_t blk = static_cast<std::size_t>(j + b);
                std::size_t yj = orbit_power(d, spec, y, j);
                tgt_obj[blk] = yj;
                tgt_off[blk] = dst;
                if (yj != PresentedCategory::no_object)
                    dst += qd.category.hom_dims[x][yj];
            }
            RatMatrix m(dst, src);
            for (long j = -b; j <= b; ++j) {
                std::size_t blk = static_cast<std::size_t>(j + b);
                std::size_t yj = tgt_obj[blk];
                if (yj == PresentedCategory::no_object)
                    continue;
                const RatMatrix& p = qd.projection[x][yj];
                for (std::size_t r = 0; r < p.rows(); ++r)
                    for (std::size_t cc = 0; cc < p.cols(); ++cc)
                        m.at(tgt_off[blk] + r, orb.block_offset[x][y][blk] + cc) =
                            p.at(r, cc);
            }
            alpha[x][y] = m;

            // ker(alpha) vs N1 and surjectivity.
            std::vector<RatVector> ker = kernel_basis(m);
            RatMatrix n1_cols = columns_to_matrix(n1.basis[x][y], src);
            for (const RatVector& v : ker)
                if (!in_span(n1_cols, v))
                    rep.ker_alpha_in_ideal = false;
            RatMatrix ker_cols = columns_to_matrix(ker, src);
            for (const RatVector& v : n1.basis[x][y])
                if (!in_span(ker_cols, v))
                    rep.beta_bijective = false;
            if (rank(m) != dst)
                rep.beta_bijective = false;
        }
    if (!rep.ker_alpha_in_ideal)
        rep.beta_bijective = false;

    // Idempotent images on both sides.
    std::vector<std::vector<RatVector>> idem_q1(n), idem_qd(n);
    for (std::size_t x = 0; x < n; ++x)
        for (const RatVector& e : idempotents[x]) {
            if (e.size() != d.dim(x, x))
                throw Error("NotIdempotent", "idempotent coordinate length mismatch");
            RatVector lifted(orb.category.hom_dims[x][x], 0);
            std::size_t off = orb.block_offset[x][x][static_cast<std::size_t>(b)];
            for (std::size_t i = 0; i < e.size(); ++i)
                lifted[off + i] = e[i];
            idem_q1[x].push_back(q1.projection[x][x].apply(lifted));
            idem_qd[x].push_back(qd.projection[x][x].apply(e));
        }

    KaroubiResult e1 = karoubi_envelope(q1.category, idem_q1);
    KaroubiResult k2 = karoubi_envelope(qd.category, idem_qd);
    if (!k2.category.has_tensor)
        throw Error("HypothesisFailed",
                    "idempotent list is not closed under tensoring");
    OrbitSpec spec2{k2.identity_object[spec.obj], k2.identity_object[spec.inverse],
                    spec.bound};
    OrbitResult e2 = orbit_category(k2.category, spec2);

    rep.dims_first = e1.category.hom_dims;
    rep.dims_second = e2.category.hom_dims;

    // gamma: transport each E1 hom basis through section, alpha, and the
    // E2 block embeddings; require a linear bijection per pair.
    rep.gamma_bijective = rep.dims_first == rep.dims_second;
    const std::size_t m_obj = e1.base_object.size();
    for (std::size_t i = 0; i < m_obj && rep.gamma_bijective; ++i)
        for (std::size_t j = 0; j < m_obj && rep.gamma_bijective; ++j) {
            std::size_t x = e1.base_object[i], y = e1.base_object[j];
            // Ambient embedding of the E2 hom space inside
            // (+)_k Hom_{D/N}(x, y (x) O^k).
            std::size_t amb_dim = alpha[x][y].rows();
            std::size_t e2_dim = e2.category.hom_dims[i][j];
            RatMatrix emb(amb_dim, e2_dim);
            std::size_t col0 = 0, off0 = 0;
            for (long k = -b; k <= b; ++k) {
                std::size_t blk = static_cast<std::size_t>(k + b);
                std::size_t yjk = orbit_power(k2.category, spec2, j, k);
                std::size_t bd = e2.block_dim[i][j][blk];
                if (yjk == PresentedCategory::no_object) {
                    continue;
                }
                std::size_t base = k2.base_object[yjk];
                // Block embeds through the K2 hom basis into the
                // ambient quotient hom space.
                const RatMatrix& kb = k2.embed[i][yjk];
                for (std::size_t cc = 0; cc < bd; ++cc)
                    for (std::size_t r = 0; r < kb.rows(); ++r)
                        emb.at(off0 + r, col0 + cc) = kb.at(r, cc);
                col0 += bd;
                off0 += qd.category.hom_dims[x][base];
            }
            if (col0 != e2_dim) {
                rep.gamma_bijective = false;
                break;
            }

            std::size_t e1_dim = e1.category.hom_dims[i][j];
            RatMatrix gamma(e2_dim, e1_dim);
            for (std::size_t cc = 0; cc < e1_dim; ++cc) {
                RatVector amb_q1 = column_of(e1.embed[i][j], cc);
                RatVector lifted = q1.section[x][y].apply(amb_q1);
                RatVector image = alpha[x][y].apply(lifted);
                RatVector coords;
                if (!solve_in_span(emb, image, &coords)) {
                    rep.gamma_bijective = false;
                    break;
                }
                for (std::size_t r = 0; r < coords.size(); ++r)
                    gamma.at(r, cc) = coords[r];
            }
            if (!rep.gamma_bijective)
                break;
            if (e1_dim != e2_dim || rank(gamma) != e1_dim)
                rep.gamma_bijective = false;
        }

    return rep;
}

}  // namespace ncmot
