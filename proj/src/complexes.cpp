#include "ncmot/complexes.hpp"

#include <algorithm>
#include <map>

namespace ncmot {

namespace {

// psi o phi for phi: (v,u) -> (v',u'), psi: (v',u') -> (v'',u'').
HomElem compose_hom(const HomElem& psi, const HomElem& phi,
                    const PathAlgebra& a, const PathAlgebra& b)
{
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (const auto& t1 : phi.terms)
        for (const auto& t2 : psi.terms) {
            std::size_t ax = a.mult(t1.a_path, t2.a_path);
            std::size_t by = b.mult(t2.b_path, t1.b_path);
            if (ax == npos || by == npos)
                continue;
            acc[{ax, by}] += t1.coeff * t2.coeff;
        }
    HomElem out;
    for (auto& [key, c] : acc)
        if (c != 0)
            out.terms.push_back({c, key.first, key.second});
    return out;
}

std::size_t position_in(const std::vector<std::size_t>& list, std::size_t value)
{
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == value)
            return i;
    return npos;
}

}  // namespace

void VectComplex::validate() const
{
    if (diffs.size() != dims.size())
        throw Error("NotAComplex", "differential table size mismatch");
    for (std::size_t i = 1; i < dims.size(); ++i)
        if (diffs[i].rows() != dims[i - 1] || diffs[i].cols() != dims[i])
            throw Error("NotAComplex", "differential shape mismatch in degree " +
                                           std::to_string(degree_of(i)));
    for (std::size_t i = 2; i < dims.size(); ++i)
        if (!(diffs[i - 1] * diffs[i]).is_zero())
            throw Error("NotAComplex",
                        "d o d != 0 out of degree " + std::to_string(degree_of(i)));
}

std::map<int, std::size_t> VectComplex::homology_dims() const
{
    validate();
    std::map<int, std::size_t> h;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        std::size_t cycles = (i >= 1) ? dims[i] - rank(diffs[i]) : dims[i];
        std::size_t boundaries = (i + 1 < dims.size()) ? rank(diffs[i + 1]) : 0;
        h[degree_of(i)] = cycles - boundaries;
    }
    return h;
}

mpz_class VectComplex::euler_char() const
{
    mpz_class by_dims = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
        by_dims += (degree_of(i) % 2 == 0 ? 1 : -1) * mpz_class(dims[i]);
    mpz_class by_homology = 0;
    for (auto [deg, d] : homology_dims())
        by_homology += (deg % 2 == 0 ? 1 : -1) * mpz_class(d);
    if (by_dims != by_homology)
        throw Error("NotAComplex", "Euler characteristic routes disagree");
    return by_dims;
}

std::map<int, std::size_t> homology_dims(const VectComplex& c) { return c.homology_dims(); }
mpz_class euler_char(const VectComplex& c) { return c.euler_char(); }

void ProjComplex::validate() const
{
    const PathAlgebra& a = *left_algebra;
    const PathAlgebra& b = *right_algebra;
    if (diffs.size() != terms.size())
        throw Error("NotAComplex", "differential table size mismatch");
    for (const ProjBimodule& t : terms)
        for (auto [v, u] : t.summands)
            if (v >= a.n_vertices() || u >= b.n_vertices())
                throw Error("UnknownVertex", "summand vertex out of range");
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const auto& block = diffs[i];
        if (block.size() != terms[i - 1].summands.size())
            throw Error("NotAComplex", "differential block row count mismatch");
        for (std::size_t row = 0; row < block.size(); ++row) {
            if (block[row].size() != terms[i].summands.size())
                throw Error("NotAComplex", "differential block column count mismatch");
            auto [tv, tu] = terms[i - 1].summands[row];
            for (std::size_t col = 0; col < block[row].size(); ++col) {
                auto [sv, su] = terms[i].summands[col];
                for (const auto& term : block[row][col].terms) {
                    const Path& pa = a.path(term.a_path);
                    const Path& pb = b.path(term.b_path);
                    if (pa.target != sv || pa.source != tv)
                        throw Error("NotAComplex", "left factor has wrong endpoints");
                    if (pb.target != tu || pb.source != su)
                        throw Error("NotAComplex", "right factor has wrong endpoints");
                }
            }
        }
    }
    for (std::size_t i = 2; i < terms.size(); ++i)
        for (std::size_t row = 0; row < terms[i - 2].summands.size(); ++row)
            for (std::size_t col = 0; col < terms[i].summands.size(); ++col) {
                std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
                for (std::size_t mid = 0; mid < terms[i - 1].summands.size(); ++mid) {
                    HomElem c = compose_hom(diffs[i - 1][row][mid], diffs[i][mid][col], a, b);
                    for (const auto& t : c.terms)
                        acc[{t.a_path, t.b_path}] += t.coeff;
                }
                for (auto& [key, coeff] : acc)
                    if (coeff != 0)
                        throw Error("NotAComplex", "d o d != 0 in projective complex");
            }
}

std::vector<Bimodule> ProjComplex::realize_terms() const
{
    std::vector<Bimodule> out;
    for (const ProjBimodule& t : terms) {
        Bimodule w;
        bool first = true;
        for (auto [v, u] : t.summands) {
            Bimodule part = Bimodule::projective(left_algebra, right_algebra, v, u);
            w = first ? part : Bimodule::direct_sum(w, part);
            first = false;
        }
        if (first) {
            w.left_algebra = left_algebra;
            w.right_algebra = right_algebra;
            w.dim = 0;
            w.left_action.assign(left_algebra->dim(), RatMatrix(0, 0));
            w.right_action.assign(right_algebra->dim(), RatMatrix(0, 0));
        }
        out.push_back(std::move(w));
    }
    return out;
}

VectComplex ProjComplex::expand() const
{
    validate();
    const PathAlgebra& a = *left_algebra;
    const PathAlgebra& b = *right_algebra;

    // Per-term basis offsets: summand s occupies a contiguous block with
    // basis (p, q), p over paths_from(v), q over paths_into(u).
    std::vector<std::vector<std::size_t>> offsets(terms.size());
    VectComplex out;
    out.min_degree = min_degree;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::size_t total = 0;
        for (auto [v, u] : terms[i].summands) {
            offsets[i].push_back(total);
            total += a.paths_from(v).size() * b.paths_into(u).size();
        }
        out.dims.push_back(total);
    }
    out.diffs.resize(terms.size());
    for (std::size_t i = 1; i < terms.size(); ++i) {
        RatMatrix m(out.dims[i - 1], out.dims[i]);
        for (std::size_t row = 0; row < terms[i - 1].summands.size(); ++row) {
            auto [tv, tu] = terms[i - 1].summands[row];
            const auto& tps = a.paths_from(tv);
            const auto& tqs = b.paths_into(tu);
            for (std::size_t col = 0; col < terms[i].summands.size(); ++col) {
                auto [sv, su] = terms[i].summands[col];
                const auto& sps = a.paths_from(sv);
                const auto& sqs = b.paths_into(su);
                for (const auto& term : diffs[i][row][col].terms) {
                    for (std::size_t pi = 0; pi < sps.size(); ++pi) {
                        std::size_t pa = a.mult(sps[pi], term.a_path);
                        if (pa == npos)
                            continue;
                        std::size_t pt = position_in(tps, pa);
                        for (std::size_t qi = 0; qi < sqs.size(); ++qi) {
                            std::size_t qb = b.mult(term.b_path, sqs[qi]);
                            if (qb == npos)
                                continue;
                            std::size_t qt = position_in(tqs, qb);
                            m.at(offsets[i - 1][row] + pt * tqs.size() + qt,
                                 offsets[i][col] + pi * sqs.size() + qi) += term.coeff;
                        }
                    }
                }
            }
        }
        out.diffs[i] = std::move(m);
    }
    out.validate();
    return out;
}

ProjComplex ProjComplex::single(PathAlgebraPtr a, PathAlgebraPtr b,
                                std::size_t v, std::size_t u, int degree)
{
    ProjComplex c;
    c.left_algebra = std::move(a);
    c.right_algebra = std::move(b);
    c.min_degree = degree;
    c.terms.push_back(ProjBimodule{{{v, u}}});
    c.diffs.resize(1);
    return c;
}

ProjComplex ProjComplex::identity_cone(PathAlgebraPtr a, PathAlgebraPtr b,
                                       std::size_t v, std::size_t u, int degree)
{
    ProjComplex c;
    c.left_algebra = a;
    c.right_algebra = b;
    c.min_degree = degree;
    c.terms.push_back(ProjBimodule{{{v, u}}});
    c.terms.push_back(ProjBimodule{{{v, u}}});
    c.diffs.resize(2);
    HomElem id;
    id.terms.push_back({Rational(1), a->idempotent(v), b->idempotent(u)});
    c.diffs[1] = {{id}};
    return c;
}

ProjComplex ProjComplex::shifted(int by) const
{
    ProjComplex c = *this;
    c.min_degree += by;
    return c;
}

ProjComplex ProjComplex::direct_sum(const ProjComplex& x, const ProjComplex& y)
{
    if (x.left_algebra != y.left_algebra || x.right_algebra != y.right_algebra)
        throw Error("DimensionMismatch", "direct sum over different algebras");
    ProjComplex out;
    out.left_algebra = x.left_algebra;
    out.right_algebra = x.right_algebra;
    out.min_degree = std::min(x.min_degree, y.min_degree);
    int max_degree = std::max(x.min_degree + static_cast<int>(x.terms.size()),
                              y.min_degree + static_cast<int>(y.terms.size())) - 1;
    std::size_t n = static_cast<std::size_t>(max_degree - out.min_degree + 1);
    out.terms.resize(n);
    out.diffs.resize(n);

    auto term_of = [](const ProjComplex& c, int deg) -> const ProjBimodule* {
        int i = deg - c.min_degree;
        if (i < 0 || i >= static_cast<int>(c.terms.size()))
            return nullptr;
        return &c.terms[static_cast<std::size_t>(i)];
    };
    for (std::size_t i = 0; i < n; ++i) {
        int deg = out.min_degree + static_cast<int>(i);
        std::size_t x_count = 0;
        if (const ProjBimodule* t = term_of(x, deg)) {
            out.terms[i].summands = t->summands;
            x_count = t->summands.size();
        }
        if (const ProjBimodule* t = term_of(y, deg))
            out.terms[i].summands.insert(out.terms[i].summands.end(),
                                         t->summands.begin(), t->summands.end());
        if (i == 0)
            continue;
        std::size_t rows = out.terms[i - 1].summands.size();
        std::size_t cols = out.terms[i].summands.size();
        out.diffs[i].assign(rows, std::vector<HomElem>(cols));
        int sdeg = deg;
        auto copy_block = [&](const ProjComplex& c, std::size_t row_off, std::size_t col_off) {
            int si = sdeg - c.min_degree;
            if (si < 1 || si >= static_cast<int>(c.terms.size()))
                return;
            const auto& block = c.diffs[static_cast<std::size_t>(si)];
            for (std::size_t r = 0; r < block.size(); ++r)
                for (std::size_t cc = 0; cc < block[r].size(); ++cc)
                    out.diffs[i][row_off + r][col_off + cc] = block[r][cc];
        };
        std::size_t x_rows = 0;
        if (const ProjBimodule* t = term_of(x, deg - 1))
            x_rows = t->summands.size();
        copy_block(x, 0, 0);
        copy_block(y, x_rows, x_count);
    }
    return out;
}

RatVector k0_class(const ProjComplex& c)
{
    const std::size_t nu = c.right_algebra->n_vertices();
    RatVector cls(c.left_algebra->n_vertices() * nu, Rational(0));
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        int sign = (c.degree_of(i) % 2 == 0) ? 1 : -1;
        for (auto [v, u] : c.terms[i].summands)
            cls[v * nu + u] += sign;
    }
    return cls;
}

ProjComplex tensor_over_middle(const ProjComplex& x, const ProjComplex& y)
{
    if (x.right_algebra != y.left_algebra)
        throw Error("MiddleMismatch", "middle algebras differ");
    const PathAlgebra& a = *x.left_algebra;
    const PathAlgebra& b = *x.right_algebra;
    const PathAlgebra& cc = *y.right_algebra;

    ProjComplex out;
    out.left_algebra = x.left_algebra;
    out.right_algebra = y.right_algebra;
    out.min_degree = x.min_degree + y.min_degree;

    // One output summand per (X summand, Y summand, middle basis path);
    // the middle space of (v,w) x (w',u) is e_w B e_w'.
    struct Rec {
        std::size_t xi, xs;  // X term index and summand
        std::size_t yi, ys;  // Y term index and summand
        std::size_t mid;     // path index in B
    };
    std::vector<std::vector<Rec>> recs;
    std::size_t total_terms = x.terms.size() + y.terms.size();
    if (x.terms.empty() || y.terms.empty())
        total_terms = 0;
    else
        total_terms -= 1;
    recs.resize(total_terms);
    out.terms.resize(total_terms);
    out.diffs.resize(total_terms);
    for (std::size_t xi = 0; xi < x.terms.size(); ++xi)
        for (std::size_t yi = 0; yi < y.terms.size(); ++yi) {
            std::size_t n = xi + yi;
            for (std::size_t xs = 0; xs < x.terms[xi].summands.size(); ++xs) {
                auto [v, w] = x.terms[xi].summands[xs];
                for (std::size_t ys = 0; ys < y.terms[yi].summands.size(); ++ys) {
                    auto [wp, u] = y.terms[yi].summands[ys];
                    for (std::size_t mid : b.paths_between(w, wp)) {
                        recs[n].push_back(Rec{xi, xs, yi, ys, mid});
                        out.terms[n].summands.emplace_back(v, u);
                    }
                }
            }
        }

    auto find_rec = [&](std::size_t n, const Rec& r) -> std::size_t {
        for (std::size_t i = 0; i < recs[n].size(); ++i) {
            const Rec& q = recs[n][i];
            if (q.xi == r.xi && q.xs == r.xs && q.yi == r.yi && q.ys == r.ys && q.mid == r.mid)
                return i;
        }
        throw Error("Internal", "tensor bookkeeping failure");
    };

    for (std::size_t n = 1; n < total_terms; ++n) {
        out.diffs[n].assign(recs[n - 1].size(), std::vector<HomElem>(recs[n].size()));
        for (std::size_t col = 0; col < recs[n].size(); ++col) {
            const Rec& r = recs[n][col];
            auto [v, w] = x.terms[r.xi].summands[r.xs];
            auto [wp, u] = y.terms[r.yi].summands[r.ys];
            // d_X (x) id
            if (r.xi >= 1) {
                const auto& block = x.diffs[r.xi];
                for (std::size_t xs2 = 0; xs2 < x.terms[r.xi - 1].summands.size(); ++xs2) {
                    for (const auto& t : block[xs2][r.xs].terms) {
                        std::size_t mid2 = b.mult(t.b_path, r.mid);
                        if (mid2 == npos)
                            continue;
                        std::size_t row = find_rec(n - 1, Rec{r.xi - 1, xs2, r.yi, r.ys, mid2});
                        out.diffs[n][row][col].terms.push_back(
                            {t.coeff, t.a_path, cc.idempotent(u)});
                    }
                }
            }
            // (-1)^{deg_X} id (x) d_Y
            if (r.yi >= 1) {
                int sign = (x.degree_of(r.xi) % 2 == 0) ? 1 : -1;
                const auto& block = y.diffs[r.yi];
                for (std::size_t ys2 = 0; ys2 < y.terms[r.yi - 1].summands.size(); ++ys2) {
                    for (const auto& t : block[ys2][r.ys].terms) {
                        std::size_t mid2 = b.mult(r.mid, t.a_path);
                        if (mid2 == npos)
                            continue;
                        std::size_t row = find_rec(n - 1, Rec{r.xi, r.xs, r.yi - 1, ys2, mid2});
                        out.diffs[n][row][col].terms.push_back(
                            {t.coeff * sign, a.idempotent(v), t.b_path});
                    }
                }
            }
        }
    }
    return out;
}

ProjComplex standard_resolution(PathAlgebraPtr a)
{
    ProjComplex c;
    c.left_algebra = a;
    c.right_algebra = a;
    c.min_degree = 0;
    ProjBimodule deg0;
    for (std::size_t v = 0; v < a->n_vertices(); ++v)
        deg0.summands.emplace_back(v, v);
    c.terms.push_back(deg0);
    c.diffs.resize(1);

    const Quiver& q = a->quiver();
    if (q.arrows.empty())
        return c;
    ProjBimodule deg1;
    for (const Arrow& ar : q.arrows)
        deg1.summands.emplace_back(ar.target, ar.source);
    c.terms.push_back(deg1);
    c.diffs.resize(2);
    c.diffs[1].assign(deg0.summands.size(), std::vector<HomElem>(deg1.summands.size()));
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& ar = q.arrows[ai];
        std::size_t alpha = a->find_path(Path{ar.source, ar.target, {ai}});
        // generator of the arrow summand maps to alpha (x) e_s - e_t (x) alpha
        c.diffs[1][ar.source][ai].terms.push_back(
            {Rational(1), alpha, a->idempotent(ar.source)});
        c.diffs[1][ar.target][ai].terms.push_back(
            {Rational(-1), a->idempotent(ar.target), alpha});
    }
    return c;
}

SmoothProperReport check_smooth_proper(PathAlgebraPtr a)
{
    SmoothProperReport report;
    report.proper = true;  // finite dimensional by construction
    report.dimension = a->dim();

    ProjComplex res = standard_resolution(a);
    report.resolution_length = res.terms.size() - 1;
    VectComplex v = res.expand();
    auto h = v.homology_dims();

    // Augmentation (p, q) -> p * q; a bimodule map onto A.
    RatMatrix aug(a->dim(), v.dims[0]);
    std::size_t col = 0;
    for (auto [vv, uu] : res.terms[0].summands) {
        for (std::size_t p : a->paths_from(vv))
            for (std::size_t q : a->paths_into(uu)) {
                std::size_t pq = a->mult(p, q);
                if (pq != npos)
                    aug.at(pq, col) = 1;
                ++col;
            }
    }
    bool aug_ok = rank(aug) == a->dim();
    if (v.dims.size() > 1)
        aug_ok = aug_ok && (aug * v.diffs[1]).is_zero();

    bool exact_above = true;
    for (auto [deg, d] : h)
        if (deg != 0 && d != 0)
            exact_above = false;
    report.smooth = aug_ok && exact_above && h[0] == a->dim();
    return report;
}

}  // namespace ncmot
