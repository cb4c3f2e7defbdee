#include "ncmot/hochschild.hpp"

namespace ncmot {

namespace {

struct CornerData {
    // Degree-0 blocks: per vertex, basis of e_v W e_v as columns.
    std::vector<RatMatrix> deg0;
    // Degree-1 blocks: per arrow, basis of e_{s} W e_{t}.
    std::vector<RatMatrix> deg1;
    std::vector<std::size_t> deg0_offsets, deg1_offsets;
    std::size_t deg0_dim = 0, deg1_dim = 0;
};

CornerData corners(const Bimodule& w)
{
    const PathAlgebra& a = *w.left_algebra;
    CornerData cd;
    for (std::size_t v = 0; v < a.n_vertices(); ++v) {
        cd.deg0_offsets.push_back(cd.deg0_dim);
        cd.deg0.push_back(corner_basis(w, v, v));
        cd.deg0_dim += cd.deg0.back().cols();
    }
    for (const Arrow& ar : a.quiver().arrows) {
        cd.deg1_offsets.push_back(cd.deg1_dim);
        cd.deg1.push_back(corner_basis(w, ar.source, ar.target));
        cd.deg1_dim += cd.deg1.back().cols();
    }
    return cd;
}

// d(w) = w.alpha - alpha.w per arrow block, expressed in corner bases.
RatMatrix hh_differential(const Bimodule& w, const CornerData& cd)
{
    const PathAlgebra& a = *w.left_algebra;
    const Quiver& q = a.quiver();
    RatMatrix d(cd.deg0_dim, cd.deg1_dim);
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& ar = q.arrows[ai];
        std::size_t alpha = a.find_path(Path{ar.source, ar.target, {ai}});
        const RatMatrix& basis = cd.deg1[ai];
        for (std::size_t c = 0; c < basis.cols(); ++c) {
            RatVector col(w.dim);
            for (std::size_t r = 0; r < w.dim; ++r)
                col[r] = basis.at(r, c);
            RatVector ra = w.right_action[alpha].apply(col);   // w . alpha
            RatVector la = w.left_action[alpha].apply(col);    // alpha . w
            RatVector coords;
            if (!solve_in_span(cd.deg0[ar.source], ra, &coords))
                throw Error("Internal", "corner image escaped its block");
            for (std::size_t k = 0; k < coords.size(); ++k)
                d.at(cd.deg0_offsets[ar.source] + k, cd.deg1_offsets[ai] + c) += coords[k];
            if (!solve_in_span(cd.deg0[ar.target], la, &coords))
                throw Error("Internal", "corner image escaped its block");
            for (std::size_t k = 0; k < coords.size(); ++k)
                d.at(cd.deg0_offsets[ar.target] + k, cd.deg1_offsets[ai] + c) -= coords[k];
        }
    }
    return d;
}

VectComplex hh_standard_bimodule(const Bimodule& w)
{
    w.validate();
    CornerData cd = corners(w);
    VectComplex out;
    out.min_degree = 0;
    out.dims = {cd.deg0_dim};
    out.diffs.resize(1);
    if (cd.deg1_dim > 0 || !w.left_algebra->quiver().arrows.empty()) {
        out.dims.push_back(cd.deg1_dim);
        out.diffs.push_back(hh_differential(w, cd));
    }
    out.validate();
    return out;
}

// Coordinates of an induced map between corner blocks of two bimodules.
RatMatrix induced_on_blocks(const RatMatrix& ambient_map,
                            const std::vector<RatMatrix>& src_blocks,
                            const std::vector<std::size_t>& src_offsets,
                            std::size_t src_dim,
                            const std::vector<RatMatrix>& dst_blocks,
                            const std::vector<std::size_t>& dst_offsets,
                            std::size_t dst_dim)
{
    RatMatrix out(dst_dim, src_dim);
    for (std::size_t blk = 0; blk < src_blocks.size(); ++blk) {
        const RatMatrix& basis = src_blocks[blk];
        for (std::size_t c = 0; c < basis.cols(); ++c) {
            RatVector col(basis.rows());
            for (std::size_t r = 0; r < basis.rows(); ++r)
                col[r] = basis.at(r, c);
            RatVector img = ambient_map.apply(col);
            RatVector coords;
            if (!solve_in_span(dst_blocks[blk], img, &coords))
                throw Error("Internal", "bimodule map does not preserve corners");
            for (std::size_t k = 0; k < coords.size(); ++k)
                out.at(dst_offsets[blk] + k, src_offsets[blk] + c) = coords[k];
        }
    }
    return out;
}

VectComplex hh_standard_complex(const ProjComplex& w)
{
    w.validate();
    std::vector<Bimodule> terms = w.realize_terms();
    VectComplex expanded = w.expand();
    std::vector<CornerData> cd;
    cd.reserve(terms.size());
    for (const Bimodule& t : terms)
        cd.push_back(corners(t));

    const std::size_t np = terms.size();
    // Total degree n = w.degree_of(p) + q, q in {0, 1}.
    VectComplex out;
    out.min_degree = w.min_degree;
    std::size_t n_total = np + 1;
    out.dims.assign(n_total, 0);
    auto slot = [&](std::size_t p, std::size_t q) { return p + q; };
    std::vector<std::vector<std::size_t>> offset(np, std::vector<std::size_t>(2, 0));
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            std::size_t d = (q == 0) ? cd[p].deg0_dim : cd[p].deg1_dim;
            offset[p][q] = out.dims[slot(p, q)];
            out.dims[slot(p, q)] += d;
        }

    out.diffs.assign(n_total, RatMatrix());
    for (std::size_t n = 1; n < n_total; ++n)
        out.diffs[n] = RatMatrix(out.dims[n - 1], out.dims[n]);

    auto add_block = [&](std::size_t n, std::size_t row_off, std::size_t col_off,
                         const RatMatrix& m, int sign) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m.at(r, c) != 0)
                    out.diffs[n].at(row_off + r, col_off + c) += m.at(r, c) * sign;
    };

    for (std::size_t p = 0; p < np; ++p) {
        int pdeg = w.degree_of(p);
        for (std::size_t q = 0; q < 2; ++q) {
            std::size_t n = slot(p, q);
            // vertical: coefficient differential W_p -> W_{p-1}
            if (p >= 1 && n >= 1) {
                RatMatrix vert =
                    (q == 0)
                        ? induced_on_blocks(expanded.diffs[p], cd[p].deg0, cd[p].deg0_offsets,
                                            cd[p].deg0_dim, cd[p - 1].deg0,
                                            cd[p - 1].deg0_offsets, cd[p - 1].deg0_dim)
                        : induced_on_blocks(expanded.diffs[p], cd[p].deg1, cd[p].deg1_offsets,
                                            cd[p].deg1_dim, cd[p - 1].deg1,
                                            cd[p - 1].deg1_offsets, cd[p - 1].deg1_dim);
                add_block(n, offset[p - 1][q], offset[p][q], vert, 1);
            }
            // horizontal: (-1)^{deg W_p} times the hh differential of W_p
            if (q == 1) {
                RatMatrix horiz = hh_differential(terms[p], cd[p]);
                add_block(n, offset[p][0], offset[p][1], horiz,
                          (pdeg % 2 == 0) ? 1 : -1);
            }
        }
    }
    out.validate();
    return out;
}

struct BarData {
    std::map<int, std::size_t> hom_dims;  // certified degrees only
    bool stable = false;
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> diffs;
};

// Truncated bar complex W (x) A^{(x)n}; builds d_1 .. d_{cutoff-1} and
// reads off true homology in degrees <= cutoff-2.
BarData bar_homology(const Bimodule& w, std::size_t cutoff)
{
    const PathAlgebra& a = *w.left_algebra;
    const std::size_t da = a.dim();
    if (cutoff < 2)
        throw Error("UnstableTruncation", "bar cutoff must be at least 2");

    std::vector<std::size_t> dims(cutoff);
    dims[0] = w.dim;
    for (std::size_t n = 1; n < cutoff; ++n)
        dims[n] = dims[n - 1] * da;

    std::vector<RatMatrix> diffs(cutoff);
    for (std::size_t n = 1; n < cutoff; ++n) {
        RatMatrix d(dims[n - 1], dims[n]);
        std::vector<std::size_t> tuple(n, 0);
        for (std::size_t col = 0; col < dims[n]; ++col) {
            // decode column: w index then path tuple a_1..a_n
            std::size_t rest = col;
            for (std::size_t i = n; i-- > 0;) {
                tuple[i] = rest % da;
                rest /= da;
            }
            std::size_t wi = rest;
            auto row_index = [&](std::size_t wj, const std::vector<std::size_t>& t) {
                std::size_t idx = wj;
                for (std::size_t x : t)
                    idx = idx * da + x;
                return idx;
            };
            // (w . a1) (x) a2 .. an
            {
                const RatMatrix& ra = w.right_action[tuple[0]];
                std::vector<std::size_t> t(tuple.begin() + 1, tuple.end());
                for (std::size_t wj = 0; wj < w.dim; ++wj)
                    if (ra.at(wj, wi) != 0)
                        d.at(row_index(wj, t), col) += ra.at(wj, wi);
            }
            // interior contractions
            for (std::size_t i = 0; i + 1 < n; ++i) {
                std::size_t prod = a.mult(tuple[i], tuple[i + 1]);
                if (prod == npos)
                    continue;
                std::vector<std::size_t> t;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i)
                        t.push_back(prod);
                    else if (k != i + 1)
                        t.push_back(tuple[k]);
                }
                int sign = (i + 1) % 2 == 0 ? 1 : -1;
                d.at(row_index(wi, t), col) += sign;
            }
            // (-1)^n (a_n . w) (x) a1 .. a_{n-1}
            {
                const RatMatrix& la = w.left_action[tuple[n - 1]];
                std::vector<std::size_t> t(tuple.begin(), tuple.end() - 1);
                int sign = (n % 2 == 0) ? 1 : -1;
                for (std::size_t wj = 0; wj < w.dim; ++wj)
                    if (la.at(wj, wi) != 0)
                        d.at(row_index(wj, t), col) += la.at(wj, wi) * sign;
            }
        }
        diffs[n] = std::move(d);
    }

    std::vector<std::size_t> ranks(cutoff, 0);
    for (std::size_t n = 1; n < cutoff; ++n)
        ranks[n] = rank(diffs[n]);

    BarData out;
    out.dims = dims;
    out.diffs = std::move(diffs);
    for (std::size_t n = 0; n + 2 <= cutoff; ++n) {
        std::size_t cycles = (n >= 1) ? dims[n] - ranks[n] : dims[n];
        out.hom_dims[static_cast<int>(n)] = cycles - ranks[n + 1];
    }
    // Accept the truncation once homology has died off in the last two
    // certified degrees.
    std::size_t top = cutoff - 2;
    out.stable = out.hom_dims[static_cast<int>(top)] == 0 &&
                 (top == 0 || out.hom_dims[static_cast<int>(top - 1)] == 0);
    return out;
}

mpz_class bar_euler(const Bimodule& w, std::size_t cutoff)
{
    BarData bd = bar_homology(w, cutoff);
    if (!bd.stable)
        throw Error("UnstableTruncation",
                    "bar truncation at cutoff " + std::to_string(cutoff) +
                        " did not stabilize");
    mpz_class chi = 0;
    for (auto [deg, d] : bd.hom_dims)
        chi += (deg % 2 == 0 ? 1 : -1) * mpz_class(d);
    return chi;
}

}  // namespace

VectComplex hh_complex(const HHRequest& req)
{
    if (req.method == HHMethod::standard) {
        if (const Bimodule* w = std::get_if<Bimodule>(&req.coefficients)) {
            if (w->left_algebra != req.algebra || w->right_algebra != req.algebra)
                throw Error("DimensionMismatch", "coefficients are not an A-A-bimodule");
            return hh_standard_bimodule(*w);
        }
        const ProjComplex& w = std::get<ProjComplex>(req.coefficients);
        if (w.left_algebra != req.algebra || w.right_algebra != req.algebra)
            throw Error("DimensionMismatch", "coefficients are not an A-A-complex");
        return hh_standard_complex(w);
    }

    // bar: return the truncated complex itself (degrees 0..cutoff-1);
    // homology certified in degrees <= cutoff-2.
    const Bimodule* w = std::get_if<Bimodule>(&req.coefficients);
    if (!w)
        throw Error("BadRequest", "bar method expects bimodule coefficients");
    if (w->left_algebra != req.algebra || w->right_algebra != req.algebra)
        throw Error("DimensionMismatch", "coefficients are not an A-A-bimodule");
    BarData bd = bar_homology(*w, req.cutoff);
    if (!bd.stable)
        throw Error("UnstableTruncation",
                    "bar truncation at cutoff " + std::to_string(req.cutoff) +
                        " did not stabilize");
    VectComplex out;
    out.min_degree = 0;
    out.dims = bd.dims;
    out.diffs = std::move(bd.diffs);
    out.validate();
    return out;
}

Rational hh_euler(const PathAlgebra& a, const RatVector& cls)
{
    const std::size_t nv = a.n_vertices();
    if (cls.size() != nv * nv)
        throw Error("DimensionMismatch", "K0 class has wrong length");
    Rational chi = 0;
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t u = 0; u < nv; ++u)
            chi += cls[v * nv + u] * Rational(static_cast<long>(a.hom_dim(u, v)));
    return chi;
}

Rational hh_class(PathAlgebraPtr a, const HHCoefficients& w)
{
    HHRequest req{a, w, HHMethod::standard, 4};
    Rational chi(euler_char(hh_complex(req)));
    if (const ProjComplex* c = std::get_if<ProjComplex>(&w)) {
        Rational closed = hh_euler(*a, k0_class(*c));
        if (chi != closed)
            throw Error("Internal", "hh_class routes disagree");
    }
    return chi;
}

Rational BarOracle::euler(PathAlgebraPtr a, const HHCoefficients& w)
{
    if (const Bimodule* b = std::get_if<Bimodule>(&w))
        return euler_bimodule(a, *b);
    const ProjComplex& c = std::get<ProjComplex>(w);
    // chi is additive over terms and summands; evaluate the oracle per
    // indecomposable projective summand, with caching.
    Rational chi = 0;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        int sign = (c.degree_of(i) % 2 == 0) ? 1 : -1;
        for (auto [v, u] : c.terms[i].summands) {
            auto key = std::make_tuple(a.get(), v, u);
            auto it = cache_.find(key);
            if (it == cache_.end()) {
                Bimodule p = Bimodule::projective(a, a, v, u);
                it = cache_.emplace(key, euler_bimodule(a, p)).first;
            }
            chi += sign * it->second;
        }
    }
    return chi;
}

Rational BarOracle::euler_bimodule(PathAlgebraPtr a, const Bimodule& w)
{
    if (w.left_algebra != a || w.right_algebra != a)
        throw Error("DimensionMismatch", "coefficients are not an A-A-bimodule");
    return Rational(bar_euler(w, cutoff_));
}

}  // namespace ncmot
