#include "ncmot/quiver.hpp"

#include <algorithm>
#include <set>

namespace ncmot {

std::size_t Quiver::vertex_index(const std::string& label) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label)
            return i;
    throw Error("UnknownVertex", "no vertex labelled '" + label + "'");
}

void Quiver::check_acyclic() const
{
    {
        std::set<std::string> seen(vertices.begin(), vertices.end());
        if (seen.size() != vertices.size())
            throw Error("DuplicateLabel", "vertex labels are not unique");
        std::set<std::string> names;
        for (const Arrow& a : arrows)
            if (!names.insert(a.name).second)
                throw Error("DuplicateLabel", "arrow name '" + a.name + "' is not unique");
    }
    // Kahn's algorithm; leftover vertices witness a cycle.
    std::vector<std::size_t> indeg(vertices.size(), 0);
    for (const Arrow& a : arrows) {
        if (a.source >= vertices.size() || a.target >= vertices.size())
            throw Error("UnknownVertex", "arrow endpoint out of range");
        ++indeg[a.target];
    }
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    std::size_t removed = 0;
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        ++removed;
        for (const Arrow& a : arrows)
            if (a.source == v && --indeg[a.target] == 0)
                queue.push_back(a.target);
    }
    if (removed != vertices.size())
        throw Error("CyclicQuiver", "quiver has a directed cycle");
}

PathAlgebra::PathAlgebra(Quiver q) : quiver_(std::move(q))
{
    quiver_.check_acyclic();
    const std::size_t nv = quiver_.vertices.size();

    for (std::size_t v = 0; v < nv; ++v)
        basis_.push_back(Path{v, v, {}});

    // Grow paths by appending arrows at the target end; acyclicity
    // terminates the enumeration.
    std::size_t frontier_begin = 0;
    while (frontier_begin < basis_.size()) {
        std::size_t frontier_end = basis_.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            Path base = basis_[i];
            for (std::size_t ai = 0; ai < quiver_.arrows.size(); ++ai) {
                if (quiver_.arrows[ai].source != base.target)
                    continue;
                Path p = base;
                p.arrows.push_back(ai);
                p.target = quiver_.arrows[ai].target;
                basis_.push_back(std::move(p));
            }
        }
        frontier_begin = frontier_end;
    }

    const std::size_t n = basis_.size();
    mult_.assign(n, std::vector<std::size_t>(n, npos));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (basis_[p].source != basis_[q].target)
                continue;
            Path prod;
            prod.source = basis_[q].source;
            prod.target = basis_[p].target;
            prod.arrows = basis_[q].arrows;
            prod.arrows.insert(prod.arrows.end(), basis_[p].arrows.begin(),
                               basis_[p].arrows.end());
            mult_[p][q] = find_path(prod);
        }

    hom_paths_.assign(nv, std::vector<std::vector<std::size_t>>(nv));
    from_.assign(nv, {});
    into_.assign(nv, {});
    for (std::size_t i = 0; i < n; ++i) {
        hom_paths_[basis_[i].target][basis_[i].source].push_back(i);
        from_[basis_[i].source].push_back(i);
        into_[basis_[i].target].push_back(i);
    }
}

std::size_t PathAlgebra::find_path(const Path& p) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == p)
            return i;
    throw Error("UnknownPath", "path not in basis");
}

std::string PathAlgebra::path_name(std::size_t i) const
{
    const Path& p = basis_[i];
    if (p.arrows.empty())
        return "e_" + quiver_.vertices[p.source];
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty())
            s += "*";
        s += quiver_.arrows[*it].name;
    }
    return s;
}

StructureAlgebra PathAlgebra::structure_constants() const
{
    const std::size_t n = dim();
    std::vector<std::vector<RatVector>> sc(n, std::vector<RatVector>(n, RatVector(n, Rational(0))));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (mult_[p][q] != npos)
                sc[p][q][mult_[p][q]] = 1;
    return StructureAlgebra(n, std::move(sc));
}

PathAlgebraPtr path_algebra(Quiver q)
{
    return std::make_shared<PathAlgebra>(std::move(q));
}

std::size_t projective_dims(const PathAlgebra& a, const PathAlgebra& b,
                            std::size_t v, std::size_t u)
{
    if (v >= a.n_vertices() || u >= b.n_vertices())
        throw Error("UnknownVertex", "vertex index out of range");
    return a.paths_from(v).size() * b.paths_into(u).size();
}

std::vector<std::pair<std::size_t, std::size_t>> k0_basis(const PathAlgebra& a,
                                                          const PathAlgebra& b)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < a.n_vertices(); ++v)
        for (std::size_t u = 0; u < b.n_vertices(); ++u)
            out.emplace_back(v, u);
    return out;
}

std::size_t EnvelopingAlgebra::pair_index(std::size_t i, std::size_t j) const
{
    return i * right->dim() + j;
}

EnvelopingAlgebra enveloping_algebra(PathAlgebraPtr a, PathAlgebraPtr b)
{
    EnvelopingAlgebra env{a, b, StructureAlgebra(0, {}), {}};
    const std::size_t da = a->dim(), db = b->dim(), n = da * db;
    std::vector<std::vector<RatVector>> sc(n, std::vector<RatVector>(n, RatVector(n, Rational(0))));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    // opposite order on the first factor
                    std::size_t pa = a->mult(k, i);
                    std::size_t pb = b->mult(j, l);
                    if (pa != npos && pb != npos)
                        sc[i * db + j][k * db + l][pa * db + pb] = 1;
                }
    env.algebra = StructureAlgebra(n, std::move(sc));
    for (auto [v, u] : k0_basis(*a, *b))
        env.vertex_pair_idempotents.push_back(env.pair_index(a->idempotent(v), b->idempotent(u)));
    return env;
}

}  // namespace ncmot
