#ifndef NCMOT_QUIVER_HPP
#define NCMOT_QUIVER_HPP

#include "ncmot/algebra.hpp"
#include "ncmot/matrix.hpp"

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace ncmot {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

// Finite quiver. Vertex and arrow order is declaration order; all bases
// downstream are deterministic in it.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(const std::string& label) const;

    // Throws CyclicQuiver when a directed cycle exists.
    void check_acyclic() const;
};

// A directed path. Arrows are listed in traversal order (first arrow
// leaves the source). An empty arrow list is the lazy path e_v.
struct Path {
    std::size_t source;
    std::size_t target;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

// Path algebra of an acyclic quiver over Q. Basis: lazy paths e_v in
// vertex order, then longer paths by length and lexicographic arrow
// order. Product p * q is "p after q", defined when source(p) ==
// target(q); so e_{target(p)} * p * e_{source(p)} = p.
class PathAlgebra {
public:
    explicit PathAlgebra(Quiver q);

    const Quiver& quiver() const { return quiver_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t n_vertices() const { return quiver_.vertices.size(); }
    const Path& path(std::size_t i) const { return basis_[i]; }

    std::size_t idempotent(std::size_t vertex) const { return vertex; }

    // Index of p * q, or npos when not composable.
    std::size_t mult(std::size_t p, std::size_t q) const { return mult_[p][q]; }

    // Paths from y to x, i.e. the basis of e_x A e_y.
    const std::vector<std::size_t>& paths_between(std::size_t x, std::size_t y) const
    {
        return hom_paths_[x][y];
    }
    std::size_t hom_dim(std::size_t x, std::size_t y) const { return hom_paths_[x][y].size(); }

    // Basis of A e_v (paths with source v).
    const std::vector<std::size_t>& paths_from(std::size_t v) const { return from_[v]; }
    // Basis of e_u A (paths with target u).
    const std::vector<std::size_t>& paths_into(std::size_t u) const { return into_[u]; }

    std::string path_name(std::size_t i) const;
    std::size_t find_path(const Path& p) const;

    StructureAlgebra structure_constants() const;

private:
    Quiver quiver_;
    std::vector<Path> basis_;
    std::vector<std::vector<std::size_t>> mult_;
    std::vector<std::vector<std::vector<std::size_t>>> hom_paths_;
    std::vector<std::vector<std::size_t>> from_, into_;
};

using PathAlgebraPtr = std::shared_ptr<const PathAlgebra>;

PathAlgebraPtr path_algebra(Quiver q);

// dim P_(v,u) = dim(A e_v) * dim(e_u B).
std::size_t projective_dims(const PathAlgebra& a, const PathAlgebra& b,
                            std::size_t v, std::size_t u);

// Deterministic basis of K0(A^op (x) B)_F: vertex pairs (v, u),
// lexicographic in declared vertex order.
std::vector<std::pair<std::size_t, std::size_t>> k0_basis(const PathAlgebra& a,
                                                          const PathAlgebra& b);

// The enveloping-style product A^op (x) B: basis = path pairs,
// (a (x) b)(a' (x) b') = (a'a) (x) (bb').
struct EnvelopingAlgebra {
    PathAlgebraPtr left;   // A, acting through its opposite
    PathAlgebraPtr right;  // B
    StructureAlgebra algebra;
    // pair (i, j) of path indices -> flat basis index i * dim(B) + j
    std::size_t pair_index(std::size_t i, std::size_t j) const;
    // primitive idempotents, one per vertex pair in k0_basis order
    std::vector<std::size_t> vertex_pair_idempotents;
};

EnvelopingAlgebra enveloping_algebra(PathAlgebraPtr a, PathAlgebraPtr b);

}  // namespace ncmot

#endif
