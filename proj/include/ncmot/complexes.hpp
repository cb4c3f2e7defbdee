#ifndef NCMOT_COMPLEXES_HPP
#define NCMOT_COMPLEXES_HPP

#include "ncmot/bimodule.hpp"
#include "ncmot/matrix.hpp"
#include "ncmot/quiver.hpp"

#include <map>
#include <vector>

namespace ncmot {

// Bounded chain complex of Q-vector spaces; homological indexing, the
// differential d_n lowers degree n -> n-1.
struct VectComplex {
    int min_degree = 0;
    std::vector<std::size_t> dims;      // dims[i] is the dimension in degree min_degree + i
    std::vector<RatMatrix> diffs;       // diffs[i]: degree min+i -> min+i-1 (i >= 1); diffs[0] empty

    std::size_t n_terms() const { return dims.size(); }
    int degree_of(std::size_t i) const { return min_degree + static_cast<int>(i); }

    // Throws NotAComplex when d o d != 0 or shapes are inconsistent.
    void validate() const;

    std::map<int, std::size_t> homology_dims() const;

    // Alternating sum of dimensions; checked against the alternating
    // sum of homology dimensions, which must agree.
    mpz_class euler_char() const;
};

// Direct sum of projective bimodules: each (v, u) entry means one copy
// of P_(v,u) = A e_v (x) e_u B; multiplicity by repetition.
struct ProjBimodule {
    std::vector<std::pair<std::size_t, std::size_t>> summands;
};

// Element of Hom(P_(v,u), P_(v',u')): rational combination of terms
// a (x) b with a a path v' -> v and b a path u -> u'. The generator
// e_v (x) e_u is sent to a (x) b.
struct HomElem {
    struct Term {
        Rational coeff;
        std::size_t a_path;
        std::size_t b_path;
    };
    std::vector<Term> terms;

    bool empty() const { return terms.empty(); }
};

// Bounded complex of projective A-B-bimodules in canonical form.
struct ProjComplex {
    PathAlgebraPtr left_algebra;
    PathAlgebraPtr right_algebra;
    int min_degree = 0;
    std::vector<ProjBimodule> terms;
    // diffs[i][row][col]: component of d from summand col of terms[i]
    // to summand row of terms[i-1]; diffs[0] empty.
    std::vector<std::vector<std::vector<HomElem>>> diffs;

    std::size_t n_terms() const { return terms.size(); }
    int degree_of(std::size_t i) const { return min_degree + static_cast<int>(i); }

    void validate() const;  // shapes, path sorts, and d o d = 0

    // Realizes each term as an explicit Bimodule and expands the
    // differentials to matrices.
    VectComplex expand() const;
    std::vector<Bimodule> realize_terms() const;

    static ProjComplex single(PathAlgebraPtr a, PathAlgebraPtr b,
                              std::size_t v, std::size_t u, int degree = 0);
    // Cone of the identity of P_(v,u): contractible, class zero.
    static ProjComplex identity_cone(PathAlgebraPtr a, PathAlgebraPtr b,
                                     std::size_t v, std::size_t u, int degree = 0);

    ProjComplex shifted(int by) const;
    static ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);
};

std::map<int, std::size_t> homology_dims(const VectComplex& c);
mpz_class euler_char(const VectComplex& c);

// Total complex of the termwise tensor over the middle algebra B; the
// middle contraction expands P_(v,w) (x)_B P_(w',u) into dim(e_w B e_w')
// copies of P_(v,u). Sign (-1)^{deg in X} on the differential of Y.
ProjComplex tensor_over_middle(const ProjComplex& x, const ProjComplex& y);

// Alternating sum of summand multiplicities, indexed by k0_basis.
RatVector k0_class(const ProjComplex& c);

// 0 -> (+)_arrows P_(t(a),s(a)) -> (+)_v P_(v,v) -> 0 in degrees 1, 0;
// the generator of the a-summand maps to a (x) e_s(a) - e_t(a) (x) a.
ProjComplex standard_resolution(PathAlgebraPtr a);

struct SmoothProperReport {
    bool smooth = false;
    bool proper = false;
    std::size_t dimension = 0;
    std::size_t resolution_length = 0;
};

// Properness is finite dimension; smoothness is exactness of the
// standard resolution away from degree 0 with degree-0 homology of the
// same dimension as A, checked by ranks.
SmoothProperReport check_smooth_proper(PathAlgebraPtr a);

}  // namespace ncmot

#endif
