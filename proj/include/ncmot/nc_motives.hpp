#ifndef NCMOT_NC_MOTIVES_HPP
#define NCMOT_NC_MOTIVES_HPP

#include "ncmot/category_kernel.hpp"
#include "ncmot/complexes.hpp"
#include "ncmot/hochschild.hpp"

#include <string>
#include <vector>

namespace ncmot {

// Idempotent-compressed dimension data of an algebra: everything the
// class-level calculus needs. hom[x][y] = dim e_x A e_y. Tensor-product
// algebras of two path algebras live here even though they are not path
// algebras themselves.
struct ClassAlgebra {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> hom;

    std::size_t n() const { return labels.size(); }

    static ClassAlgebra of(const PathAlgebra& a);
    static ClassAlgebra tensor(const ClassAlgebra& x, const ClassAlgebra& y);
};

// Classes of correspondences A -> B are vectors over the basis of
// vertex pairs (v, u), flattened as v * n(B) + u.

// [P_(v,w)] then [P_(w',u)]: contraction through the middle algebra,
// each middle pair weighted by dim(e_w B e_w').
RatVector compose_classes(const ClassAlgebra& a, const ClassAlgebra& b,
                          const ClassAlgebra& c, const RatVector& x,
                          const RatVector& y);

// chi(HH) of an endo class; the closed form of hh_euler extended to
// tensor-product algebras.
Rational trace_class(const ClassAlgebra& a, const RatVector& cls);

// External tensor [P_(v,u)] x [P_(v',u')] = [P_((v,v'),(u,u'))] over the
// tensor-product algebras.
RatVector tensor_classes(const ClassAlgebra& a, const ClassAlgebra& b,
                         const ClassAlgebra& a2, const ClassAlgebra& b2,
                         const RatVector& x, const RatVector& y);

RatVector identity_class(const ClassAlgebra& a);

// Formal F-combination of bimodule-complex classes between two path
// algebras, carrying explicit representatives for the homological
// oracle.
struct Correspondence {
    struct Term {
        Rational coeff;
        ProjComplex rep;
    };

    PathAlgebraPtr source;
    PathAlgebraPtr target;
    std::vector<Term> terms;
    RatVector cached_class;

    static Correspondence make(PathAlgebraPtr source, PathAlgebraPtr target,
                               std::vector<Term> terms);
    // Class-only correspondence: one single-projective representative
    // per nonzero coefficient.
    static Correspondence from_class(PathAlgebraPtr source, PathAlgebraPtr target,
                                     const RatVector& cls);
    static Correspondence identity(PathAlgebraPtr a);
    static Correspondence zero(PathAlgebraPtr source, PathAlgebraPtr target);

    void validate() const;  // endpoints and cached-class consistency
};

// Y after X, Eq-style: terms are all pairwise middle tensors with
// coefficients a_i * b_j. Throws MiddleMismatch unless target(X) is
// source(Y).
Correspondence compose(const Correspondence& x, const Correspondence& y);

// <X.Y> = sum a_i b_j chi(HH(A; X_i (x)_B Y_j)); computed on classes.
Rational intersection_number(const Correspondence& x, const Correspondence& y);

// tr(Z) = chi(HH(A; -)) of the cached class (endomorphisms only).
Rational categorical_trace(const Correspondence& z);

// Object of the motive category: algebra plus idempotent endo class.
struct NCMotive {
    PathAlgebraPtr algebra;
    Correspondence idempotent;

    static NCMotive whole(PathAlgebraPtr a);  // e = id
    void validate() const;                    // e o e = e at class level
};

// Basis (as columns over k0_basis(A,B)) of the compressed hom space
// e' o K0(A,B) o e.
RatMatrix motive_hom_basis(const NCMotive& x, const NCMotive& y);

// Gram matrix of (f, g) -> tr(g o f) over the compressed hom bases of
// Hom(X,Y) and Hom(Y,X).
RatMatrix gram_matrix(const NCMotive& x, const NCMotive& y);

// Numerical triviality of a correspondence against a finite context of
// motives: true iff tr(g o X) = 0 for every g in the compressed hom
// spaces Hom((B,e'),(A,e)) drawn from context motives on the endpoint
// algebras. An empty context means the uncompressed check.
bool is_numerically_trivial(const Correspondence& x,
                            const std::vector<NCMotive>& context);

// The same check at the class level over arbitrary ClassAlgebras; this
// is what the external-tensor ideal tests run on, where the ambient
// algebras are tensor products and carry no path presentation.
bool class_numerically_trivial(const ClassAlgebra& a, const ClassAlgebra& b,
                               const RatVector& cls);

// The full subcategory of the correspondence category on the given
// motives, presented over the compressed hom bases with composition
// structure constants, diagonal identities, and trace functionals. When
// a one-vertex whole motive is listed, it is marked as the unit object
// (its End is the base field); the export carries no tensor data.
PresentedCategory export_presented_category(const std::vector<NCMotive>& objects);

}  // namespace ncmot

#endif
