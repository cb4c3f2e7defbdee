#ifndef NCMOT_CATEGORY_KERNEL_HPP
#define NCMOT_CATEGORY_KERNEL_HPP

#include "ncmot/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncmot {

// A finite F-linear additive category presented by hom bases and
// structure constants. Morphism coordinates are column vectors over the
// chosen basis of Hom(a, b); comp(a,b,c)[i][j] holds the coordinates of
// g_j o f_i for f_i: a -> b, g_j: b -> c.
//
// Optional layers: a cyclic trace functional per object, and strict
// monoidal data with a partial object product table (absent products
// mean the zero object and kill all morphism products through them).
struct PresentedCategory {
    static constexpr std::size_t no_object = static_cast<std::size_t>(-1);

    std::vector<std::string> objects;
    std::vector<std::vector<std::size_t>> hom_dims;
    // comp[a][b][c][i][j]: RatVector of length hom_dims[a][c]
    std::vector<std::vector<std::vector<std::vector<std::vector<RatVector>>>>> comp;
    std::vector<RatVector> ids;

    bool has_trace = false;
    std::vector<RatVector> trace;  // trace[a]: functional on End(a)

    bool has_tensor = false;
    std::size_t unit = no_object;
    // prod[a][b]: object index of a (x) b, or no_object for zero
    std::vector<std::vector<std::size_t>> prod;
    // mor_prod[a][b][c][d][i][j]: coordinates of f_i (x) g_j in
    // Hom(a (x) c, b (x) d), for f_i: a -> b, g_j: c -> d; empty when
    // the product object vanishes.
    std::vector<std::vector<std::vector<std::vector<std::vector<std::vector<RatVector>>>>>>
        mor_prod;

    std::size_t n_objects() const { return objects.size(); }
    std::size_t dim(std::size_t a, std::size_t b) const { return hom_dims[a][b]; }

    // Bilinear composition of coordinate vectors: returns g o f.
    RatVector compose(std::size_t a, std::size_t b, std::size_t c,
                      const RatVector& f, const RatVector& g) const;
    // f (x) g for f: a -> b, g: c -> d; empty vector when the product
    // object vanishes.
    RatVector mor_tensor(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                         const RatVector& f, const RatVector& g) const;
    Rational tr(std::size_t a, const RatVector& endo) const;

    std::size_t object_index(const std::string& label) const;

    // Associativity, unit laws, trace cyclicity, and (when present)
    // tensor functoriality. Throws BadCategory / TraceCyclicityViolation.
    void validate() const;

    // One object, End = F, trace = identity; with tensor data making it
    // the unit.
    static PresentedCategory scalar(const std::string& label = "1");
};

// Subspace of each hom space; basis[a][b] is a list of coordinate
// vectors in Hom(a, b).
struct TensorIdeal {
    std::vector<std::vector<std::vector<RatVector>>> basis;

    std::size_t dim(std::size_t a, std::size_t b) const { return basis[a][b].size(); }
    bool contains(std::size_t a, std::size_t b, const RatVector& f) const;
};

// Per pair (X, Y), the radical of (f, g) -> tr(g o f). Throws
// TraceMissing without trace data; the result is validated as an ideal
// (and a tensor ideal when tensor data is present).
TensorIdeal numerical_ideal(const PresentedCategory& c);

// Closure of I under pre/post composition and, when tensor data is
// present, under tensoring with identities. Throws NotAnIdeal.
void validate_ideal(const PresentedCategory& c, const TensorIdeal& i);

struct QuotientResult {
    PresentedCategory category;
    // projection[a][b]: matrix from Hom_C(a,b) coordinates to quotient
    // coordinates
    std::vector<std::vector<RatMatrix>> projection;
    // section[a][b]: columns are the chosen complement representatives
    std::vector<std::vector<RatMatrix>> section;
};

QuotientResult quotient_by_ideal(const PresentedCategory& c, const TensorIdeal& i);

struct KaroubiResult {
    PresentedCategory category;
    // For each new object: the underlying C object and its idempotent.
    std::vector<std::size_t> base_object;
    std::vector<RatVector> idempotent;
    // identity_object[x]: index of (X, id) among the new objects.
    std::vector<std::size_t> identity_object;
    // embed[x][y]: columns = ambient Hom coordinates of the chosen
    // basis of Hom((X,e),(Y,e')).
    std::vector<std::vector<RatMatrix>> embed;
};

// Objects: (X, id) for every X, then (X, e) for each listed idempotent.
// Tensor data survives only when the idempotent list is closed under
// products. Throws NotIdempotent.
KaroubiResult karoubi_envelope(const PresentedCategory& c,
                               const std::vector<std::vector<RatVector>>& idempotents);

struct OrbitSpec {
    std::size_t obj;      // O
    std::size_t inverse;  // O^{-1}, with O (x) O^{-1} = O^{-1} (x) O = unit strictly
    long bound = 0;       // Hom(X, Y (x) O^j) = 0 whenever |j| > bound
};

struct OrbitResult {
    PresentedCategory category;
    // Degree blocks: per pair (x, y), per j in [-b, b], the offset of
    // the block Hom(X, Y (x) O^j) inside Hom_orbit(X, Y).
    std::vector<std::vector<std::vector<std::size_t>>> block_offset;
    std::vector<std::vector<std::vector<std::size_t>>> block_dim;
    long bound = 0;
};

// The orbit category C / -(x)O with hom spaces (+)_{|j|<=b}
// Hom(X, Y (x) O^j). Throws UnboundedSupport when the declared bound is
// wrong, BadCategory when O is not strictly invertible.
OrbitResult orbit_category(const PresentedCategory& c, const OrbitSpec& spec);

// Right-iterated product X (x) O^j (j may be negative); no_object when
// it vanishes.
std::size_t orbit_power(const PresentedCategory& c, const OrbitSpec& spec,
                        std::size_t x, long j);

// Largest-proper-ideal test per the trace characterization. Requires
// End(unit) = F; throws UnitEndNotF.
bool is_largest_ideal(const PresentedCategory& c, const TensorIdeal& i);

struct SemisimpleReport {
    std::vector<std::size_t> end_radical_dims;     // per object
    std::vector<std::vector<std::size_t>> pairing_defects;  // per pair
    bool finite_dimensional = true;  // structural
    bool semisimple = false;
};

SemisimpleReport check_semisimple(const PresentedCategory& c);

// Requires f nilpotent (f^n = 0, n <= dim End; throws NotNilpotent);
// returns tr(f^m) = 0 for all m >= 1.
bool nilpotent_trace_check(const PresentedCategory& c, std::size_t obj,
                           const RatVector& f);

// Two-sided inverse as a linear system; nullopt when f is not
// invertible.
std::optional<RatVector> invert_morphism(const PresentedCategory& c, std::size_t a,
                                         std::size_t b, const RatVector& f);

struct ConservativityReport {
    bool invertible_in_c = false;
    bool invertible_in_orbit = false;
    bool consistent = false;
};

ConservativityReport conservativity_check(const PresentedCategory& c,
                                          const OrbitSpec& spec, std::size_t a,
                                          std::size_t b, const RatVector& f);

struct ConstructionOrderReport {
    bool hypothesis_ok = false;
    bool ker_alpha_in_ideal = false;
    bool beta_bijective = false;
    bool gamma_bijective = false;
    std::vector<std::vector<std::size_t>> dims_first;   // Karoubi(quot(orbit(D)))
    std::vector<std::vector<std::size_t>> dims_second;  // orbit(Karoubi(quot(D)))
    bool ok() const
    {
        return hypothesis_ok && ker_alpha_in_ideal && beta_bijective &&
               gamma_bijective && dims_first == dims_second;
    }
};

// Builds both composite categories along the comparison maps and checks
// the equivalences. idempotents lists idempotent endomorphisms per
// object of D; both sides receive their images. Throws HypothesisFailed
// when Hom(1, O^j) is not F-for-j=0-else-0 over the validated window.
ConstructionOrderReport verify_construction_order(const PresentedCategory& d, const OrbitSpec& spec,
                           const std::vector<std::vector<RatVector>>& idempotents);

}  // namespace ncmot

#endif
