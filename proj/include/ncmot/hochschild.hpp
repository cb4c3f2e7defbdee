#ifndef NCMOT_HOCHSCHILD_HPP
#define NCMOT_HOCHSCHILD_HPP

#include "ncmot/complexes.hpp"

#include <map>
#include <variant>

namespace ncmot {

using HHCoefficients = std::variant<Bimodule, ProjComplex>;

enum class HHMethod { standard, bar };

struct HHRequest {
    PathAlgebraPtr algebra;
    HHCoefficients coefficients;
    HHMethod method = HHMethod::standard;
    std::size_t cutoff = 4;  // bar only
};

// Hochschild homology complex of A with the given coefficients.
//
// standard: W (x)_{A^e} P with P the two-term standard resolution of the
// diagonal; degree 0 is (+)_v e_v W e_v, degree 1 is (+)_arrows
// e_{s} W e_{t}, d(w) = w.alpha - alpha.w. For complex coefficients the
// total complex of the bicomplex.
//
// bar: the bar complex W (x) A^{(x)n} truncated at the cutoff; homology
// is certified in degrees <= cutoff-2 and the truncation is accepted
// only once the dims have died off in the last two certified degrees.
// Throws UnstableTruncation otherwise.
VectComplex hh_complex(const HHRequest& req);

// chi(HH(A; -)) on K0 classes over A^op (x) A, by the closed form
// chi(HH(A; P_(v,u))) = dim(e_u A e_v), extended linearly.
Rational hh_euler(const PathAlgebra& a, const RatVector& cls);

// chi of the standard-resolution complex; for complex coefficients also
// checked against hh_euler on the K0 class.
Rational hh_class(PathAlgebraPtr a, const HHCoefficients& w);

// Bar-complex Euler characteristic: the independent oracle. For complex
// coefficients evaluated termwise (chi is additive), with a per-summand
// cache.
class BarOracle {
public:
    explicit BarOracle(std::size_t cutoff = 4) : cutoff_(cutoff) {}

    Rational euler(PathAlgebraPtr a, const HHCoefficients& w);

private:
    Rational euler_bimodule(PathAlgebraPtr a, const Bimodule& w);

    std::size_t cutoff_;
    std::map<std::tuple<const PathAlgebra*, std::size_t, std::size_t>, Rational> cache_;
};

}  // namespace ncmot

#endif
