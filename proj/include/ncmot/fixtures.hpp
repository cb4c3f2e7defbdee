#ifndef NCMOT_FIXTURES_HPP
#define NCMOT_FIXTURES_HPP

#include "ncmot/category_kernel.hpp"
#include "ncmot/quiver.hpp"
#include "ncmot/serialize.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ncmot {

// Canonical in-memory builders for the bundled fixture corpus. The JSON
// files under fixtures/ are exactly the serializations of these values;
// tests pin that correspondence byte for byte.

struct NamedQuiver {
    std::string name;
    Quiver quiver;
};

// point, two-points, a2, a3, fork — all acyclic.
std::vector<NamedQuiver> corpus_quivers();

// One object with End = F[x]/x^2, tr(a + bx) = a, strict tensor by
// algebra multiplication.
PresentedCategory dual_numbers_category();

// Invertible lines in degrees -radius..radius under the graded tensor
// product; every End is F and the trace is the identity.
PresentedCategory graded_lines_category(int radius = 2);

// graded_lines_category plus one extra object M with End = F[x]/x^2
// (tr(a + bx) = a): a monoidal presentation with nonzero numerical
// ideal that still admits the degree-1 orbit construction.
PresentedCategory nilpotent_block_category(int radius = 2);

// Degree-1 shift data for the two graded categories above.
OrbitSpecDoc shift_orbit_doc(long bound = 4);

// The full corpus as (file name, document text) pairs.
std::vector<std::pair<std::string, std::string>> corpus_documents();

}  // namespace ncmot

#endif
