#ifndef NCMOT_SERIALIZE_HPP
#define NCMOT_SERIALIZE_HPP

#include "ncmot/category_kernel.hpp"
#include "ncmot/complexes.hpp"
#include "ncmot/nc_motives.hpp"
#include "ncmot/quiver.hpp"

#include <string>

namespace ncmot {

// JSON fixture documents. Every document is an object with keys
// "kind" (quiver | bimodule | complex | correspondence | category |
// orbitspec), "name", and a kind-specific "payload". All rationals are
// serialized as strings "p/q" or "n"; writers emit a canonical form so
// that load/save round trips are byte-identical.
//
// Loaders throw Error("BadRequest", ...) on malformed documents and
// propagate domain errors (e.g. CyclicQuiver) from construction.

struct FixtureInfo {
    std::string kind;
    std::string name;
};

FixtureInfo fixture_info(const std::string& text);

Quiver load_quiver(const std::string& text);  // checks acyclicity
std::string save_quiver(const Quiver& q, const std::string& name);

struct BimoduleFixture {
    PathAlgebraPtr left;
    PathAlgebraPtr right;
    ProjBimodule module;
};

BimoduleFixture load_bimodule(const std::string& text);
std::string save_bimodule(const BimoduleFixture& b, const std::string& name);

ProjComplex load_complex(const std::string& text);
std::string save_complex(const ProjComplex& c, const std::string& name);

Correspondence load_correspondence(const std::string& text);
std::string save_correspondence(const Correspondence& c, const std::string& name);

// Categories are parsed structurally only; call validate() to check the
// axioms (shape errors included).
PresentedCategory load_category(const std::string& text);
std::string save_category(const PresentedCategory& c, const std::string& name);

// Orbit data references category objects by label; resolve against a
// loaded category.
struct OrbitSpecDoc {
    std::string object;
    std::string inverse;
    long bound = 0;
};

OrbitSpecDoc load_orbitspec(const std::string& text);
std::string save_orbitspec(const OrbitSpecDoc& s, const std::string& name);
OrbitSpec resolve_orbit_spec(const OrbitSpecDoc& doc, const PresentedCategory& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ncmot

#endif
