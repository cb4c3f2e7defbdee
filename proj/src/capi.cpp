#include "ncmotives.h"

#include "ncmot/category_kernel.hpp"
#include "ncmot/complexes.hpp"
#include "ncmot/nc_motives.hpp"
#include "ncmot/serialize.hpp"
#include "ncmot/verify.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using ncmot::Error;

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Input-shape errors exit with 2; everything else that throws is a
// verified-false domain failure and exits with 1.
int status_of(const std::string& code)
{
    static const char* const malformed[] = {
        "BadRequest",  "BadRational",       "CyclicQuiver", "DuplicateLabel",
        "UnknownVertex", "UnknownPath",     "UnknownObject",
        "MiddleMismatch", "DimensionMismatch"};
    for (const char* c : malformed)
        if (code == c)
            return 2;
    return 1;
}

int finish(char** out, int status, const json& body)
{
    if (out)
        *out = dup_string(body.dump() + "\n");
    return status;
}

int guarded(char** out, const std::function<json()>& fn, int ok_status = 0)
{
    try {
        return finish(out, ok_status, fn());
    } catch (const Error& e) {
        json err;
        err["error"] = e.code();
        err["message"] = e.what();
        return finish(out, status_of(e.code()), err);
    } catch (const std::exception& e) {
        json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        return finish(out, 1, err);
    }
}

const char* require(const char* s, const char* what)
{
    if (!s)
        throw Error("BadRequest", std::string(what) + " is null");
    return s;
}

json parsed_document(const std::string& text)
{
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw Error("Internal", "generated document failed to parse");
    return j;
}

json size_rows(const std::vector<std::vector<std::size_t>>& m)
{
    json out = json::array();
    for (const auto& row : m)
        out.push_back(row);
    return out;
}

ncmot::Correspondence load_endo(const char* text)
{
    ncmot::Correspondence c =
        ncmot::load_correspondence(require(text, "correspondence document"));
    return c;
}

std::vector<std::vector<ncmot::RatVector>> parse_idempotents(
    const char* text, const ncmot::PresentedCategory& c)
{
    std::vector<std::vector<ncmot::RatVector>> out(c.n_objects());
    if (!text || std::string(text).empty() || std::string(text) == "[]")
        return out;
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw Error("BadRequest", "idempotents must be a JSON array");
    if (j.size() != c.n_objects())
        throw Error("BadRequest", "idempotent list length must match objects");
    for (std::size_t x = 0; x < out.size(); ++x) {
        if (!j[x].is_array())
            throw Error("BadRequest", "idempotents per object must be arrays");
        for (const json& e : j[x]) {
            if (!e.is_array())
                throw Error("BadRequest", "idempotents must be coordinate arrays");
            ncmot::RatVector v;
            for (const json& s : e) {
                if (!s.is_string())
                    throw Error("BadRequest", "rationals must be strings");
                v.push_back(ncmot::rat_parse(s.get<std::string>()));
            }
            out[x].push_back(std::move(v));
        }
    }
    return out;
}

json check_report(const std::string& text)
{
    ncmot::FixtureInfo info = ncmot::fixture_info(text);
    json rep;
    rep["kind"] = info.kind;
    rep["name"] = info.name;
    if (info.kind == "quiver") {
        ncmot::PathAlgebraPtr a = ncmot::path_algebra(ncmot::load_quiver(text));
        ncmot::SmoothProperReport sp = ncmot::check_smooth_proper(a);
        rep["smooth"] = sp.smooth;
        rep["proper"] = sp.proper;
        rep["dimension"] = sp.dimension;
        rep["resolution_length"] = sp.resolution_length;
    } else if (info.kind == "bimodule") {
        ncmot::BimoduleFixture b = ncmot::load_bimodule(text);
        std::size_t dim = 0;
        for (const auto& [v, u] : b.module.summands)
            dim += ncmot::projective_dims(*b.left, *b.right, v, u);
        rep["summands"] = b.module.summands.size();
        rep["dimension"] = dim;
    } else if (info.kind == "complex") {
        ncmot::ProjComplex c = ncmot::load_complex(text);
        c.validate();
        ncmot::VectComplex v = c.expand();
        rep["terms"] = c.n_terms();
        rep["euler_char"] = v.euler_char().get_str();
    } else if (info.kind == "correspondence") {
        ncmot::Correspondence c = ncmot::load_correspondence(text);
        c.validate();
        json cls = json::array();
        for (const ncmot::Rational& x : c.cached_class)
            cls.push_back(ncmot::rat_print(x));
        rep["terms"] = c.terms.size();
        rep["k0_class"] = std::move(cls);
    } else if (info.kind == "category") {
        ncmot::PresentedCategory c = ncmot::load_category(text);
        c.validate();
        rep["objects"] = c.n_objects();
        rep["has_trace"] = c.has_trace;
        rep["has_tensor"] = c.has_tensor;
    } else if (info.kind == "orbitspec") {
        ncmot::OrbitSpecDoc s = ncmot::load_orbitspec(text);
        rep["object"] = s.object;
        rep["inverse"] = s.inverse;
        rep["bound"] = s.bound;
    } else {
        throw Error("BadRequest", "unknown fixture kind '" + info.kind + "'");
    }
    rep["valid"] = true;
    return rep;
}

}  // namespace

extern "C" {

int ncm_check(const char* fixture_json, char** out)
{
    return guarded(out, [&] {
        return check_report(require(fixture_json, "fixture document"));
    });
}

int ncm_trace(const char* correspondence_json, char** out)
{
    return guarded(out, [&] {
        ncmot::Correspondence c = load_endo(correspondence_json);
        json rep;
        rep["trace"] = ncmot::rat_print(ncmot::categorical_trace(c));
        return rep;
    });
}

int ncm_pair(const char* corr_x_json, const char* corr_y_json, char** out)
{
    return guarded(out, [&] {
        ncmot::Correspondence x = load_endo(corr_x_json);
        ncmot::Correspondence y = load_endo(corr_y_json);
        // Round-trip pairing needs shared endpoints; documents with
        // identical quivers qualify.
        if (ncmot::save_quiver(x.source->quiver(), "q") !=
                ncmot::save_quiver(y.target->quiver(), "q") ||
            ncmot::save_quiver(x.target->quiver(), "q") !=
                ncmot::save_quiver(y.source->quiver(), "q"))
            throw Error("MiddleMismatch", "documents do not form a round trip");
        ncmot::Correspondence y2 =
            ncmot::Correspondence::from_class(x.target, x.source, y.cached_class);
        json rep;
        rep["intersection_number"] =
            ncmot::rat_print(ncmot::intersection_number(x, y2));
        return rep;
    });
}

int ncm_gram(const char* motive_corr_json, char** out)
{
    return guarded(out, [&] {
        ncmot::Correspondence e = load_endo(motive_corr_json);
        if (e.source != e.target)
            throw Error("MiddleMismatch", "motive idempotent must be an endo");
        ncmot::NCMotive m{e.source, e};
        m.validate();
        ncmot::RatMatrix g = ncmot::gram_matrix(m, m);
        json rows = json::array();
        for (std::size_t r = 0; r < g.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < g.cols(); ++c)
                row.push_back(ncmot::rat_print(g.at(r, c)));
            rows.push_back(std::move(row));
        }
        json rep;
        rep["rows"] = g.rows();
        rep["cols"] = g.cols();
        rep["matrix"] = std::move(rows);
        rep["radical_dim"] = ncmot::pairing_radical(g).size();
        return rep;
    });
}

int ncm_radical(const char* category_json, char** out)
{
    return guarded(out, [&] {
        ncmot::PresentedCategory c =
            ncmot::load_category(require(category_json, "category document"));
        c.validate();
        ncmot::TensorIdeal ideal = ncmot::numerical_ideal(c);
        std::vector<std::vector<std::size_t>> dims(
            c.n_objects(), std::vector<std::size_t>(c.n_objects(), 0));
        std::size_t total = 0;
        for (std::size_t a = 0; a < c.n_objects(); ++a)
            for (std::size_t b = 0; b < c.n_objects(); ++b) {
                dims[a][b] = ideal.dim(a, b);
                total += dims[a][b];
            }
        json rep;
        rep["radical_dims"] = size_rows(dims);
        rep["total"] = total;
        return rep;
    });
}

int ncm_quotient(const char* category_json, char** out)
{
    return guarded(out, [&] {
        ncmot::PresentedCategory c =
            ncmot::load_category(require(category_json, "category document"));
        c.validate();
        ncmot::QuotientResult q =
            ncmot::quotient_by_ideal(c, ncmot::numerical_ideal(c));
        json rep;
        rep["hom_dims"] = size_rows(q.category.hom_dims);
        rep["category"] =
            parsed_document(ncmot::save_category(q.category, "quotient"));
        return rep;
    });
}

int ncm_karoubi(const char* category_json, const char* idempotents_json,
                char** out)
{
    return guarded(out, [&] {
        ncmot::PresentedCategory c =
            ncmot::load_category(require(category_json, "category document"));
        c.validate();
        ncmot::KaroubiResult k =
            ncmot::karoubi_envelope(c, parse_idempotents(idempotents_json, c));
        json rep;
        rep["objects"] = k.category.objects;
        rep["hom_dims"] = size_rows(k.category.hom_dims);
        rep["category"] =
            parsed_document(ncmot::save_category(k.category, "karoubi"));
        return rep;
    });
}

int ncm_orbit(const char* category_json, const char* orbitspec_json, char** out)
{
    return guarded(out, [&] {
        ncmot::PresentedCategory c =
            ncmot::load_category(require(category_json, "category document"));
        c.validate();
        ncmot::OrbitSpecDoc doc =
            ncmot::load_orbitspec(require(orbitspec_json, "orbitspec document"));
        ncmot::OrbitResult o =
            ncmot::orbit_category(c, ncmot::resolve_orbit_spec(doc, c));
        json rep;
        rep["bound"] = o.bound;
        rep["hom_dims"] = size_rows(o.category.hom_dims);
        rep["category"] =
            parsed_document(ncmot::save_category(o.category, "orbit"));
        return rep;
    });
}

int ncm_semisimple(const char* category_json, int after_quotient, char** out)
{
    int verdict_status = 0;
    int status = guarded(out, [&] {
        ncmot::PresentedCategory c =
            ncmot::load_category(require(category_json, "category document"));
        c.validate();
        if (after_quotient)
            c = ncmot::quotient_by_ideal(c, ncmot::numerical_ideal(c)).category;
        ncmot::SemisimpleReport rep = ncmot::check_semisimple(c);
        json body;
        body["semisimple"] = rep.semisimple;
        body["finite_dimensional"] = rep.finite_dimensional;
        body["end_radical_dims"] = rep.end_radical_dims;
        body["pairing_defects"] = size_rows(rep.pairing_defects);
        if (!rep.semisimple)
            verdict_status = 1;
        return body;
    });
    return status != 0 ? status : verdict_status;
}

int ncm_verify(const char* suite, const char* fixture_dir,
               unsigned long long seed, char** out)
{
    int verdict_status = 0;
    int status = guarded(out, [&] {
        ncmot::VerifyOptions opt;
        if (fixture_dir)
            opt.fixture_dir = fixture_dir;
        opt.seed = seed;
        std::vector<ncmot::SuiteReport> reports;
        std::string name = require(suite, "suite name");
        if (name == "all")
            reports = ncmot::verify_all(opt);
        else
            reports.push_back(ncmot::verify_suite(name, opt));
        json body;
        json suites = json::array();
        bool ok = true;
        for (const ncmot::SuiteReport& r : reports) {
            json jr;
            jr["suite"] = r.suite;
            jr["assertions"] = r.assertions;
            jr["failures"] = r.failures;
            jr["passed"] = r.passed();
            jr["details"] = r.details;
            suites.push_back(std::move(jr));
            ok = ok && r.passed();
        }
        body["suites"] = std::move(suites);
        body["passed"] = ok;
        if (!ok)
            verdict_status = 1;
        return body;
    });
    return status != 0 ? status : verdict_status;
}

void ncm_string_free(char* s) { std::free(s); }

}  // extern "C"
