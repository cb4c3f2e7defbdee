#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncmotives.h"

#include "ncmot/fixtures.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <string>

using json = nlohmann::ordered_json;

namespace {

std::string fixture(const std::string& file)
{
    for (const auto& [name, text] : ncmot::corpus_documents())
        if (name == file)
            return text;
    FAIL("missing corpus document ", file);
    return {};
}

std::string fixture_dir()
{
    if (const char* env = std::getenv("NCMOT_FIXTURES"))
        return env;
    return "fixtures";
}

struct Result {
    int status = -1;
    json body;
};

Result capture(int status, char** out)
{
    Result r;
    r.status = status;
    REQUIRE(*out != nullptr);
    r.body = json::parse(std::string(*out), nullptr, false);
    ncm_string_free(*out);
    *out = nullptr;
    REQUIRE(!r.body.is_discarded());
    return r;
}

}  // namespace

TEST_CASE("check accepts every bundled document")
{
    for (const auto& [name, text] : ncmot::corpus_documents()) {
        CAPTURE(name);
        char* out = nullptr;
        Result r = capture(ncm_check(text.c_str(), &out), &out);
        CHECK(r.status == 0);
        CHECK(r.body["valid"] == true);
    }
}

TEST_CASE("check reports kind-specific invariants")
{
    char* out = nullptr;
    Result q = capture(ncm_check(fixture("a2.quiver.json").c_str(), &out), &out);
    CHECK(q.body["kind"] == "quiver");
    CHECK(q.body["smooth"] == true);
    CHECK(q.body["proper"] == true);

    Result c =
        capture(ncm_check(fixture("a2-standard.complex.json").c_str(), &out), &out);
    CHECK(c.body["terms"] == 2);
    CHECK(c.body["euler_char"] == "3");

    Result corr =
        capture(ncm_check(fixture("a2-id.correspondence.json").c_str(), &out), &out);
    CHECK(corr.body["k0_class"] == json::array({"1", "0", "-1", "1"}));
}

TEST_CASE("check rejects malformed input with status 2")
{
    char* out = nullptr;
    CHECK(capture(ncm_check("not json", &out), &out).status == 2);
    CHECK(capture(ncm_check("{\"kind\":\"widget\",\"name\":\"x\",\"payload\":{}}",
                            &out),
                  &out)
              .status == 2);
    Result r = capture(ncm_check(nullptr, &out), &out);
    CHECK(r.status == 2);
    CHECK(r.body["error"] == "BadRequest");
}

TEST_CASE("trace of bundled endo-correspondences")
{
    char* out = nullptr;
    Result id =
        capture(ncm_trace(fixture("a2-id.correspondence.json").c_str(), &out), &out);
    CHECK(id.status == 0);
    CHECK(id.body["trace"] == "2");

    Result p =
        capture(ncm_trace(fixture("a2-p12.correspondence.json").c_str(), &out), &out);
    CHECK(p.status == 0);
    CHECK(p.body["trace"] == "1");
}

TEST_CASE("pairing needs a round trip")
{
    std::string a2id = fixture("a2-id.correspondence.json");
    char* out = nullptr;
    Result ok = capture(ncm_pair(a2id.c_str(), a2id.c_str(), &out), &out);
    CHECK(ok.status == 0);
    CHECK(ok.body["intersection_number"] == "2");

    Result bad = capture(
        ncm_pair(a2id.c_str(), fixture("point-id.correspondence.json").c_str(),
                 &out),
        &out);
    CHECK(bad.status == 2);
    CHECK(bad.body["error"] == "MiddleMismatch");
}

TEST_CASE("gram matrix of whole motives")
{
    char* out = nullptr;
    Result point =
        capture(ncm_gram(fixture("point-id.correspondence.json").c_str(), &out), &out);
    CHECK(point.status == 0);
    CHECK(point.body["rows"] == 1);
    CHECK(point.body["matrix"] == json::array({json::array({"1"})}));
    CHECK(point.body["radical_dim"] == 0);

    Result a2 =
        capture(ncm_gram(fixture("a2-id.correspondence.json").c_str(), &out), &out);
    CHECK(a2.status == 0);
    CHECK(a2.body["rows"] == 4);
    CHECK(a2.body["radical_dim"] == 0);
}

TEST_CASE("radical and quotient of category documents")
{
    std::string qx2 = fixture("qx2.category.json");
    char* out = nullptr;
    Result rad = capture(ncm_radical(qx2.c_str(), &out), &out);
    CHECK(rad.status == 0);
    CHECK(rad.body["total"] == 1);

    Result grad =
        capture(ncm_radical(fixture("graded.category.json").c_str(), &out), &out);
    CHECK(grad.body["total"] == 0);

    Result quo = capture(ncm_quotient(qx2.c_str(), &out), &out);
    CHECK(quo.status == 0);
    CHECK(quo.body["hom_dims"] == json::array({json::array({1})}));
    // The embedded document must itself load and validate.
    ncmot::load_category(quo.body["category"].dump()).validate();
}

TEST_CASE("karoubi envelope over the C boundary")
{
    std::string qx2 = fixture("qx2.category.json");
    char* out = nullptr;
    Result plain = capture(ncm_karoubi(qx2.c_str(), nullptr, &out), &out);
    CHECK(plain.status == 0);
    CHECK(plain.body["objects"].size() == 1);

    Result bad = capture(ncm_karoubi(qx2.c_str(), "[[[\"0\",\"1\"]]]", &out), &out);
    CHECK(bad.status == 1);
    CHECK(bad.body["error"] == "NotIdempotent");

    Result shape = capture(ncm_karoubi(qx2.c_str(), "[[],[]]", &out), &out);
    CHECK(shape.status == 2);
}

TEST_CASE("orbit construction over the C boundary")
{
    std::string graded = fixture("graded.category.json");
    std::string spec = fixture("shift.orbitspec.json");
    char* out = nullptr;
    Result ok = capture(ncm_orbit(graded.c_str(), spec.c_str(), &out), &out);
    CHECK(ok.status == 0);
    CHECK(ok.body["bound"] == 4);
    ncmot::load_category(ok.body["category"].dump()).validate();

    ncmot::OrbitSpecDoc tight = ncmot::shift_orbit_doc(2);
    std::string tight_text = ncmot::save_orbitspec(tight, "tight");
    Result unb = capture(ncm_orbit(graded.c_str(), tight_text.c_str(), &out), &out);
    CHECK(unb.status == 1);
    CHECK(unb.body["error"] == "UnboundedSupport");
}

TEST_CASE("semisimplicity verdict drives the status code")
{
    std::string qx2 = fixture("qx2.category.json");
    char* out = nullptr;
    Result before = capture(ncm_semisimple(qx2.c_str(), 0, &out), &out);
    CHECK(before.status == 1);
    CHECK(before.body["semisimple"] == false);

    Result after = capture(ncm_semisimple(qx2.c_str(), 1, &out), &out);
    CHECK(after.status == 0);
    CHECK(after.body["semisimple"] == true);
}

TEST_CASE("verify suites run through the C API")
{
    char* out = nullptr;
    Result r =
        capture(ncm_verify("nilpotent", fixture_dir().c_str(), 1, &out), &out);
    CHECK(r.status == 0);
    CHECK(r.body["passed"] == true);
    CHECK(r.body["suites"].size() == 1);
    CHECK(r.body["suites"][0]["failures"] == 0);

    Result unknown =
        capture(ncm_verify("everything", fixture_dir().c_str(), 1, &out), &out);
    CHECK(unknown.status == 2);
}
