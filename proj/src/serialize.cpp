#include "ncmot/serialize.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace ncmot {

namespace {

using json = nlohmann::ordered_json;

json parse_doc(const std::string& text)
{
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        throw Error("BadRequest", "fixture is not a JSON object");
    return j;
}

const json& field(const json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        throw Error("BadRequest", std::string("missing field '") + key + "'");
    return *it;
}

std::string str_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_string())
        throw Error("BadRequest", std::string("field '") + key + "' is not a string");
    return v.get<std::string>();
}

const json& array_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_array())
        throw Error("BadRequest", std::string("field '") + key + "' is not an array");
    return v;
}

const json& payload_of(const json& doc, const std::string& kind)
{
    if (str_field(doc, "kind") != kind)
        throw Error("BadRequest", "fixture kind is not '" + kind + "'");
    const json& p = field(doc, "payload");
    if (!p.is_object())
        throw Error("BadRequest", "payload is not an object");
    return p;
}

std::string dump_doc(const std::string& kind, const std::string& name,
                     json payload)
{
    json doc;
    doc["kind"] = kind;
    doc["name"] = name;
    doc["payload"] = std::move(payload);
    return doc.dump(2) + "\n";
}

Rational rat_of(const json& v)
{
    if (!v.is_string())
        throw Error("BadRequest", "rationals must be serialized as strings");
    return rat_parse(v.get<std::string>());
}

RatVector vector_of(const json& v)
{
    if (!v.is_array())
        throw Error("BadRequest", "expected an array of rationals");
    RatVector out;
    out.reserve(v.size());
    for (const json& x : v)
        out.push_back(rat_of(x));
    return out;
}

json vector_to_json(const RatVector& v)
{
    json out = json::array();
    for (const Rational& x : v)
        out.push_back(rat_print(x));
    return out;
}

json quiver_to_json(const Quiver& q)
{
    json out;
    out["vertices"] = q.vertices;
    json arrows = json::array();
    for (const Arrow& a : q.arrows) {
        json ja;
        ja["name"] = a.name;
        ja["source"] = q.vertices[a.source];
        ja["target"] = q.vertices[a.target];
        arrows.push_back(std::move(ja));
    }
    out["arrows"] = std::move(arrows);
    return out;
}

Quiver quiver_of(const json& p)
{
    Quiver q;
    for (const json& v : array_field(p, "vertices")) {
        if (!v.is_string())
            throw Error("BadRequest", "vertex labels must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    for (const json& a : array_field(p, "arrows")) {
        if (!a.is_object())
            throw Error("BadRequest", "arrows must be objects");
        Arrow arrow;
        arrow.name = str_field(a, "name");
        arrow.source = q.vertex_index(str_field(a, "source"));
        arrow.target = q.vertex_index(str_field(a, "target"));
        q.arrows.push_back(std::move(arrow));
    }
    return q;
}

std::size_t path_by_name(const PathAlgebra& a, const std::string& name)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.path_name(i) == name)
            return i;
    throw Error("UnknownPath", "no basis path named '" + name + "'");
}

json summands_to_json(const PathAlgebra& a, const PathAlgebra& b,
                      const ProjBimodule& m)
{
    json out = json::array();
    for (const auto& [v, u] : m.summands)
        out.push_back(json::array(
            {a.quiver().vertices[v], b.quiver().vertices[u]}));
    return out;
}

ProjBimodule summands_of(const PathAlgebra& a, const PathAlgebra& b, const json& j)
{
    if (!j.is_array())
        throw Error("BadRequest", "summands must be an array");
    ProjBimodule m;
    for (const json& s : j) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_string() ||
            !s[1].is_string())
            throw Error("BadRequest", "each summand must be a [v, u] label pair");
        m.summands.emplace_back(a.quiver().vertex_index(s[0].get<std::string>()),
                                b.quiver().vertex_index(s[1].get<std::string>()));
    }
    return m;
}

json complex_body_to_json(const ProjComplex& c)
{
    const PathAlgebra& a = *c.left_algebra;
    const PathAlgebra& b = *c.right_algebra;
    json out;
    out["min_degree"] = c.min_degree;
    json terms = json::array();
    for (const ProjBimodule& t : c.terms)
        terms.push_back(summands_to_json(a, b, t));
    out["terms"] = std::move(terms);
    json diffs = json::array();
    for (std::size_t i = 0; i < c.diffs.size(); ++i) {
        json layer = json::array();
        for (const auto& row : c.diffs[i]) {
            json jrow = json::array();
            for (const HomElem& h : row) {
                json cell = json::array();
                for (const HomElem::Term& t : h.terms) {
                    json jt;
                    jt["coeff"] = rat_print(t.coeff);
                    jt["a"] = a.path_name(t.a_path);
                    jt["b"] = b.path_name(t.b_path);
                    cell.push_back(std::move(jt));
                }
                jrow.push_back(std::move(cell));
            }
            layer.push_back(std::move(jrow));
        }
        diffs.push_back(std::move(layer));
    }
    out["diffs"] = std::move(diffs);
    return out;
}

ProjComplex complex_body_of(PathAlgebraPtr a, PathAlgebraPtr b, const json& p)
{
    ProjComplex c;
    c.left_algebra = a;
    c.right_algebra = b;
    const json& md = field(p, "min_degree");
    if (!md.is_number_integer())
        throw Error("BadRequest", "min_degree must be an integer");
    c.min_degree = md.get<int>();
    for (const json& t : array_field(p, "terms"))
        c.terms.push_back(summands_of(*a, *b, t));
    for (const json& layer : array_field(p, "diffs")) {
        if (!layer.is_array())
            throw Error("BadRequest", "differential layers must be arrays");
        std::vector<std::vector<HomElem>> rows;
        for (const json& jrow : layer) {
            if (!jrow.is_array())
                throw Error("BadRequest", "differential rows must be arrays");
            std::vector<HomElem> row;
            for (const json& cell : jrow) {
                if (!cell.is_array())
                    throw Error("BadRequest", "differential cells must be arrays");
                HomElem h;
                for (const json& jt : cell) {
                    if (!jt.is_object())
                        throw Error("BadRequest",
                                    "differential terms must be objects");
                    h.terms.push_back({rat_of(field(jt, "coeff")),
                                       path_by_name(*a, str_field(jt, "a")),
                                       path_by_name(*b, str_field(jt, "b"))});
                }
                row.push_back(std::move(h));
            }
            rows.push_back(std::move(row));
        }
        c.diffs.push_back(std::move(rows));
    }
    return c;
}

json size_matrix_to_json(const std::vector<std::vector<std::size_t>>& m)
{
    json out = json::array();
    for (const auto& row : m)
        out.push_back(row);
    return out;
}

}  // namespace

FixtureInfo fixture_info(const std::string& text)
{
    json doc = parse_doc(text);
    return FixtureInfo{str_field(doc, "kind"), str_field(doc, "name")};
}

Quiver load_quiver(const std::string& text)
{
    const json doc = parse_doc(text);
    Quiver q = quiver_of(payload_of(doc, "quiver"));
    q.check_acyclic();
    return q;
}

std::string save_quiver(const Quiver& q, const std::string& name)
{
    return dump_doc("quiver", name, quiver_to_json(q));
}

BimoduleFixture load_bimodule(const std::string& text)
{
    const json doc = parse_doc(text);
    const json& p = payload_of(doc, "bimodule");
    BimoduleFixture out;
    out.left = path_algebra(quiver_of(field(p, "left")));
    out.right = (field(p, "left") == field(p, "right"))
                    ? out.left
                    : path_algebra(quiver_of(field(p, "right")));
    out.module = summands_of(*out.left, *out.right, field(p, "summands"));
    return out;
}

std::string save_bimodule(const BimoduleFixture& b, const std::string& name)
{
    json p;
    p["left"] = quiver_to_json(b.left->quiver());
    p["right"] = quiver_to_json(b.right->quiver());
    p["summands"] = summands_to_json(*b.left, *b.right, b.module);
    return dump_doc("bimodule", name, std::move(p));
}

ProjComplex load_complex(const std::string& text)
{
    const json doc = parse_doc(text);
    const json& p = payload_of(doc, "complex");
    PathAlgebraPtr a = path_algebra(quiver_of(field(p, "left")));
    PathAlgebraPtr b = (field(p, "left") == field(p, "right"))
                           ? a
                           : path_algebra(quiver_of(field(p, "right")));
    return complex_body_of(a, b, p);
}

std::string save_complex(const ProjComplex& c, const std::string& name)
{
    json p;
    p["left"] = quiver_to_json(c.left_algebra->quiver());
    p["right"] = quiver_to_json(c.right_algebra->quiver());
    json body = complex_body_to_json(c);
    for (auto& [k, v] : body.items())
        p[k] = std::move(v);
    return dump_doc("complex", name, std::move(p));
}

Correspondence load_correspondence(const std::string& text)
{
    const json doc = parse_doc(text);
    const json& p = payload_of(doc, "correspondence");
    PathAlgebraPtr a = path_algebra(quiver_of(field(p, "source")));
    // Identical endpoint quivers share one algebra, so endomorphism
    // checks (trace, composition) recognize the round trip.
    PathAlgebraPtr b = (field(p, "source") == field(p, "target"))
                           ? a
                           : path_algebra(quiver_of(field(p, "target")));
    std::vector<Correspondence::Term> terms;
    for (const json& t : array_field(p, "terms")) {
        if (!t.is_object())
            throw Error("BadRequest", "correspondence terms must be objects");
        terms.push_back(
            {rat_of(field(t, "coeff")), complex_body_of(a, b, field(t, "rep"))});
    }
    return Correspondence::make(a, b, std::move(terms));
}

std::string save_correspondence(const Correspondence& c, const std::string& name)
{
    json p;
    p["source"] = quiver_to_json(c.source->quiver());
    p["target"] = quiver_to_json(c.target->quiver());
    json terms = json::array();
    for (const Correspondence::Term& t : c.terms) {
        json jt;
        jt["coeff"] = rat_print(t.coeff);
        jt["rep"] = complex_body_to_json(t.rep);
        terms.push_back(std::move(jt));
    }
    p["terms"] = std::move(terms);
    return dump_doc("correspondence", name, std::move(p));
}

PresentedCategory load_category(const std::string& text)
{
    const json doc = parse_doc(text);
    const json& p = payload_of(doc, "category");
    PresentedCategory c;
    for (const json& o : array_field(p, "objects")) {
        if (!o.is_string())
            throw Error("BadRequest", "object labels must be strings");
        c.objects.push_back(o.get<std::string>());
    }
    for (const json& row : array_field(p, "hom_dims")) {
        if (!row.is_array())
            throw Error("BadRequest", "hom_dims rows must be arrays");
        std::vector<std::size_t> r;
        for (const json& d : row) {
            if (!d.is_number_unsigned())
                throw Error("BadRequest", "hom dimensions must be nonnegative");
            r.push_back(d.get<std::size_t>());
        }
        c.hom_dims.push_back(std::move(r));
    }
    for (const json& la : array_field(p, "comp")) {
        std::vector<std::vector<std::vector<std::vector<RatVector>>>> ta;
        for (const json& lb : la) {
            std::vector<std::vector<std::vector<RatVector>>> tb;
            for (const json& lc : lb) {
                std::vector<std::vector<RatVector>> tc;
                for (const json& li : lc) {
                    std::vector<RatVector> ti;
                    for (const json& lj : li)
                        ti.push_back(vector_of(lj));
                    tc.push_back(std::move(ti));
                }
                tb.push_back(std::move(tc));
            }
            ta.push_back(std::move(tb));
        }
        c.comp.push_back(std::move(ta));
    }
    for (const json& id : array_field(p, "ids"))
        c.ids.push_back(vector_of(id));
    if (p.contains("trace")) {
        c.has_trace = true;
        for (const json& t : array_field(p, "trace"))
            c.trace.push_back(vector_of(t));
    }
    if (p.contains("tensor")) {
        const json& jt = field(p, "tensor");
        if (!jt.is_object())
            throw Error("BadRequest", "tensor data must be an object");
        c.has_tensor = true;
        const std::string unit_label = str_field(jt, "unit");
        for (const json& row : array_field(jt, "prod")) {
            if (!row.is_array())
                throw Error("BadRequest", "prod rows must be arrays");
            std::vector<std::size_t> r;
            for (const json& e : row) {
                if (e.is_null())
                    r.push_back(PresentedCategory::no_object);
                else if (e.is_string())
                    r.push_back(c.object_index(e.get<std::string>()));
                else
                    throw Error("BadRequest",
                                "prod entries must be labels or null");
            }
            c.prod.push_back(std::move(r));
        }
        c.unit = c.object_index(unit_label);
        for (const json& la : array_field(jt, "mor_prod")) {
            std::vector<std::vector<std::vector<std::vector<std::vector<RatVector>>>>> ta;
            for (const json& lb : la) {
                std::vector<std::vector<std::vector<std::vector<RatVector>>>> tb;
                for (const json& lx : lb) {
                    std::vector<std::vector<std::vector<RatVector>>> tx;
                    for (const json& ly : lx) {
                        std::vector<std::vector<RatVector>> ty;
                        for (const json& li : ly) {
                            std::vector<RatVector> ti;
                            for (const json& lj : li)
                                ti.push_back(vector_of(lj));
                            ty.push_back(std::move(ti));
                        }
                        tx.push_back(std::move(ty));
                    }
                    tb.push_back(std::move(tx));
                }
                ta.push_back(std::move(tb));
            }
            c.mor_prod.push_back(std::move(ta));
        }
    }
    return c;
}

std::string save_category(const PresentedCategory& c, const std::string& name)
{
    json p;
    p["objects"] = c.objects;
    p["hom_dims"] = size_matrix_to_json(c.hom_dims);
    json comp = json::array();
    for (const auto& la : c.comp) {
        json ja = json::array();
        for (const auto& lb : la) {
            json jb = json::array();
            for (const auto& lc : lb) {
                json jc = json::array();
                for (const auto& li : lc) {
                    json ji = json::array();
                    for (const RatVector& v : li)
                        ji.push_back(vector_to_json(v));
                    jc.push_back(std::move(ji));
                }
                jb.push_back(std::move(jc));
            }
            ja.push_back(std::move(jb));
        }
        comp.push_back(std::move(ja));
    }
    p["comp"] = std::move(comp);
    json ids = json::array();
    for (const RatVector& v : c.ids)
        ids.push_back(vector_to_json(v));
    p["ids"] = std::move(ids);
    if (c.has_trace) {
        json tr = json::array();
        for (const RatVector& v : c.trace)
            tr.push_back(vector_to_json(v));
        p["trace"] = std::move(tr);
    }
    if (c.has_tensor) {
        json jt;
        jt["unit"] = c.objects[c.unit];
        json prod = json::array();
        for (const auto& row : c.prod) {
            json jr = json::array();
            for (std::size_t e : row) {
                if (e == PresentedCategory::no_object)
                    jr.push_back(nullptr);
                else
                    jr.push_back(c.objects[e]);
            }
            prod.push_back(std::move(jr));
        }
        jt["prod"] = std::move(prod);
        json mp = json::array();
        for (const auto& la : c.mor_prod) {
            json ja = json::array();
            for (const auto& lb : la) {
                json jb = json::array();
                for (const auto& lx : lb) {
                    json jx = json::array();
                    for (const auto& ly : lx) {
                        json jy = json::array();
                        for (const auto& li : ly) {
                            json ji = json::array();
                            for (const RatVector& v : li)
                                ji.push_back(vector_to_json(v));
                            jy.push_back(std::move(ji));
                        }
                        jx.push_back(std::move(jy));
                    }
                    jb.push_back(std::move(jx));
                }
                ja.push_back(std::move(jb));
            }
            mp.push_back(std::move(ja));
        }
        jt["mor_prod"] = std::move(mp);
        p["tensor"] = std::move(jt);
    }
    return dump_doc("category", name, std::move(p));
}

OrbitSpecDoc load_orbitspec(const std::string& text)
{
    const json doc = parse_doc(text);
    const json& p = payload_of(doc, "orbitspec");
    OrbitSpecDoc out;
    out.object = str_field(p, "object");
    out.inverse = str_field(p, "inverse");
    const json& b = field(p, "bound");
    if (!b.is_number_integer())
        throw Error("BadRequest", "bound must be an integer");
    out.bound = b.get<long>();
    return out;
}

std::string save_orbitspec(const OrbitSpecDoc& s, const std::string& name)
{
    json p;
    p["object"] = s.object;
    p["inverse"] = s.inverse;
    p["bound"] = s.bound;
    return dump_doc("orbitspec", name, std::move(p));
}

OrbitSpec resolve_orbit_spec(const OrbitSpecDoc& doc, const PresentedCategory& c)
{
    return OrbitSpec{c.object_index(doc.object), c.object_index(doc.inverse),
                     doc.bound};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("BadRequest", "cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("BadRequest", "cannot write '" + path + "'");
    out << content;
}

}  // namespace ncmot
