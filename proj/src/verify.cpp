#include "ncmot/verify.hpp"

#include "ncmot/category_kernel.hpp"
#include "ncmot/fixtures.hpp"
#include "ncmot/hochschild.hpp"
#include "ncmot/nc_motives.hpp"
#include "ncmot/serialize.hpp"

#include <random>

namespace ncmot {

namespace {

using Rng = std::mt19937_64;

long rand_int(Rng& rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational rand_coeff(Rng& rng) { return Rational(rand_int(rng, -3, 3)); }

RatVector rand_vector(Rng& rng, std::size_t len)
{
    RatVector v(len);
    for (Rational& x : v)
        x = rand_coeff(rng);
    return v;
}

RatVector unit_vec(std::size_t dim, std::size_t i)
{
    RatVector v(dim, 0);
    v[i] = 1;
    return v;
}

struct Corpus {
    std::vector<std::string> algebra_names;
    std::vector<PathAlgebraPtr> algebras;
    PresentedCategory qx2;
    PresentedCategory graded;
    PresentedCategory nilpotent;
    OrbitSpecDoc shift;
};

Corpus load_corpus(const std::string& dir)
{
    Corpus c;
    for (const char* name : {"point", "two-points", "a2", "a3", "fork"}) {
        c.algebra_names.push_back(name);
        c.algebras.push_back(path_algebra(
            load_quiver(read_file(dir + "/" + name + ".quiver.json"))));
    }
    c.qx2 = load_category(read_file(dir + "/qx2.category.json"));
    c.graded = load_category(read_file(dir + "/graded.category.json"));
    c.nilpotent = load_category(read_file(dir + "/nilpotent.category.json"));
    c.shift = load_orbitspec(read_file(dir + "/shift.orbitspec.json"));
    c.qx2.validate();
    c.graded.validate();
    c.nilpotent.validate();
    return c;
}

struct NamedCategory {
    std::string name;
    PresentedCategory category;
};

// All presented categories the suites range over: the synthetic ones
// plus the correspondence-category exports of every corpus algebra.
std::vector<NamedCategory> suite_categories(const Corpus& corpus)
{
    std::vector<NamedCategory> out;
    out.push_back({"qx2", corpus.qx2});
    out.push_back({"graded", corpus.graded});
    out.push_back({"nilpotent", corpus.nilpotent});
    for (std::size_t i = 0; i < corpus.algebras.size(); ++i)
        out.push_back({"export-" + corpus.algebra_names[i],
                       export_presented_category(
                           {NCMotive::whole(corpus.algebras[i])})});
    return out;
}

// Categories with End(unit) = F, for the largest-ideal suite: the
// graded pair and exports that include the one-vertex motive.
std::vector<NamedCategory> unital_categories(const Corpus& corpus)
{
    std::vector<NamedCategory> out;
    out.push_back({"graded", corpus.graded});
    out.push_back({"nilpotent", corpus.nilpotent});
    for (std::size_t i = 0; i < corpus.algebras.size(); ++i)
        out.push_back({"export-point+" + corpus.algebra_names[i],
                       export_presented_category(
                           {NCMotive::whole(corpus.algebras[0]),
                            NCMotive::whole(corpus.algebras[i])})});
    return out;
}

void note(SuiteReport& rep, std::string msg) { rep.details.push_back(std::move(msg)); }

void check(SuiteReport& rep, bool ok, const std::string& counterexample)
{
    ++rep.assertions;
    if (!ok) {
        ++rep.failures;
        if (rep.failures == 1)
            note(rep, "counterexample: " + counterexample);
    }
}

SuiteReport suite_trace_agreement(const Corpus& corpus, const VerifyOptions& opt)
{
    SuiteReport rep;
    rep.suite = "trace-agreement";
    Rng rng(opt.seed);
    BarOracle oracle(opt.cutoff);
    for (std::size_t ai = 0; ai < corpus.algebras.size(); ++ai) {
        PathAlgebraPtr a = corpus.algebras[ai];
        const std::size_t n = a->n_vertices();
        for (int trial = 0; trial < 30; ++trial) {
            Correspondence z =
                Correspondence::from_class(a, a, rand_vector(rng, n * n));
            if (trial % 3 == 0) {
                // Perturb by a contractible term: the class is unchanged.
                std::vector<Correspondence::Term> terms = z.terms;
                terms.push_back(
                    {rand_coeff(rng),
                     ProjComplex::identity_cone(
                         a, a, static_cast<std::size_t>(rand_int(rng, 0, n - 1)),
                         static_cast<std::size_t>(rand_int(rng, 0, n - 1)))});
                z = Correspondence::make(a, a, std::move(terms));
            }
            Rational tr = categorical_trace(z);
            Rational via_standard = 0, via_bar = 0;
            for (const Correspondence::Term& t : z.terms) {
                via_standard += t.coeff * hh_class(a, t.rep);
                via_bar += t.coeff * oracle.euler(a, t.rep);
            }
            check(rep, tr == via_standard,
                  corpus.algebra_names[ai] + ": trace != standard complex euler");
            check(rep, tr == via_bar,
                  corpus.algebra_names[ai] + ": trace != bar oracle euler");
        }
        note(rep, corpus.algebra_names[ai] + ": 30 correspondences, both routes");
    }
    return rep;
}

SuiteReport suite_ideal(const Corpus& corpus, const VerifyOptions& opt)
{
    SuiteReport rep;
    rep.suite = "ideal";
    Rng rng(opt.seed);
    for (const NamedCategory& nc : suite_categories(corpus)) {
        const PresentedCategory& c = nc.category;
        TensorIdeal ideal = numerical_ideal(c);
        const std::size_t n = c.n_objects();
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t a = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            std::size_t b = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            RatVector f(c.dim(a, b), 0);
            for (const RatVector& v : ideal.basis[a][b])
                for (std::size_t r = 0; r < f.size(); ++r)
                    f[r] += rand_coeff(rng) * v[r];
            check(rep, ideal.contains(a, b, f), nc.name + ": combo left ideal");

            std::size_t z = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            std::size_t z2 = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            RatVector g = rand_vector(rng, c.dim(z, a));
            RatVector h = rand_vector(rng, c.dim(b, z2));
            RatVector moved =
                c.compose(z, b, z2, c.compose(z, a, b, g, f), h);
            check(rep, ideal.contains(z, z2, moved),
                  nc.name + ": h o f o g left the ideal");

            if (c.has_tensor) {
                std::size_t w = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
                std::size_t pa = c.prod[a][w], pb = c.prod[b][w];
                if (pa != PresentedCategory::no_object &&
                    pb != PresentedCategory::no_object) {
                    RatVector t = c.mor_tensor(a, b, w, w, f, c.ids[w]);
                    check(rep, ideal.contains(pa, pb, t),
                          nc.name + ": f (x) id left the ideal");
                }
            }
        }
        std::size_t total = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                total += ideal.dim(a, b);
        note(rep, nc.name + ": ideal dimension " + std::to_string(total) +
                      ", 100 samples");
    }
    return rep;
}

SuiteReport suite_largest(const Corpus& corpus, const VerifyOptions& opt)
{
    SuiteReport rep;
    rep.suite = "largest";
    Rng rng(opt.seed);
    for (const NamedCategory& nc : unital_categories(corpus)) {
        const PresentedCategory& c = nc.category;
        TensorIdeal ideal = numerical_ideal(c);
        check(rep, is_largest_ideal(c, ideal),
              nc.name + ": numerical ideal is not the largest");
        const std::size_t n = c.n_objects();
        int found = 0, tries = 0;
        while (found < 20 && tries < 400) {
            ++tries;
            std::size_t a = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            std::size_t b = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            if (c.dim(a, b) == 0)
                continue;
            RatVector f = rand_vector(rng, c.dim(a, b));
            if (ideal.contains(a, b, f))
                continue;
            ++found;
            bool witness = false;
            for (std::size_t j = 0; j < c.dim(b, a) && !witness; ++j)
                if (c.tr(a, c.compose(a, b, a, f, unit_vec(c.dim(b, a), j))) != 0)
                    witness = true;
            check(rep, witness, nc.name + ": no trace witness for f outside ideal");
        }
        check(rep, found == 20, nc.name + ": could not sample 20 f outside ideal");
        note(rep, nc.name + ": largest-ideal verified, 20 witnesses");
    }
    return rep;
}

SuiteReport suite_construction_order(const Corpus& corpus, const VerifyOptions& opt)
{
    SuiteReport rep;
    rep.suite = "construction-order";
    (void)opt;
    for (const NamedCategory& nc :
         {NamedCategory{"graded", corpus.graded},
          NamedCategory{"nilpotent", corpus.nilpotent}}) {
        OrbitSpec spec = resolve_orbit_spec(corpus.shift, nc.category);
        ConstructionOrderReport r = verify_construction_order(
            nc.category, spec,
            std::vector<std::vector<RatVector>>(nc.category.n_objects()));
        check(rep, r.hypothesis_ok, nc.name + ": hypothesis");
        check(rep, r.ker_alpha_in_ideal, nc.name + ": ker(alpha) in ideal");
        check(rep, r.beta_bijective, nc.name + ": beta not bijective");
        check(rep, r.gamma_bijective, nc.name + ": gamma not bijective");
        check(rep, r.dims_first == r.dims_second,
              nc.name + ": hom dimension tables differ");
        note(rep, nc.name + ": both construction orders agree on " +
                      std::to_string(r.dims_first.size()) + " objects");
    }
    return rep;
}

SuiteReport suite_conservativity(const Corpus& corpus, const VerifyOptions& opt)
{
    SuiteReport rep;
    rep.suite = "conservativity";
    Rng rng(opt.seed);
    for (const NamedCategory& nc :
         {NamedCategory{"graded", corpus.graded},
          NamedCategory{"nilpotent", corpus.nilpotent}}) {
        const PresentedCategory& c = nc.category;
        OrbitSpec spec = resolve_orbit_spec(corpus.shift, c);
        const std::size_t n = c.n_objects();
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t a = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            std::size_t b = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
            RatVector f = rand_vector(rng, c.dim(a, b));
            ConservativityReport r = conservativity_check(c, spec, a, b, f);
            check(rep, r.consistent,
                  nc.name + ": invertibility verdicts disagree");
        }
        note(rep, nc.name + ": 50 morphisms, verdicts agree");
    }
    return rep;
}

SuiteReport suite_nilpotent(const Corpus& corpus, const VerifyOptions& opt)
{
    SuiteReport rep;
    rep.suite = "nilpotent";
    Rng rng(opt.seed);

    // qx2 and the nilpotent block: multiples of x are square-zero.
    for (const NamedCategory& nc :
         {NamedCategory{"qx2", corpus.qx2},
          NamedCategory{"nilpotent-M", corpus.nilpotent}}) {
        const PresentedCategory& c = nc.category;
        std::size_t obj = (nc.name == "qx2") ? 0 : c.object_index("M");
        for (int trial = 0; trial < 10; ++trial) {
            RatVector f(c.dim(obj, obj), 0);
            f[1] = rand_coeff(rng);
            check(rep, nilpotent_trace_check(c, obj, f),
                  nc.name + ": nilpotent with nonzero trace power");
        }
        note(rep, nc.name + ": 10 nilpotents checked");
    }

    // Correspondence-category exports: classes supported strictly below
    // the diagonal in the topological vertex order compose upward only,
    // hence are nilpotent.
    for (std::size_t ai = 0; ai < corpus.algebras.size(); ++ai) {
        PathAlgebraPtr a = corpus.algebras[ai];
        PresentedCategory c =
            export_presented_category({NCMotive::whole(a)});
        const std::size_t n = a->n_vertices();
        for (int trial = 0; trial < 6; ++trial) {
            RatVector f(n * n, 0);
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t u = 0; u < v; ++u)
                    f[v * n + u] = rand_coeff(rng);
            check(rep, nilpotent_trace_check(c, 0, f),
                  corpus.algebra_names[ai] + ": nilpotent class with trace");
        }
        note(rep, corpus.algebra_names[ai] + ": 6 nilpotent classes checked");
    }
    return rep;
}

}  // namespace

SuiteReport verify_suite(const std::string& suite, const VerifyOptions& opt)
{
    Corpus corpus = load_corpus(opt.fixture_dir);
    if (suite == "trace-agreement")
        return suite_trace_agreement(corpus, opt);
    if (suite == "ideal")
        return suite_ideal(corpus, opt);
    if (suite == "largest")
        return suite_largest(corpus, opt);
    if (suite == "construction-order")
        return suite_construction_order(corpus, opt);
    if (suite == "conservativity")
        return suite_conservativity(corpus, opt);
    if (suite == "nilpotent")
        return suite_nilpotent(corpus, opt);
    throw Error("BadRequest", "unknown suite '" + suite + "'");
}

std::vector<SuiteReport> verify_all(const VerifyOptions& opt)
{
    std::vector<SuiteReport> out;
    for (const char* s : {"trace-agreement", "ideal", "largest", "construction-order",
                          "conservativity", "nilpotent"})
        out.push_back(verify_suite(s, opt));
    return out;
}

}  // namespace ncmot
