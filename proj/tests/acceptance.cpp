// Integration gate: one pass/fail line per top-level guarantee of the
// engine, with per-criterion runtime bounds. Exits nonzero when any
// criterion fails.

#include "ncmot/category_kernel.hpp"
#include "ncmot/complexes.hpp"
#include "ncmot/fixtures.hpp"
#include "ncmot/hochschild.hpp"
#include "ncmot/nc_motives.hpp"
#include "ncmot/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ncmot;

namespace {

struct Criterion {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

VerifyOptions options()
{
    VerifyOptions opt;
    if (const char* env = std::getenv("NCMOT_FIXTURES"))
        opt.fixture_dir = env;
    opt.seed = 1;
    return opt;
}

std::string suite_summary(const SuiteReport& rep)
{
    std::ostringstream os;
    os << rep.assertions << " assertions, " << rep.failures << " failures";
    if (!rep.passed() && !rep.details.empty())
        os << "; first: " << rep.details.back();
    return os.str();
}

// Criteria that are exactly a seeded property suite over the corpus.
Criterion from_suite(const std::string& name, const std::string& suite,
                     std::size_t min_assertions)
{
    Criterion c{name};
    SuiteReport rep = verify_suite(suite, options());
    c.passed = rep.passed() && rep.assertions >= min_assertions;
    c.detail = suite_summary(rep);
    if (rep.assertions < min_assertions)
        c.detail += " (below required sample count)";
    return c;
}

std::vector<PathAlgebraPtr> corpus_algebras()
{
    std::vector<PathAlgebraPtr> out;
    for (const NamedQuiver& q : corpus_quivers())
        out.push_back(path_algebra(q.quiver));
    return out;
}

// Identity traces: dim K0(pt) = #vertices, via the closed form, the
// standard-resolution complex, and the truncated bar complex.
Criterion identity_traces()
{
    Criterion c{"identity-trace-values"};
    c.passed = true;
    BarOracle bar(4);
    for (const PathAlgebraPtr& a : corpus_algebras()) {
        Rational expected(static_cast<long>(a->n_vertices()));
        Correspondence id = Correspondence::identity(a);
        Rational closed = categorical_trace(id);
        Rational standard(0), barred(0);
        for (const auto& t : id.terms) {
            standard += t.coeff * hh_class(a, t.rep);
            barred += t.coeff * bar.euler(a, t.rep);
        }
        if (closed != expected || standard != expected || barred != expected) {
            c.passed = false;
            c.detail = "closed " + rat_print(closed) +
                       ", standard " + rat_print(standard) + ", bar " +
                       rat_print(barred) + ", expected " + rat_print(expected);
            return c;
        }
    }
    c.detail = "all corpus algebras, three evaluation paths";
    return c;
}

// Numerical quotients are semisimple; the dual-numbers End drops 2 -> 1
// and the exported one-arrow motive is already semisimple of End dim 4.
Criterion quotient_semisimplicity()
{
    Criterion c{"quotient-semisimplicity"};
    PresentedCategory qx2 = dual_numbers_category();
    if (check_semisimple(qx2).semisimple)
        return c.detail = "dual numbers reported semisimple", c;
    PresentedCategory q = quotient_by_ideal(qx2, numerical_ideal(qx2)).category;
    if (q.dim(0, 0) != 1 || !check_semisimple(q).semisimple)
        return c.detail = "dual-numbers quotient is not F", c;

    for (PresentedCategory cat :
         {graded_lines_category(), nilpotent_block_category()}) {
        PresentedCategory qc =
            quotient_by_ideal(cat, numerical_ideal(cat)).category;
        if (!check_semisimple(qc).semisimple)
            return c.detail = "graded quotient not semisimple", c;
    }

    std::vector<PathAlgebraPtr> algebras = corpus_algebras();
    PresentedCategory exported =
        export_presented_category({NCMotive::whole(algebras[2])});
    if (exported.dim(0, 0) != 4)
        return c.detail = "one-arrow End dimension != 4", c;
    TensorIdeal ideal = numerical_ideal(exported);
    if (ideal.dim(0, 0) != 0 || !check_semisimple(exported).semisimple)
        return c.detail = "one-arrow motive pairing is degenerate", c;

    c.passed = true;
    c.detail = "dual numbers 2->1, graded corpora, one-arrow End dim 4";
    return c;
}

// K0-level composition calculus against the representative-level
// tensor-over-middle oracle: agreement, bilinearity, associativity, and
// invariance under adding a contractible cone summand.
Criterion k0_coherence()
{
    Criterion c{"k0-composition-coherence"};
    std::vector<PathAlgebraPtr> algebras = corpus_algebras();
    std::mt19937_64 rng(2026);
    auto pick = [&](std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
    };
    auto coeff = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
    auto rand_corr = [&](PathAlgebraPtr a, PathAlgebraPtr b) {
        RatVector cls(a->n_vertices() * b->n_vertices());
        for (Rational& x : cls)
            x = coeff();
        return Correspondence::from_class(a, b, cls);
    };
    auto with_cone = [&](const Correspondence& x) {
        std::vector<Correspondence::Term> terms = x.terms;
        terms.push_back({coeff(),
                         ProjComplex::identity_cone(
                             x.source, x.target,
                             pick(x.source->n_vertices()),
                             pick(x.target->n_vertices()))});
        return Correspondence::make(x.source, x.target, std::move(terms));
    };

    std::size_t trials = 0;
    for (int t = 0; t < 50; ++t) {
        PathAlgebraPtr a = algebras[pick(algebras.size())];
        PathAlgebraPtr b = algebras[pick(algebras.size())];
        PathAlgebraPtr m = algebras[pick(algebras.size())];
        PathAlgebraPtr d = algebras[pick(algebras.size())];
        Correspondence x = with_cone(rand_corr(a, m));
        Correspondence y = rand_corr(m, b);
        Correspondence z = rand_corr(b, d);

        Correspondence xy = compose(x, y);
        RatVector by_classes =
            compose_classes(ClassAlgebra::of(*a), ClassAlgebra::of(*m),
                            ClassAlgebra::of(*b), x.cached_class, y.cached_class);
        if (xy.cached_class != by_classes)
            return c.detail = "representative and class composition differ", c;

        if (compose(with_cone(x), y).cached_class != xy.cached_class)
            return c.detail = "cone summand changed a composite class", c;

        RatVector sum(y.cached_class);
        Correspondence y2 = rand_corr(m, b);
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += y2.cached_class[i];
        RatVector lin = compose(x, y).cached_class;
        RatVector lin2 = compose(x, y2).cached_class;
        for (std::size_t i = 0; i < lin.size(); ++i)
            lin[i] += lin2[i];
        if (compose(x, Correspondence::from_class(m, b, sum)).cached_class != lin)
            return c.detail = "composition is not bilinear", c;

        if (compose(compose(x, y), z).cached_class !=
            compose(x, compose(y, z)).cached_class)
            return c.detail = "composition is not associative", c;
        ++trials;
    }
    c.passed = trials == 50;
    c.detail = "50 random triples, 4 checks each";
    return c;
}

}  // namespace

int main()
{
    auto suite = [](const char* name, const char* s, std::size_t min) {
        return [name, s, min] { return from_suite(name, s, min); };
    };

    std::vector<std::pair<std::function<Criterion()>, double>> plan = {
        {suite("trace-oracle-agreement", "trace-agreement", 30), 60.0},
        {identity_traces, 30.0},
        {suite("ideal-closure", "ideal", 100), 30.0},
        {suite("largest-ideal-characterization", "largest", 20), 30.0},
        {quotient_semisimplicity, 30.0},
        {suite("nilpotent-trace-vanishing", "nilpotent", 50), 30.0},
        {suite("orbit-construction-order", "construction-order", 10), 30.0},
        {suite("conservativity", "conservativity", 50), 30.0},
        {k0_coherence, 30.0},
    };

    bool all = true;
    for (auto& [run, bound] : plan) {
        auto start = std::chrono::steady_clock::now();
        Criterion c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (c.seconds > bound) {
            c.passed = false;
            c.detail += " (exceeded " + std::to_string(bound) + "s bound)";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  ("
             << c.seconds << "s";
        if (!c.detail.empty())
            line << "; " << c.detail;
        line << ")";
        std::cout << line.str() << "\n";
        all = all && c.passed;
    }
    return all ? 0 : 1;
}
