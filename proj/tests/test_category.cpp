#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncmot/category_kernel.hpp"

#include <cstddef>
#include <string>
#include <vector>

using namespace ncmot;

namespace {

constexpr std::size_t none = PresentedCategory::no_object;

RatVector uv(std::size_t dim, std::size_t i)
{
    RatVector v(dim, 0);
    v[i] = 1;
    return v;
}

void alloc_comp(PresentedCategory& c)
{
    const std::size_t n = c.n_objects();
    c.comp.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
        c.comp[a].assign(n, {});
        for (std::size_t b = 0; b < n; ++b) {
            c.comp[a][b].assign(n, {});
            for (std::size_t cc = 0; cc < n; ++cc)
                c.comp[a][b][cc].assign(
                    c.hom_dims[a][b],
                    std::vector<RatVector>(c.hom_dims[b][cc],
                                           RatVector(c.hom_dims[a][cc], 0)));
        }
    }
    c.ids.assign(n, {});
}

// One object with End = F[x]/x^2 on basis {1, x}; strict tensor with
// X (x) X = X through the algebra multiplication.
PresentedCategory dual_numbers(const RatVector& tr = {Rational(1), Rational(0)},
                               bool with_tensor = true)
{
    PresentedCategory c;
    c.objects = {"X"};
    c.hom_dims = {{2}};
    alloc_comp(c);
    auto mult = [](std::size_t i, std::size_t j) {
        RatVector v(2, 0);
        if (i + j < 2)
            v[i + j] = 1;
        return v;
    };
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            c.comp[0][0][0][i][j] = mult(i, j);
    c.ids[0] = uv(2, 0);
    c.has_trace = true;
    c.trace = {tr};
    if (with_tensor) {
        c.has_tensor = true;
        c.unit = 0;
        c.prod = {{0}};
        c.mor_prod.assign(1, {{{{std::vector<std::vector<RatVector>>(
            2, std::vector<RatVector>(2))}}}});
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                c.mor_prod[0][0][0][0][i][j] = mult(i, j);
    }
    return c;
}

// Invertible lines L_{-r}, ..., L_r under a strict graded tensor
// product (out-of-range products vanish), optionally together with one
// extra object M whose End algebra is either F[x]/x^2 (m_type 1) or
// F x F (m_type 2). M absorbs only the unit line; its product with any
// other line vanishes.
struct GradedCat {
    PresentedCategory c;
    int radius = 0;
    std::size_t m = none;  // index of M when present

    std::size_t line(int degree) const
    {
        return static_cast<std::size_t>(degree + radius);
    }
};

GradedCat graded_cat(int radius, int m_type)
{
    GradedCat g;
    g.radius = radius;
    PresentedCategory& c = g.c;
    const std::size_t nl = static_cast<std::size_t>(2 * radius + 1);
    for (int d = -radius; d <= radius; ++d)
        c.objects.push_back("L" + std::to_string(d));
    const bool with_m = m_type != 0;
    if (with_m) {
        g.m = nl;
        c.objects.push_back("M");
    }
    const std::size_t n = c.n_objects();
    const std::size_t dm = 2;

    c.hom_dims.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < nl; ++a)
        c.hom_dims[a][a] = 1;
    if (with_m)
        c.hom_dims[g.m][g.m] = dm;
    alloc_comp(c);

    // End(M) multiplication: dual numbers or two orthogonal idempotents.
    auto mmult = [&](std::size_t i, std::size_t j) {
        RatVector v(dm, 0);
        if (m_type == 1) {
            if (i + j < dm)
                v[i + j] = 1;
        } else {
            if (i == j)
                v[i] = 1;
        }
        return v;
    };

    for (std::size_t a = 0; a < nl; ++a) {
        c.comp[a][a][a][0][0] = uv(1, 0);
        c.ids[a] = uv(1, 0);
    }
    if (with_m) {
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dm; ++j)
                c.comp[g.m][g.m][g.m][i][j] = mmult(i, j);
        c.ids[g.m] = (m_type == 1) ? uv(dm, 0) : RatVector{Rational(1), Rational(1)};
    }

    c.has_trace = true;
    c.trace.assign(n, {});
    for (std::size_t a = 0; a < nl; ++a)
        c.trace[a] = uv(1, 0);
    if (with_m)
        c.trace[g.m] = (m_type == 1) ? uv(dm, 0)
                                     : RatVector{Rational(1), Rational(1)};

    c.has_tensor = true;
    c.unit = g.line(0);
    c.prod.assign(n, std::vector<std::size_t>(n, none));
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b)
            if (a + b >= -radius && a + b <= radius)
                c.prod[g.line(a)][g.line(b)] = g.line(a + b);
    if (with_m) {
        c.prod[g.m][g.m] = g.m;
        c.prod[c.unit][g.m] = g.m;
        c.prod[g.m][c.unit] = g.m;
    }

    c.mor_prod.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
        c.mor_prod[a].assign(n, {});
        for (std::size_t b = 0; b < n; ++b) {
            c.mor_prod[a][b].assign(n, {});
            for (std::size_t x = 0; x < n; ++x) {
                c.mor_prod[a][b][x].assign(n, {});
                for (std::size_t y = 0; y < n; ++y) {
                    auto& table = c.mor_prod[a][b][x][y];
                    table.assign(c.hom_dims[a][b],
                                 std::vector<RatVector>(c.hom_dims[x][y]));
                    std::size_t pa = c.prod[a][x], pb = c.prod[b][y];
                    if (pa == none || pb == none)
                        continue;
                    // Nonzero hom spaces sit only on the diagonal, so a
                    // filled cell pairs an End(a) basis element with an
                    // End(x) one; multiply in End(a (x) x).
                    for (std::size_t i = 0; i < c.hom_dims[a][b]; ++i)
                        for (std::size_t j = 0; j < c.hom_dims[x][y]; ++j) {
                            if (a == g.m && x == g.m)
                                table[i][j] = mmult(i, j);
                            else if (a == g.m)
                                table[i][j] = uv(dm, i);
                            else if (x == g.m)
                                table[i][j] = uv(dm, j);
                            else
                                table[i][j] = uv(1, 0);
                        }
                }
            }
        }
    }
    return g;
}

// Two isomorphic objects, every hom space one-dimensional with scalar
// composition; the trace normalizations disagree.
PresentedCategory twisted_pair()
{
    PresentedCategory c;
    c.objects = {"P", "Q"};
    c.hom_dims = {{1, 1}, {1, 1}};
    alloc_comp(c);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t cc = 0; cc < 2; ++cc)
                c.comp[a][b][cc][0][0] = uv(1, 0);
    c.ids = {uv(1, 0), uv(1, 0)};
    c.has_trace = true;
    c.trace = {RatVector{Rational(1)}, RatVector{Rational(2)}};
    return c;
}

RatVector column_of(const RatMatrix& m, std::size_t c)
{
    RatVector v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        v[r] = m.at(r, c);
    return v;
}

}  // namespace

TEST_CASE("scalar category is valid, semisimple, and numerically trivial-free")
{
    PresentedCategory c = PresentedCategory::scalar();
    CHECK_NOTHROW(c.validate());
    CHECK(c.tr(0, c.ids[0]) == 1);
    TensorIdeal ideal = numerical_ideal(c);
    CHECK(ideal.dim(0, 0) == 0);
    CHECK(check_semisimple(c).semisimple);
    QuotientResult q = quotient_by_ideal(c, ideal);
    CHECK(q.category.hom_dims == c.hom_dims);
    CHECK(is_largest_ideal(c, ideal));
}

TEST_CASE("dual numbers: numerical ideal is the nilpotent line")
{
    PresentedCategory c = dual_numbers();
    CHECK_NOTHROW(c.validate());

    TensorIdeal ideal = numerical_ideal(c);
    REQUIRE(ideal.dim(0, 0) == 1);
    CHECK(ideal.contains(0, 0, RatVector{Rational(0), Rational(5)}));
    CHECK(!ideal.contains(0, 0, RatVector{Rational(1), Rational(0)}));
    CHECK_NOTHROW(validate_ideal(c, ideal));

    // Span of the unit is not an ideal: 1 o x = x leaves it.
    TensorIdeal bad;
    bad.basis = {{{uv(2, 0)}}};
    CHECK_THROWS_WITH_AS(validate_ideal(c, bad), doctest::Contains("NotAnIdeal"),
                         Error);
}

TEST_CASE("dual numbers: quotient kills x and the projection is a functor")
{
    PresentedCategory c = dual_numbers();
    TensorIdeal ideal = numerical_ideal(c);
    QuotientResult q = quotient_by_ideal(c, ideal);
    REQUIRE(q.category.hom_dims[0][0] == 1);
    CHECK_NOTHROW(q.category.validate());

    const RatMatrix& p = q.projection[0][0];
    REQUIRE(p.rows() == 1);
    REQUIRE(p.cols() == 2);
    CHECK(p.apply(uv(2, 0)) == RatVector{Rational(1)});
    CHECK(p.apply(uv(2, 1)) == RatVector{Rational(0)});

    // Projection respects composition and identities.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            RatVector f = uv(2, i), g = uv(2, j);
            CHECK(p.apply(c.compose(0, 0, 0, f, g)) ==
                  q.category.compose(0, 0, 0, p.apply(f), p.apply(g)));
        }
    CHECK(p.apply(c.ids[0]) == q.category.ids[0]);

    // Trace descends and the quotient is semisimple.
    CHECK(q.category.tr(0, q.category.ids[0]) == 1);
    CHECK(check_semisimple(q.category).semisimple);

    SemisimpleReport before = check_semisimple(c);
    CHECK(!before.semisimple);
    CHECK(before.end_radical_dims[0] == 1);
    CHECK(before.pairing_defects[0][0] == 1);
}

TEST_CASE("quotient refuses an ideal the trace does not kill")
{
    PresentedCategory c = dual_numbers(RatVector{Rational(1), Rational(1)});
    CHECK_NOTHROW(c.validate());
    TensorIdeal nil;
    nil.basis = {{{uv(2, 1)}}};
    CHECK_NOTHROW(validate_ideal(c, nil));
    CHECK_THROWS_WITH_AS(quotient_by_ideal(c, nil),
                         doctest::Contains("trace does not descend"), Error);
}

TEST_CASE("trace cyclicity is enforced")
{
    PresentedCategory c = twisted_pair();
    CHECK_THROWS_WITH_AS(c.validate(),
                         doctest::Contains("TraceCyclicityViolation"), Error);
    c.trace[1] = RatVector{Rational(1)};
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("largest-ideal characterization")
{
    // Unit line plus a dual-numbers object: the numerical ideal is the
    // nilpotent line of End(M) and it is the largest proper one.
    GradedCat g = graded_cat(0, 1);
    CHECK_NOTHROW(g.c.validate());
    TensorIdeal ideal = numerical_ideal(g.c);
    CHECK(ideal.dim(g.m, g.m) == 1);
    CHECK(is_largest_ideal(g.c, ideal));

    TensorIdeal zero;
    zero.basis.assign(2, std::vector<std::vector<RatVector>>(2));
    CHECK(!is_largest_ideal(g.c, zero));

    // End of the unit must be the base field.
    PresentedCategory d = dual_numbers();
    TensorIdeal nil = numerical_ideal(d);
    CHECK_THROWS_WITH_AS(is_largest_ideal(d, nil),
                         doctest::Contains("UnitEndNotF"), Error);
}

TEST_CASE("karoubi envelope splits orthogonal idempotents")
{
    GradedCat g = graded_cat(0, 2);  // End(M) = F x F on idempotents u, v
    RatVector u{Rational(1), Rational(0)}, v{Rational(0), Rational(1)};
    KaroubiResult k = karoubi_envelope(g.c, {{}, {u, v}});
    REQUIRE(k.category.n_objects() == 4);
    CHECK(k.identity_object[0] == 0);
    CHECK(k.identity_object[1] == 1);
    CHECK(k.base_object[2] == 1);
    CHECK(k.base_object[3] == 1);

    // (M,u) and (M,v) are orthogonal lines inside M.
    CHECK(k.category.hom_dims[2][2] == 1);
    CHECK(k.category.hom_dims[3][3] == 1);
    CHECK(k.category.hom_dims[2][3] == 0);
    CHECK(k.category.hom_dims[3][2] == 0);
    CHECK(k.category.hom_dims[1][2] == 1);
    CHECK(k.category.hom_dims[2][1] == 1);
    CHECK(k.category.tr(2, k.category.ids[2]) == 1);

    // Embedded composition agrees with the ambient one.
    RatVector in = column_of(k.embed[1][2], 0);   // M -> (M,u)
    RatVector out = column_of(k.embed[2][1], 0);  // (M,u) -> M
    RatVector round = g.c.compose(1, 1, 1, in, out);
    RatVector coords;
    REQUIRE(solve_in_span(k.embed[1][1], round, &coords));
    CHECK(coords == k.category.compose(
                        1, 2, 1, uv(1, 0), uv(1, 0)));

    CHECK(check_semisimple(k.category).semisimple);

    CHECK_THROWS_WITH_AS(
        karoubi_envelope(g.c, {{}, {RatVector{Rational(2), Rational(0)}}}),
        doctest::Contains("NotIdempotent"), Error);
}

TEST_CASE("orbit category of invertible lines")
{
    GradedCat g = graded_cat(2, 0);
    CHECK_NOTHROW(g.c.validate());
    OrbitSpec spec{g.line(1), g.line(-1), 4};
    OrbitResult orb = orbit_category(g.c, spec);
    CHECK_NOTHROW(orb.category.validate());

    // Every pair of lines becomes isomorphic: all hom spaces are F.
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            CHECK(orb.category.hom_dims[g.line(a)][g.line(b)] == 1);

    // The degree-0 and degree-1 lines span a rank-4 endomorphism block.
    std::size_t total = 0;
    for (int a : {0, 1})
        for (int b : {0, 1})
            total += orb.category.hom_dims[g.line(a)][g.line(b)];
    CHECK(total == 4);

    // A degree-shifting morphism composes with its reverse to the identity.
    std::size_t x = g.line(2), y = g.line(0);
    RatVector fwd = uv(1, 0), bwd = uv(1, 0);
    RatVector round = orb.category.compose(x, y, x, fwd, bwd);
    CHECK(round == orb.category.ids[x]);
    CHECK(orb.category.tr(x, round) == 1);

    // Declared bound too small: support check trips.
    OrbitSpec tight{g.line(1), g.line(-1), 2};
    CHECK_THROWS_WITH_AS(orbit_category(g.c, tight),
                         doctest::Contains("UnboundedSupport"), Error);

    // Non-invertible choice of orbit object.
    OrbitSpec bad{g.line(1), g.line(1), 4};
    CHECK_THROWS_WITH_AS(orbit_category(g.c, bad),
                         doctest::Contains("not strictly invertible"), Error);
}

TEST_CASE("orbit category keeps a nilpotent block untouched")
{
    GradedCat g = graded_cat(2, 1);
    CHECK_NOTHROW(g.c.validate());
    OrbitSpec spec{g.line(1), g.line(-1), 4};
    OrbitResult orb = orbit_category(g.c, spec);
    CHECK(orb.category.hom_dims[g.m][g.m] == 2);
    for (int a = -2; a <= 2; ++a) {
        CHECK(orb.category.hom_dims[g.line(a)][g.m] == 0);
        CHECK(orb.category.hom_dims[g.m][g.line(a)] == 0);
    }
    TensorIdeal n1 = numerical_ideal(orb.category);
    CHECK(n1.dim(g.m, g.m) == 1);
}

TEST_CASE("morphism inversion")
{
    PresentedCategory c = dual_numbers();
    auto inv = invert_morphism(c, 0, 0, RatVector{Rational(1), Rational(1)});
    REQUIRE(inv.has_value());
    CHECK(*inv == RatVector{Rational(1), Rational(-1)});
    CHECK(c.compose(0, 0, 0, RatVector{Rational(1), Rational(1)}, *inv) ==
          c.ids[0]);
    CHECK(!invert_morphism(c, 0, 0, uv(2, 1)).has_value());

    auto half = invert_morphism(c, 0, 0, RatVector{Rational(2), Rational(0)});
    REQUIRE(half.has_value());
    CHECK(*half == RatVector{Rational(1, 2), Rational(0)});
}

TEST_CASE("nilpotent endomorphisms have vanishing traces when trace-compatible")
{
    PresentedCategory c = dual_numbers();
    CHECK(nilpotent_trace_check(c, 0, uv(2, 1)));
    CHECK(nilpotent_trace_check(c, 0, RatVector{Rational(0), Rational(-7)}));
    CHECK_THROWS_WITH_AS(nilpotent_trace_check(c, 0, c.ids[0]),
                         doctest::Contains("NotNilpotent"), Error);

    // A trace functional that pairs against the nilpotent direction is
    // still cyclic here, but it sees the nilpotent: the check reports it.
    PresentedCategory odd = dual_numbers(RatVector{Rational(0), Rational(1)});
    CHECK_NOTHROW(odd.validate());
    CHECK(!nilpotent_trace_check(odd, 0, uv(2, 1)));
}

TEST_CASE("conservativity of the orbit projection")
{
    GradedCat g = graded_cat(2, 1);
    OrbitSpec spec{g.line(1), g.line(-1), 4};

    ConservativityReport r1 =
        conservativity_check(g.c, spec, g.m, g.m, g.c.ids[g.m]);
    CHECK(r1.invertible_in_c);
    CHECK(r1.invertible_in_orbit);
    CHECK(r1.consistent);

    ConservativityReport r2 = conservativity_check(g.c, spec, g.m, g.m, uv(2, 1));
    CHECK(!r2.invertible_in_c);
    CHECK(!r2.invertible_in_orbit);
    CHECK(r2.consistent);

    ConservativityReport r3 =
        conservativity_check(g.c, spec, g.m, g.m,
                             RatVector{Rational(1), Rational(3)});
    CHECK(r3.invertible_in_c);
    CHECK(r3.consistent);

    // A zero morphism between now-isomorphic lines stays non-invertible.
    ConservativityReport r4 = conservativity_check(
        g.c, spec, g.line(0), g.line(1), RatVector{});
    CHECK(!r4.invertible_in_c);
    CHECK(!r4.invertible_in_orbit);
    CHECK(r4.consistent);
}

TEST_CASE("construction-order comparison on the line category")
{
    GradedCat g = graded_cat(2, 0);
    OrbitSpec spec{g.line(1), g.line(-1), 4};
    ConstructionOrderReport rep = verify_construction_order(g.c, spec, {{}, {}, {}, {}, {}});
    CHECK(rep.hypothesis_ok);
    CHECK(rep.ker_alpha_in_ideal);
    CHECK(rep.beta_bijective);
    CHECK(rep.gamma_bijective);
    CHECK(rep.dims_first == rep.dims_second);
    CHECK(rep.ok());
}

TEST_CASE("construction-order comparison with a nonzero numerical ideal")
{
    GradedCat g = graded_cat(2, 1);
    OrbitSpec spec{g.line(1), g.line(-1), 4};
    ConstructionOrderReport rep = verify_construction_order(g.c, spec, {{}, {}, {}, {}, {}, {}});
    CHECK(rep.ok());
    // Both orders compress End(M) from 2 to 1.
    CHECK(rep.dims_first[g.m][g.m] == 1);
    CHECK(rep.dims_second[g.m][g.m] == 1);
}

TEST_CASE("construction-order comparison transports idempotents")
{
    GradedCat g = graded_cat(2, 2);
    OrbitSpec spec{g.line(1), g.line(-1), 4};
    std::vector<std::vector<RatVector>> idem(6);
    idem[g.m].push_back(RatVector{Rational(1), Rational(0)});
    ConstructionOrderReport rep = verify_construction_order(g.c, spec, idem);
    CHECK(rep.ok());
    // Seven objects on both sides: five lines, M, and the summand of M.
    REQUIRE(rep.dims_first.size() == 7);
    REQUIRE(rep.dims_second.size() == 7);
    CHECK(rep.dims_first[6][6] == 1);
}

TEST_CASE("hypothesis failures are reported")
{
    PresentedCategory s = PresentedCategory::scalar();
    OrbitSpec triv{0, 0, 0};
    CHECK_THROWS_WITH_AS(verify_construction_order(s, triv, {{}}),
                         doctest::Contains("HypothesisFailed"), Error);

    PresentedCategory d = dual_numbers();
    CHECK_THROWS_WITH_AS(verify_construction_order(d, triv, {{}}),
                         doctest::Contains("HypothesisFailed"), Error);
}

TEST_CASE("basic accessors and errors")
{
    PresentedCategory c = dual_numbers();
    CHECK(c.object_index("X") == 0);
    CHECK_THROWS_WITH_AS(c.object_index("Y"), doctest::Contains("UnknownObject"),
                         Error);
    CHECK_THROWS_WITH_AS(c.compose(0, 0, 0, uv(1, 0), uv(2, 0)),
                         doctest::Contains("DimensionMismatch"), Error);
    PresentedCategory no_trace = dual_numbers();
    no_trace.has_trace = false;
    CHECK_THROWS_WITH_AS(numerical_ideal(no_trace),
                         doctest::Contains("TraceMissing"), Error);
}
