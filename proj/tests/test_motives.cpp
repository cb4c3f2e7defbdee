#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncmot/nc_motives.hpp"

#include <random>

using namespace ncmot;

namespace {

PathAlgebraPtr point() { return path_algebra(Quiver{{"*"}, {}}); }
PathAlgebraPtr two_points() { return path_algebra(Quiver{{"1", "2"}, {}}); }
PathAlgebraPtr a2() { return path_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}}}); }
PathAlgebraPtr a3()
{
    return path_algebra(Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}});
}

RatVector random_class(std::mt19937_64& rng, std::size_t len)
{
    RatVector v(len);
    for (Rational& x : v)
        x = Rational(static_cast<long>(rng() % 7) - 3);
    return v;
}

}  // namespace

TEST_CASE("class algebra data")
{
    ClassAlgebra a = ClassAlgebra::of(*a2());
    REQUIRE(a.n() == 2);
    CHECK(a.hom[0][0] == 1);
    CHECK(a.hom[1][0] == 1);
    CHECK(a.hom[0][1] == 0);

    ClassAlgebra t = ClassAlgebra::tensor(a, a);
    REQUIRE(t.n() == 4);
    CHECK(t.hom[1 * 2 + 1][0 * 2 + 0] == 1);  // (e2(x)e2) T (e1(x)e1) = a(x)a
    CHECK(t.hom[0][3] == 0);
}

TEST_CASE("identity correspondence is a class-level unit")
{
    for (PathAlgebraPtr ap : {point(), two_points(), a2(), a3()}) {
        ClassAlgebra a = ClassAlgebra::of(*ap);
        Correspondence id = Correspondence::identity(ap);
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            RatVector f = random_class(rng, a.n() * a.n());
            CHECK(compose_classes(a, a, a, id.cached_class, f) == f);
            CHECK(compose_classes(a, a, a, f, id.cached_class) == f);
        }
    }
}

TEST_CASE("composition matches the spec examples over the one-arrow algebra")
{
    PathAlgebraPtr ap = a2();
    ClassAlgebra a = ClassAlgebra::of(*ap);
    // [P_(1,2)] o [P_(2,2)] = [P_(1,2)] with coefficient dim(e_2 A e_2).
    RatVector p12(4, 0), p22(4, 0);
    p12[0 * 2 + 1] = 1;
    p22[1 * 2 + 1] = 1;
    RatVector c = compose_classes(a, a, a, p12, p22);
    CHECK(c == RatVector{Rational(0), Rational(1), Rational(0), Rational(0)});
    // [P_(1,1)] o [P_(2,2)] = 0 since dim(e_1 A e_2) = 0.
    RatVector p11(4, 0);
    p11[0] = 1;
    CHECK(compose_classes(a, a, a, p11, p22) == RatVector(4, Rational(0)));
}

TEST_CASE("compose with representatives agrees with the class calculus")
{
    PathAlgebraPtr ap = a3();
    ClassAlgebra a = ClassAlgebra::of(*ap);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        RatVector xc = random_class(rng, 9), yc = random_class(rng, 9);
        Correspondence x = Correspondence::from_class(ap, ap, xc);
        Correspondence y = Correspondence::from_class(ap, ap, yc);
        Correspondence z = compose(x, y);
        CHECK(z.cached_class == compose_classes(a, a, a, xc, yc));
        CHECK_NOTHROW(z.validate());
    }
}

TEST_CASE("intersection numbers")
{
    PathAlgebraPtr q = point();
    Correspondence idq = Correspondence::identity(q);
    CHECK(intersection_number(idq, idq) == 1);

    PathAlgebraPtr ap = a2();
    const std::size_t n = 2;
    ClassAlgebra a = ClassAlgebra::of(*ap);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t w2 = 0; w2 < n; ++w2)
                for (std::size_t u = 0; u < n; ++u) {
                    RatVector xc(4, 0), yc(4, 0);
                    xc[v * n + w] = 1;
                    yc[w2 * n + u] = 1;
                    Correspondence x = Correspondence::from_class(ap, ap, xc);
                    Correspondence y = Correspondence::from_class(ap, ap, yc);
                    Rational expected(
                        static_cast<long>(a.hom[w][w2] * a.hom[u][v]));
                    CHECK(intersection_number(x, y) == expected);
                    // Oracle: the explicit homological route on the
                    // composed representative.
                    Correspondence z = compose(x, y);
                    Rational chi = 0;
                    for (const auto& t : z.terms)
                        chi += t.coeff * hh_class(ap, t.rep);
                    CHECK(chi == expected);
                }
}

TEST_CASE("categorical traces of identities")
{
    CHECK(categorical_trace(Correspondence::identity(point())) == 1);
    CHECK(categorical_trace(Correspondence::identity(two_points())) == 2);
    CHECK(categorical_trace(Correspondence::identity(a2())) == 2);
}

TEST_CASE("trace is cyclic")
{
    PathAlgebraPtr ap = a3();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Correspondence x = Correspondence::from_class(ap, ap, random_class(rng, 9));
        Correspondence y = Correspondence::from_class(ap, ap, random_class(rng, 9));
        CHECK(categorical_trace(compose(x, y)) == categorical_trace(compose(y, x)));
    }
}

TEST_CASE("representative independence")
{
    PathAlgebraPtr ap = a2();
    Correspondence x = Correspondence::identity(ap);
    std::vector<Correspondence::Term> padded = x.terms;
    padded.push_back({Rational(5, 3), ProjComplex::identity_cone(ap, ap, 0, 1)});
    Correspondence xp = Correspondence::make(ap, ap, padded);
    CHECK(xp.cached_class == x.cached_class);
    CHECK(categorical_trace(xp) == categorical_trace(x));
    Correspondence y = Correspondence::from_class(ap, ap, RatVector{Rational(1), Rational(2), Rational(0), Rational(-1)});
    CHECK(intersection_number(xp, y) == intersection_number(x, y));
    CHECK(compose(xp, y).cached_class == compose(x, y).cached_class);
}

TEST_CASE("motive validation")
{
    PathAlgebraPtr ap = a2();
    NCMotive whole = NCMotive::whole(ap);
    CHECK_NOTHROW(whole.validate());

    NCMotive bad{ap, Correspondence::from_class(
                         ap, ap, RatVector{Rational(2), Rational(0), Rational(0), Rational(0)})};
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("IdempotentInvalid"), Error);

    // [P_(1,1)] is idempotent: e_1 A e_1 is one-dimensional.
    NCMotive part{ap, Correspondence::from_class(
                          ap, ap, RatVector{Rational(1), Rational(0), Rational(0), Rational(0)})};
    CHECK_NOTHROW(part.validate());
}

TEST_CASE("gram matrices")
{
    NCMotive q = NCMotive::whole(point());
    RatMatrix gq = gram_matrix(q, q);
    REQUIRE(gq.rows() == 1);
    CHECK(gq.at(0, 0) == 1);

    PathAlgebraPtr ap = a2();
    ClassAlgebra a = ClassAlgebra::of(*ap);
    NCMotive m = NCMotive::whole(ap);
    RatMatrix g = gram_matrix(m, m);
    REQUIRE(g.rows() == 4);
    REQUIRE(g.cols() == 4);
    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t w = 0; w < 2; ++w)
            for (std::size_t w2 = 0; w2 < 2; ++w2)
                for (std::size_t u = 0; u < 2; ++u)
                    CHECK(g.at(v * 2 + w, w2 * 2 + u) ==
                          Rational(static_cast<long>(a.hom[w][w2] * a.hom[u][v])));
    CHECK(rank(g) == 4);
    CHECK(pairing_radical(g).empty());

    NCMotive tp = NCMotive::whole(two_points());
    RatMatrix gt = gram_matrix(tp, tp);
    CHECK(rank(gt) == 4);

    // Compressed motives shrink the pairing.
    NCMotive part{ap, Correspondence::from_class(
                          ap, ap, RatVector{Rational(1), Rational(0), Rational(0), Rational(0)})};
    RatMatrix gp = gram_matrix(part, part);
    CHECK(gp.rows() == 1);
    CHECK(gp.at(0, 0) == 1);
}

TEST_CASE("numerical triviality")
{
    PathAlgebraPtr ap = a2();
    std::vector<NCMotive> ctx{NCMotive::whole(ap)};
    CHECK(is_numerically_trivial(Correspondence::zero(ap, ap), ctx));
    CHECK(!is_numerically_trivial(Correspondence::identity(ap), ctx));

    std::vector<Correspondence::Term> cones;
    cones.push_back({Rational(2), ProjComplex::identity_cone(ap, ap, 0, 0)});
    cones.push_back({Rational(-7, 2), ProjComplex::identity_cone(ap, ap, 1, 1)});
    CHECK(is_numerically_trivial(Correspondence::make(ap, ap, cones), ctx));

    // Empty context falls back to the uncompressed check.
    CHECK(!is_numerically_trivial(Correspondence::identity(ap), {}));
}

TEST_CASE("external tensor of classes")
{
    PathAlgebraPtr p = a2(), q = a3();
    ClassAlgebra a = ClassAlgebra::of(*p), b = ClassAlgebra::of(*q);
    ClassAlgebra ta = ClassAlgebra::tensor(a, b);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        RatVector x = random_class(rng, 4), y = random_class(rng, 9);
        RatVector xt = tensor_classes(a, a, b, b, x, y);
        // Trace is multiplicative across the external tensor.
        CHECK(trace_class(ta, xt) == trace_class(a, x) * trace_class(b, y));

        // And compatible with composition factorwise.
        RatVector x2 = random_class(rng, 4), y2 = random_class(rng, 9);
        RatVector lhs = compose_classes(ta, ta, ta, xt,
                                        tensor_classes(a, a, b, b, x2, y2));
        RatVector rhs = tensor_classes(a, a, b, b,
                                       compose_classes(a, a, a, x, x2),
                                       compose_classes(b, b, b, y, y2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("presented-category export of the point motive")
{
    PresentedCategory c = export_presented_category({NCMotive::whole(point())});
    REQUIRE(c.n_objects() == 1);
    CHECK(c.hom_dims[0][0] == 1);
    CHECK(c.unit == 0);
    CHECK(c.tr(0, c.ids[0]) == 1);
    CHECK(c.compose(0, 0, 0, RatVector{Rational(2)}, RatVector{Rational(3)}) ==
          RatVector{Rational(6)});
    CHECK(numerical_ideal(c).dim(0, 0) == 0);
}

TEST_CASE("presented-category export of the one-arrow motive")
{
    PresentedCategory c = export_presented_category({NCMotive::whole(a2())});
    REQUIRE(c.n_objects() == 1);
    CHECK(c.hom_dims[0][0] == 4);
    CHECK(c.unit == PresentedCategory::no_object);
    CHECK(c.tr(0, c.ids[0]) == 2);

    // Nondegenerate pairing: the numerical ideal vanishes and the End
    // algebra is semisimple with zero radical.
    CHECK(numerical_ideal(c).dim(0, 0) == 0);
    SemisimpleReport rep = check_semisimple(c);
    CHECK(rep.semisimple);
    CHECK(rep.end_radical_dims[0] == 0);

    // The square-zero class [P_(2,1)] has vanishing traces in all powers.
    ClassAlgebra a = ClassAlgebra::of(*a2());
    RatVector nil(4, 0);
    nil[1 * 2 + 0] = 1;
    CHECK(compose_classes(a, a, a, nil, nil) == RatVector(4, Rational(0)));
    CHECK(nilpotent_trace_check(c, 0, nil));
}

TEST_CASE("presented-category export of a motive pair")
{
    std::vector<NCMotive> objs{NCMotive::whole(point()), NCMotive::whole(a2())};
    PresentedCategory c = export_presented_category(objs);
    REQUIRE(c.n_objects() == 2);
    CHECK(c.unit == 0);
    CHECK(c.hom_dims[0][0] == 1);
    CHECK(c.hom_dims[0][1] == 2);
    CHECK(c.hom_dims[1][0] == 2);
    CHECK(c.hom_dims[1][1] == 4);

    // The numerical ideal is zero and is the largest proper ideal.
    TensorIdeal ideal = numerical_ideal(c);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(ideal.dim(i, j) == 0);
    CHECK(is_largest_ideal(c, ideal));
    CHECK(check_semisimple(c).semisimple);
}

TEST_CASE("presented-category export of a compressed motive")
{
    PathAlgebraPtr ap = a2();
    NCMotive part{ap, Correspondence::from_class(
                          ap, ap, RatVector{Rational(1), Rational(0), Rational(0),
                                            Rational(0)})};
    PresentedCategory c = export_presented_category({NCMotive::whole(ap), part});
    CHECK(c.hom_dims[0][0] == 4);
    CHECK(c.hom_dims[1][1] == 1);
    CHECK(c.tr(1, c.ids[1]) == 1);

    NCMotive bad{ap, Correspondence::from_class(
                         ap, ap, RatVector{Rational(2), Rational(0), Rational(0),
                                           Rational(0)})};
    CHECK_THROWS_WITH_AS(export_presented_category({bad}),
                         doctest::Contains("IdempotentInvalid"), Error);
}

TEST_CASE("numerically trivial classes form a tensor ideal")
{
    PathAlgebraPtr ap = a2();
    ClassAlgebra a = ClassAlgebra::of(*ap);
    ClassAlgebra ta = ClassAlgebra::tensor(a, a);
    std::mt19937_64 rng(31);
    // The only trivial class over a nondegenerate pairing is 0; so
    // exercise ideal closure on the zero class plus stress the
    // non-trivial direction.
    RatVector zero(4, 0);
    for (int trial = 0; trial < 5; ++trial) {
        RatVector g = random_class(rng, 4), h = random_class(rng, 4);
        RatVector moved = compose_classes(
            a, a, a, compose_classes(a, a, a, g, zero), h);
        CHECK(class_numerically_trivial(a, a, moved));
        RatVector m = random_class(rng, 4);
        CHECK(class_numerically_trivial(ta, ta, tensor_classes(a, a, a, a, zero, m)));
        if (class_numerically_trivial(a, a, m))
            CHECK(class_numerically_trivial(ta, ta, tensor_classes(a, a, a, a, m, m)));
    }
}
