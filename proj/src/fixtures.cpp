#include "ncmot/fixtures.hpp"

#include "ncmot/complexes.hpp"
#include "ncmot/nc_motives.hpp"

namespace ncmot {

namespace {

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

// Shared skeleton: lines L_{-r}..L_r with an optional extra object M
// carrying End = F[x]/x^2.
PresentedCategory graded_skeleton(int radius, bool with_m)
{
    constexpr std::size_t none = PresentedCategory::no_object;
    PresentedCategory c;
    const std::size_t nl = static_cast<std::size_t>(2 * radius + 1);
    auto line = [&](int d) { return static_cast<std::size_t>(d + radius); };
    for (int d = -radius; d <= radius; ++d)
        c.objects.push_back("L" + std::to_string(d));
    const std::size_t m = nl;
    if (with_m)
        c.objects.push_back("M");
    const std::size_t n = c.n_objects();
    const std::size_t dm = 2;

    c.hom_dims.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < nl; ++a)
        c.hom_dims[a][a] = 1;
    if (with_m)
        c.hom_dims[m][m] = dm;
    alloc_comp(c);

    auto mmult = [&](std::size_t i, std::size_t j) {
        RatVector v(dm, 0);
        if (i + j < dm)
            v[i + j] = 1;
        return v;
    };

    for (std::size_t a = 0; a < nl; ++a) {
        c.comp[a][a][a][0][0] = uv(1, 0);
        c.ids[a] = uv(1, 0);
    }
    if (with_m) {
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dm; ++j)
                c.comp[m][m][m][i][j] = mmult(i, j);
        c.ids[m] = uv(dm, 0);
    }

    c.has_trace = true;
    c.trace.assign(n, {});
    for (std::size_t a = 0; a < nl; ++a)
        c.trace[a] = uv(1, 0);
    if (with_m)
        c.trace[m] = uv(dm, 0);

    c.has_tensor = true;
    c.unit = line(0);
    c.prod.assign(n, std::vector<std::size_t>(n, none));
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b)
            if (a + b >= -radius && a + b <= radius)
                c.prod[line(a)][line(b)] = line(a + b);
    if (with_m) {
        c.prod[m][m] = m;
        c.prod[c.unit][m] = m;
        c.prod[m][c.unit] = m;
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
                    // Nonzero homs sit on the diagonal only, so cells
                    // pair End elements; multiply them.
                    for (std::size_t i = 0; i < c.hom_dims[a][b]; ++i)
                        for (std::size_t j = 0; j < c.hom_dims[x][y]; ++j) {
                            if (with_m && a == m && x == m)
                                table[i][j] = mmult(i, j);
                            else if (with_m && a == m)
                                table[i][j] = uv(dm, i);
                            else if (with_m && x == m)
                                table[i][j] = uv(dm, j);
                            else
                                table[i][j] = uv(1, 0);
                        }
                }
            }
        }
    }
    return c;
}

}  // namespace

std::vector<NamedQuiver> corpus_quivers()
{
    std::vector<NamedQuiver> out;
    out.push_back({"point", Quiver{{"1"}, {}}});
    out.push_back({"two-points", Quiver{{"1", "2"}, {}}});
    out.push_back({"a2", Quiver{{"1", "2"}, {{"a", 0, 1}}}});
    out.push_back({"a3", Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}}});
    out.push_back({"fork", Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 0, 2}}}});
    return out;
}

PresentedCategory dual_numbers_category()
{
    PresentedCategory c;
    c.objects = {"X"};
    c.hom_dims = {{2}};
    alloc_comp(c);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            RatVector v(2, 0);
            if (i + j < 2)
                v[i + j] = 1;
            c.comp[0][0][0][i][j] = v;
        }
    c.ids[0] = uv(2, 0);
    c.has_trace = true;
    c.trace = {uv(2, 0)};
    c.has_tensor = true;
    c.unit = 0;
    c.prod = {{0}};
    c.mor_prod.assign(1, {{{{std::vector<std::vector<RatVector>>(
        2, std::vector<RatVector>(2))}}}});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            c.mor_prod[0][0][0][0][i][j] = c.comp[0][0][0][i][j];
    return c;
}

PresentedCategory graded_lines_category(int radius)
{
    return graded_skeleton(radius, false);
}

PresentedCategory nilpotent_block_category(int radius)
{
    return graded_skeleton(radius, true);
}

OrbitSpecDoc shift_orbit_doc(long bound)
{
    return OrbitSpecDoc{"L1", "L-1", bound};
}

std::vector<std::pair<std::string, std::string>> corpus_documents()
{
    std::vector<std::pair<std::string, std::string>> out;

    std::vector<PathAlgebraPtr> algebras;
    for (const NamedQuiver& q : corpus_quivers()) {
        out.emplace_back(q.name + ".quiver.json", save_quiver(q.quiver, q.name));
        algebras.push_back(path_algebra(q.quiver));
    }

    for (std::size_t i = 0; i < algebras.size(); ++i) {
        const std::string name = corpus_quivers()[i].name + "-id";
        out.emplace_back(
            name + ".correspondence.json",
            save_correspondence(Correspondence::identity(algebras[i]), name));
    }
    {
        // Projective-generator class [P_(1,2)] on the one-arrow algebra.
        PathAlgebraPtr a2 = algebras[2];
        RatVector cls(4, 0);
        cls[0 * 2 + 1] = 1;
        out.emplace_back(
            "a2-p12.correspondence.json",
            save_correspondence(Correspondence::from_class(a2, a2, cls),
                                "a2-p12"));
    }

    {
        BimoduleFixture diag{algebras[2], algebras[2], ProjBimodule{{{0, 0}, {1, 1}}}};
        out.emplace_back("a2-diagonal.bimodule.json",
                         save_bimodule(diag, "a2-diagonal"));
        out.emplace_back("a2-standard.complex.json",
                         save_complex(standard_resolution(algebras[2]),
                                      "a2-standard"));
    }

    out.emplace_back("qx2.category.json",
                     save_category(dual_numbers_category(), "qx2"));
    out.emplace_back("graded.category.json",
                     save_category(graded_lines_category(), "graded"));
    out.emplace_back("nilpotent.category.json",
                     save_category(nilpotent_block_category(), "nilpotent"));
    out.emplace_back("shift.orbitspec.json",
                     save_orbitspec(shift_orbit_doc(), "shift"));
    return out;
}

}  // namespace ncmot
