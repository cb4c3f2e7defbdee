// Command-line front end for the exact correspondence-category engine.
// Talks to the core exclusively through the C API in ncmotives.h; exit
// codes are the API statuses (0 pass, 1 verified-false, 2 bad input).

#include "ncmotives.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

bool g_pretty = false;

std::optional<std::string> slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Prints the report (pretty when requested) and frees it.
int emit(int status, char* out)
{
    if (!out)
        return status;
    std::string text(out);
    ncm_string_free(out);
    if (g_pretty) {
        json j = json::parse(text, nullptr, false);
        if (!j.is_discarded())
            text = j.dump(2) + "\n";
    }
    std::cout << text;
    return status;
}

int with_file(const std::string& path, int (*fn)(const char*, char**))
{
    std::optional<std::string> text = slurp(path);
    if (!text) {
        std::cerr << "cannot read " << path << "\n";
        return 2;
    }
    char* out = nullptr;
    int status = fn(text->c_str(), &out);
    return emit(status, out);
}

std::string default_fixture_dir()
{
    if (const char* env = std::getenv("NCMOT_FIXTURES"))
        return env;
    return "fixtures";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact correspondence-category engine"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "pretty-print JSON reports");

    std::vector<std::string> check_files;
    CLI::App* check = app.add_subcommand("check", "validate fixture documents");
    check->add_option("files", check_files, "fixture JSON files")->required();

    std::string trace_file;
    CLI::App* trace =
        app.add_subcommand("trace", "categorical trace of an endo-correspondence");
    trace->add_option("file", trace_file, "correspondence document")->required();

    std::string pair_x, pair_y;
    CLI::App* pair =
        app.add_subcommand("pair", "intersection number of a round trip");
    pair->add_option("x", pair_x, "correspondence document")->required();
    pair->add_option("y", pair_y, "correspondence document")->required();

    std::string gram_file;
    CLI::App* gram = app.add_subcommand(
        "gram", "trace-pairing Gram matrix of an idempotent endo-correspondence");
    gram->add_option("file", gram_file, "correspondence document")->required();

    std::string radical_file;
    CLI::App* radical =
        app.add_subcommand("radical", "numerical ideal of a category document");
    radical->add_option("file", radical_file, "category document")->required();

    std::string quotient_file;
    CLI::App* quotient =
        app.add_subcommand("quotient", "quotient by the numerical ideal");
    quotient->add_option("file", quotient_file, "category document")->required();

    std::string karoubi_file, karoubi_idem;
    CLI::App* karoubi = app.add_subcommand("karoubi", "idempotent completion");
    karoubi->add_option("file", karoubi_file, "category document")->required();
    karoubi->add_option("--idempotents", karoubi_idem,
                        "JSON file: per object, coordinate arrays");

    std::string orbit_cat, orbit_spec;
    CLI::App* orbit = app.add_subcommand("orbit", "orbit category along a spec");
    orbit->add_option("category", orbit_cat, "category document")->required();
    orbit->add_option("spec", orbit_spec, "orbitspec document")->required();

    std::string ss_file;
    bool ss_after = false;
    CLI::App* semisimple =
        app.add_subcommand("semisimple", "semisimplicity report");
    semisimple->add_option("file", ss_file, "category document")->required();
    semisimple->add_flag("--after-quotient", ss_after,
                         "quotient by the numerical ideal first");

    std::string verify_suite_name = "all";
    std::string verify_dir = default_fixture_dir();
    std::uint64_t verify_seed = 1;
    CLI::App* verify =
        app.add_subcommand("verify", "seeded property suites over the corpus");
    verify->add_option("suite", verify_suite_name,
                       "ideal | largest | trace-agreement | construction-order | "
                       "conservativity | nilpotent | all");
    verify->add_option("--fixtures", verify_dir, "fixture directory");
    verify->add_option("--seed", verify_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*check) {
        int worst = 0;
        for (const std::string& f : check_files)
            worst = std::max(worst, with_file(f, &ncm_check));
        return worst;
    }
    if (*trace)
        return with_file(trace_file, &ncm_trace);
    if (*pair) {
        std::optional<std::string> x = slurp(pair_x);
        std::optional<std::string> y = slurp(pair_y);
        if (!x || !y) {
            std::cerr << "cannot read input files\n";
            return 2;
        }
        char* out = nullptr;
        int status = ncm_pair(x->c_str(), y->c_str(), &out);
        return emit(status, out);
    }
    if (*gram)
        return with_file(gram_file, &ncm_gram);
    if (*radical)
        return with_file(radical_file, &ncm_radical);
    if (*quotient)
        return with_file(quotient_file, &ncm_quotient);
    if (*karoubi) {
        std::optional<std::string> cat = slurp(karoubi_file);
        if (!cat) {
            std::cerr << "cannot read " << karoubi_file << "\n";
            return 2;
        }
        std::optional<std::string> idem;
        if (!karoubi_idem.empty()) {
            idem = slurp(karoubi_idem);
            if (!idem) {
                std::cerr << "cannot read " << karoubi_idem << "\n";
                return 2;
            }
        }
        char* out = nullptr;
        int status = ncm_karoubi(cat->c_str(), idem ? idem->c_str() : nullptr, &out);
        return emit(status, out);
    }
    if (*orbit) {
        std::optional<std::string> cat = slurp(orbit_cat);
        std::optional<std::string> spec = slurp(orbit_spec);
        if (!cat || !spec) {
            std::cerr << "cannot read input files\n";
            return 2;
        }
        char* out = nullptr;
        int status = ncm_orbit(cat->c_str(), spec->c_str(), &out);
        return emit(status, out);
    }
    if (*semisimple) {
        std::optional<std::string> cat = slurp(ss_file);
        if (!cat) {
            std::cerr << "cannot read " << ss_file << "\n";
            return 2;
        }
        char* out = nullptr;
        int status = ncm_semisimple(cat->c_str(), ss_after ? 1 : 0, &out);
        return emit(status, out);
    }
    if (*verify) {
        char* out = nullptr;
        int status = ncm_verify(verify_suite_name.c_str(), verify_dir.c_str(),
                                verify_seed, &out);
        return emit(status, out);
    }
    return 2;
}
