// saito: command line front end for the workbench.
//
//   saito info       --family wreath --r 1
//   saito check      --file arr.json
//   saito cohomology --space h1su --family wreath --r 2 --max-order 3
//   saito verify     --suite center --family wreath --r 2
//
// Exit status: 0 all pass, 1 mathematical mismatch, 2 usage or parse error.

#include <saito/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <regex>

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2 };

struct Options {
    std::string family;
    std::size_t n = 0;
    unsigned r = 1;
    std::string file;
    int max_order = -1;
    std::string weights;
    std::string suite = "all";
    std::string space = "h1su";
    int degree = -1;
    std::string format = "json";
    unsigned jobs = 1;
};

saito::Source make_source(const Options& o) {
    if (!o.family.empty() && !o.file.empty()) throw saito::InputError("give either --family or --file, not both");
    if (!o.file.empty()) return saito::file_source(o.file);
    saito::FamilySpec spec;
    spec.family = saito::parse_family(o.family.empty() ? "wreath" : o.family);
    spec.r = o.r;
    spec.n = o.n ? o.n : (spec.family == saito::Family::braid_deleted ? 2 : 3);
    return saito::family_source(spec);
}

saito::Bounds make_bounds(const Options& o, unsigned order, int lo, int hi) {
    saito::Bounds b;
    b.max_order = order;
    b.weight_lo = lo;
    b.weight_hi = hi;
    if (o.max_order >= 0) {
        if (o.max_order == 0) throw saito::InputError("--max-order must be positive");
        b.max_order = static_cast<unsigned>(o.max_order);
    }
    if (!o.weights.empty()) {
        static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
        std::smatch m;
        if (!std::regex_match(o.weights, m, re)) throw saito::InputError("--weights expects LO..HI, got '" + o.weights + "'");
        b.weight_lo = std::stoi(m[1]);
        b.weight_hi = std::stoi(m[2]);
        if (b.weight_lo > b.weight_hi) throw saito::InputError("--weights: LO must not exceed HI");
    }
    if (o.jobs == 0) throw saito::InputError("--jobs must be positive");
    b.jobs = o.jobs;
    return b;
}

std::uint64_t seed_from_env() {
    const char* s = std::getenv("SAITO_WORKBENCH_SEED");
    if (!s || !*s) return 1;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw saito::InputError(std::string("SAITO_WORKBENCH_SEED is not an integer: ") + s);
    }
}

void emit(const saito::json& j, const Options& o) {
    if (o.format == "text")
        std::cout << saito::render_text(j);
    else
        std::cout << j.dump(2) << '\n';
}

// CLI11 reads "-1..6" as a flag, so glue negative window bounds to their option.
std::vector<std::string> normalize(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--weights" && i + 1 < argc) a += std::string("=") + argv[++i];
        args.push_back(a);
    }
    std::reverse(args.begin(), args.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of differential operators on free arrangements"};
    app.require_subcommand(1);
    Options o;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--family", o.family, "braid, braid-deleted or wreath")
            ->check(CLI::IsMember({"braid", "braid-deleted", "braid_deleted", "wreath"}));
        cmd->add_option("--n", o.n, "number of variables");
        cmd->add_option("--r", o.r, "wreath parameter");
        cmd->add_option("--file", o.file, "arrangement JSON");
        cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--max-order", o.max_order, "order bound p of F_p U");
        cmd->add_option("--weights", o.weights, "weight window LO..HI");
        cmd->add_option("--jobs", o.jobs, "worker threads");
    };

    auto* info = app.add_subcommand("info", "arrangement, Saito matrix and condition flags");
    add_source(info);
    auto* check = app.add_subcommand("check", "Saito criterion, triangular, Bezout and orthogonality conditions");
    add_source(check);
    auto* cohomology = app.add_subcommand("cohomology", "graded dimensions of a cohomology space");
    add_source(cohomology);
    add_bounds(cohomology);
    cohomology->add_option("--space", o.space)
        ->check(CLI::IsMember({"h0su", "h1su", "ce-s", "ce-h1", "coker", "predict-h1", "center"}));
    cohomology->add_option("--degree", o.degree, "cohomological degree for ce-s and ce-h1");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_source(verify);
    add_bounds(verify);
    verify->add_option("--suite", o.suite)->check(CLI::IsMember(saito::suite_names()));

    try {
        app.parse(normalize(argc, argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        const saito::Source src = make_source(o);
        if (*info) {
            emit(saito::info_json(src), o);
            return kPass;
        }
        if (*check) {
            const auto j = saito::check_json(src);
            emit(j, o);
            return j["pass"].get<bool>() ? kPass : kMismatch;
        }
        if (*cohomology) {
            const int hi = static_cast<int>(4 * src.spec.r + 4);
            const auto j = saito::cohomology_json(o.space, src, make_bounds(o, 4, -1, hi), o.degree);
            emit(j, o);
            return j["match"].is_boolean() && !j["match"].get<bool>() ? kMismatch : kPass;
        }
        const saito::Bounds b = make_bounds(o, 3, -1, 8);
        const std::uint64_t seed = seed_from_env();
        const auto j = saito::verify_json(saito::run_suite(o.suite, src, b, seed), src, b, seed);
        emit(j, o);
        return j["pass"].get<bool>() ? kPass : kMismatch;
    } catch (const saito::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const saito::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
}
