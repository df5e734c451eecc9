#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kickbasis/hilbert.hpp"
#include "kickbasis/kicking.hpp"
#include "kickbasis/oracle.hpp"
#include "kickbasis/orbit.hpp"
#include "kickbasis/verify.hpp"

namespace {

using kickbasis::Family;
using kickbasis::Params;
using kickbasis::QTPoly;
using kickbasis::Shape;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t factorial64(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

struct Config {
    std::string shape_spec;
    std::string family = "auto";
    std::string alpha, beta;
    unsigned seed = 0;
    bool seeded = false;
    std::int64_t matrix_cap = 720;
    int enum_cap = 9;
};

void add_shape_options(CLI::App* cmd, Config& cfg, bool with_params = true) {
    cmd->add_option("--shape", cfg.shape_spec, "shape, e.g. 2,2,1 or 2^2,1")
        ->required();
    cmd->add_option("--family", cfg.family,
                    "basis route: auto, twocol, or hook");
    if (with_params) {
        cmd->add_option("--alpha", cfg.alpha,
                        "comma-separated rationals, one per row");
        cmd->add_option("--beta", cfg.beta,
                        "comma-separated rationals, one per column");
        cmd->add_option("--seed", cfg.seed,
                        "seeded random distinct parameters")
            ->trigger_on_parse()
            ->each([&cfg](const std::string&) { cfg.seeded = true; });
    }
}

Shape resolve_shape(const Config& cfg) { return Shape::parse(cfg.shape_spec); }

Family resolve_family(const Config& cfg, const Shape& shape) {
    if (cfg.family == "twocol") {
        if (!shape.is_two_column()) {
            throw UsageError("shape " + shape.str() +
                             " has a row longer than 2");
        }
        return Family::TwoColumn;
    }
    if (cfg.family == "hook") {
        if (!shape.is_hook()) {
            throw UsageError("shape " + shape.str() + " is not a hook");
        }
        return Family::Hook;
    }
    if (cfg.family == "auto") return shape.default_family();
    throw UsageError("unknown family: " + cfg.family);
}

std::vector<kickbasis::Rational> parse_rational_list(const std::string& s) {
    std::vector<kickbasis::Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(kickbasis::parse_rational(tok));
    }
    return out;
}

Params resolve_params(const Config& cfg, const Shape& shape) {
    Params p = cfg.seeded ? Params::random(shape, cfg.seed)
                          : Params::defaults(shape);
    if (!cfg.alpha.empty()) p.alpha = parse_rational_list(cfg.alpha);
    if (!cfg.beta.empty()) p.beta = parse_rational_list(cfg.beta);
    try {
        p.validate(shape);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return p;
}

int cmd_fillings(const Config& cfg) {
    const Shape shape = resolve_shape(cfg);
    const Family family = resolve_family(cfg, shape);
    for (const auto& f :
         kickbasis::enumerate_fillings(shape, family, cfg.enum_cap)) {
        std::cout << f.str() << "\n";
    }
    return 0;
}

int cmd_basis(const Config& cfg) {
    const Shape shape = resolve_shape(cfg);
    const Family family = resolve_family(cfg, shape);
    for (const auto& f :
         kickbasis::enumerate_fillings(shape, family, cfg.enum_cap)) {
        const auto p = kickbasis::phi(f, family);
        const auto [dx, dy] = p.bidegree();
        std::cout << f.str() << "\t" << p.str() << "\t(" << dx << "," << dy
                  << ")\n";
    }
    return 0;
}

int cmd_tree(const Config& cfg) {
    const Shape shape = resolve_shape(cfg);
    if (!shape.is_two_column()) {
        throw UsageError("the kicking tree is only defined for two-column "
                         "shapes; " +
                         shape.str() + " has a longer row");
    }
    const auto tree = kickbasis::build_kicking_tree(shape, cfg.enum_cap);
    std::cout << kickbasis::tree_str(tree);
    return 0;
}

int cmd_certify(const Config& cfg, const std::string& order, bool blocks) {
    const Shape shape = resolve_shape(cfg);
    const Family family = resolve_family(cfg, shape);
    const Params params = resolve_params(cfg, shape);
    const auto start = std::chrono::steady_clock::now();
    auto m = kickbasis::evaluation_matrix(shape, family, params,
                                          cfg.matrix_cap);
    if (order == "block-reverse") {
        // Proof-internal presentation: keep the coarse blocks by the row of
        // the largest entry, reverse the kicking order inside each block.
        // A permutation cannot change the verdict.
        const auto fillings =
            kickbasis::enumerate_fillings(shape, family, shape.n());
        const int d = static_cast<int>(fillings.size());
        std::vector<int> idx(d);
        int lo = 0;
        while (lo < d) {
            int hi = lo;
            while (hi < d &&
                   fillings[hi].row_of(shape.n()) ==
                       fillings[lo].row_of(shape.n())) {
                ++hi;
            }
            for (int i = lo; i < hi; ++i) idx[i] = lo + (hi - 1 - i);
            lo = hi;
        }
        std::vector<std::vector<kickbasis::Rational>> pm(
            d, std::vector<kickbasis::Rational>(d));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) pm[i][j] = m[idx[i]][idx[j]];
        }
        m = std::move(pm);
    } else if (order != "kicking") {
        throw UsageError("unknown order: " + order);
    }
    const auto report = kickbasis::certify_nonsingular_matrix(m);
    nlohmann::json violations = nlohmann::json::array();
    if (!report.nonsingular) {
        nlohmann::json kernel = nlohmann::json::array();
        for (const auto& v : report.kernel) {
            kernel.push_back(kickbasis::rational_str(v));
        }
        violations.push_back(
            {{"kind", "singular"},
             {"message", "evaluation matrix violates the nonsingularity "
                         "theorem for its family"},
             {"kernel", kernel}});
    }
    if (blocks) {
        if (const auto v = kickbasis::check_block_triangular_by_largest(
                shape, family, params, cfg.matrix_cap)) {
            violations.push_back(
                {{"kind", "block"},
                 {"message", "nonzero entry below the coarse blocks by the "
                             "row of the largest entry"},
                 {"i", v->first},
                 {"j", v->second}});
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    nlohmann::json out{{"schema", "kicking/1"},
                       {"shape", shape.str()},
                       {"n", shape.n()},
                       {"order", order},
                       {"verdict", report.nonsingular ? "nonsingular"
                                                      : "singular"},
                       {"elapsed", elapsed},
                       {"violations", violations}};
    std::cout << out.dump(2) << "\n";
    return violations.empty() ? 0 : 1;
}

int cmd_hilbert(const Config& cfg, bool as_json) {
    const Shape shape = resolve_shape(cfg);
    const Family family = resolve_family(cfg, shape);
    const QTPoly f = kickbasis::degree_polynomial(shape, family, cfg.enum_cap);
    const auto [N, M] = kickbasis::top_degrees(shape);
    const auto rep = kickbasis::symmetry_report(f, N, M);
    if (as_json) {
        nlohmann::json out{{"schema", "kicking/1"},
                           {"shape", shape.str()},
                           {"poly", nlohmann::json::parse(f.json())},
                           {"symmetric", rep.pass},
                           {"N", N},
                           {"M", M}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << f.str() << "  symmetric:" << (rep.pass ? "yes" : "no")
                  << "  (N,M)=(" << N << "," << M << ")\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_jtable(int amax, int enum_cap) {
    bool ok = true;
    for (int a = 1; a <= amax; ++a) {
        for (int b = 0; b <= a; ++b) {
            for (int m = 0; m <= b; ++m) {
                const QTPoly r1 = kickbasis::j_recurrence_first(a, b, m);
                const QTPoly r2 = kickbasis::j_recurrence_second(a, b, m);
                std::string status;
                if (r1 != r2) {
                    status = "MISMATCH:recurrences";
                    ok = false;
                } else if (a + b <= enum_cap) {
                    const QTPoly je = kickbasis::j_enumerated(a, b, m, enum_cap);
                    if (je == r1) {
                        status = "agree:yes";
                    } else {
                        status = "MISMATCH:enumeration";
                        ok = false;
                    }
                } else {
                    status = "agree:rec";
                }
                std::cout << "a=" << a << " b=" << b << " m=" << m << "\t"
                          << r1.str() << "\t" << status << "\n";
            }
        }
    }
    return ok ? 0 : 1;
}

int cmd_oracle(const Config& cfg, bool compare, bool allow_n6) {
    const Shape shape = resolve_shape(cfg);
    const int cap = allow_n6 ? 6 : 5;
    if (allow_n6 && shape.n() == 6) {
        std::cerr << "warning: n=6 closure handles 720 determinant terms; "
                     "expect a long run\n";
    }
    const QTPoly h = kickbasis::harmonic_hilbert(shape, cap);
    if (!compare) {
        std::cout << h.str() << "\n";
        return 0;
    }
    const Family family = resolve_family(cfg, shape);
    const QTPoly f = kickbasis::degree_polynomial(shape, family, cfg.enum_cap);
    std::cout << "degree:   " << f.str() << "\n";
    std::cout << "harmonic: " << h.str() << "\n";
    if (f == h) {
        std::cout << "MATCH\n";
        return 0;
    }
    std::cout << "MISMATCH (the graded quotient should realize the harmonic "
                 "space)\n";
    return 1;
}

int cmd_verify_all(int nmax) {
    const auto results = kickbasis::run_verification_suite(nmax);
    bool ok = true;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            ok = false;
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kicking basis toolkit for two-column and hook shapes"};
    app.require_subcommand(1);

    Config cfg;
    std::string order = "kicking";
    bool blocks = false;
    bool as_json = false;
    bool compare = false;
    bool allow_n6 = false;
    int amax = 7;
    int nmax = 0;

    auto* fillings = app.add_subcommand(
        "fillings", "list the standard fillings in kicking order");
    add_shape_options(fillings, cfg, false);
    fillings->add_option("--enum-cap", cfg.enum_cap, "largest n enumerated");

    auto* basis = app.add_subcommand(
        "basis", "list filling, basis polynomial, and bidegree");
    add_shape_options(basis, cfg, false);
    basis->add_option("--enum-cap", cfg.enum_cap, "largest n enumerated");

    auto* tree =
        app.add_subcommand("tree", "print the kicking tree (two-column only)");
    add_shape_options(tree, cfg, false);
    tree->add_option("--enum-cap", cfg.enum_cap, "largest n enumerated");

    auto* certify = app.add_subcommand(
        "certify", "certify the evaluation matrix nonsingular");
    add_shape_options(certify, cfg);
    certify->add_option("--matrix-cap", cfg.matrix_cap,
                        "largest allowed matrix dimension (n!)");
    certify->add_option("--order", order,
                        "row order in the report: kicking or block-reverse");
    certify->add_flag("--blocks", blocks,
                      "also check the coarse block zero pattern");

    auto* hilbert = app.add_subcommand(
        "hilbert", "degree polynomial with its symmetry verdict");
    add_shape_options(hilbert, cfg, false);
    hilbert->add_option("--enum-cap", cfg.enum_cap, "largest n enumerated");
    hilbert->add_flag("--json", as_json, "emit the JSON report");

    auto* jtable = app.add_subcommand(
        "jtable", "refined degree polynomials with agreement status");
    jtable->add_option("--amax", amax, "largest diagram parameter a");
    jtable->add_option("--enum-cap", cfg.enum_cap,
                       "largest a+b checked against enumeration");

    auto* oracle = app.add_subcommand(
        "oracle", "Hilbert series of the harmonic space");
    add_shape_options(oracle, cfg, false);
    oracle->add_flag("--compare", compare,
                     "also print the degree polynomial and a verdict");
    oracle->add_flag("--allow-n6", allow_n6, "raise the oracle cap to n=6");
    oracle->add_option("--enum-cap", cfg.enum_cap, "largest n enumerated");

    auto* verify_all =
        app.add_subcommand("verify-all", "run the full verification suite");
    verify_all->add_option("--nmax", nmax, "trim each check to n <= nmax");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fillings->parsed()) return cmd_fillings(cfg);
        if (basis->parsed()) return cmd_basis(cfg);
        if (tree->parsed()) return cmd_tree(cfg);
        if (certify->parsed()) return cmd_certify(cfg, order, blocks);
        if (hilbert->parsed()) return cmd_hilbert(cfg, as_json);
        if (jtable->parsed()) return cmd_jtable(amax, cfg.enum_cap);
        if (oracle->parsed()) return cmd_oracle(cfg, compare, allow_n6);
        if (verify_all->parsed()) return cmd_verify_all(nmax);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
