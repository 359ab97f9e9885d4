#include "qhopf/enumerate.hpp"
#include "qhopf/expr.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/pool.hpp"
#include "qhopf/randelem.hpp"
#include "qhopf/render.hpp"
#include "qhopf/rep.hpp"
#include "qhopf/symalg.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qhopf;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
    std::string quiver_file;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("-q,--quiver", c.quiver_file, "quiver description file")->required();
    cmd->add_flag("--json", c.json, "emit JSON instead of plain text");
}

struct CheckOpts {
    CommonOpts common;
    std::string suite;
    std::uint64_t seed = 1;
    int trials = 25;
    int max_edges = 4;
    std::string dims_text;
};

DimVector dims_or_ones(const std::string& text, const Quiver& q) {
    if (!text.empty()) return parse_dims(text, q);
    DimVector l;
    l.dims.assign(q.vertices.size(), 1);
    return l;
}

Necklace random_word_necklace(SplitMix64& rng, const DoubleQuiver& dq, int max_edges) {
    // Idempotents are legal inputs for every necklace-level check, but the
    // interesting cases have letters; draw until one shows up, keeping the
    // stream deterministic.
    for (int i = 0; i < 8; ++i) {
        Necklace n = random_necklace(rng, dq, max_edges);
        if (!n.is_idempotent()) return n;
    }
    return random_necklace(rng, dq, max_edges);
}

int run_check(const CheckOpts& opt) {
    DoubleQuiver dq = build_double(parse_quiver_file(opt.common.quiver_file));
    DimVector l = dims_or_ones(opt.dims_text, dq.base);
    SplitMix64 rng(opt.seed);

    for (int t = 0; t < opt.trials; ++t) {
        CheckResult res;
        if (opt.suite == "assoc") {
            SymLElement p = random_element(rng, dq, opt.max_edges);
            SymLElement r = random_element(rng, dq, opt.max_edges);
            SymLElement s = random_element(rng, dq, opt.max_edges);
            res = check_associativity(p, r, s, dq);
        } else if (opt.suite == "coassoc") {
            res = check_coassociativity(random_element(rng, dq, opt.max_edges), dq);
        } else if (opt.suite == "bialgebra") {
            SymLElement p = random_element(rng, dq, opt.max_edges);
            SymLElement r = random_element(rng, dq, opt.max_edges);
            res = check_bialgebra(p, r, dq);
        } else if (opt.suite == "antipode") {
            res = check_antipode(random_element(rng, dq, opt.max_edges), dq);
        } else if (opt.suite == "counit") {
            res = check_counit(random_element(rng, dq, opt.max_edges), dq);
        } else if (opt.suite == "classical") {
            Necklace a = random_word_necklace(rng, dq, opt.max_edges);
            Necklace b = random_word_necklace(rng, dq, opt.max_edges);
            res = check_classical_limits(a, b, dq);
        } else if (opt.suite == "liebialg") {
            Necklace a = random_word_necklace(rng, dq, opt.max_edges);
            Necklace b = random_word_necklace(rng, dq, opt.max_edges);
            Necklace c = random_word_necklace(rng, dq, opt.max_edges);
            SymLElement defect = jacobi_defect(a, b, c, dq);
            if (!defect.is_zero())
                res = CheckResult::fail("Jacobi defect " + to_string(defect, dq));
            if (res.ok) {
                Tensor3Element cj = cojacobi_defect(a, dq);
                if (!cj.is_zero()) res = CheckResult::fail("co-Jacobi defect " + to_string(cj, dq));
            }
            if (res.ok) {
                TensorElement cd = cocycle_defect(a, b, dq);
                if (!cd.is_zero()) res = CheckResult::fail("cocycle defect " + to_string(cd, dq));
            }
        } else if (opt.suite == "diagram") {
            SymLElement p = random_element(rng, dq, opt.max_edges);
            SymLElement r = random_element(rng, dq, opt.max_edges);
            res = check_diagram(p, r, l, dq);
        } else if (opt.suite == "transport") {
            res = check_transport(random_element(rng, dq, std::min(opt.max_edges, 6)), l, dq);
        } else if (opt.suite == "poisson") {
            Necklace a = random_word_necklace(rng, dq, opt.max_edges);
            Necklace b = random_word_necklace(rng, dq, opt.max_edges);
            res = check_poisson_hom(a, b, l, dq);
        } else {
            throw Error("unknown check suite '" + opt.suite + "'");
        }
        if (!res.ok) {
            std::cout << "FAIL " << opt.suite << " (trial " << t + 1 << "): " << res.detail
                      << "\n";
            return kExitCounterexample;
        }
    }
    std::cout << "ok: " << opt.suite << ": " << opt.trials << " trials passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact necklace-algebra calculator for doubled quivers"};
    app.require_subcommand(1);

    CommonOpts star_opts, coprod_opts, antipode_opts, counit_opts, bracket_opts, cobracket_opts,
        phiw_opts, trace_opts, rho_opts, inj_opts;
    std::string expr_a, expr_b, dims_text;
    int inj_degree = 2;
    bool inj_with_idem = false;

    auto* cmd_star = app.add_subcommand("star", "star product of two elements");
    add_common(cmd_star, star_opts);
    cmd_star->add_option("P", expr_a)->required();
    cmd_star->add_option("R", expr_b)->required();

    auto* cmd_coprod = app.add_subcommand("coprod", "coproduct of an element");
    add_common(cmd_coprod, coprod_opts);
    cmd_coprod->add_option("P", expr_a)->required();

    auto* cmd_antipode = app.add_subcommand("antipode", "antipode of an element");
    add_common(cmd_antipode, antipode_opts);
    cmd_antipode->add_option("P", expr_a)->required();

    auto* cmd_counit = app.add_subcommand("counit", "counit of an element");
    add_common(cmd_counit, counit_opts);
    cmd_counit->add_option("P", expr_a)->required();

    auto* cmd_bracket = app.add_subcommand("bracket", "necklace Lie bracket");
    add_common(cmd_bracket, bracket_opts);
    cmd_bracket->add_option("F", expr_a)->required();
    cmd_bracket->add_option("G", expr_b)->required();

    auto* cmd_cobracket = app.add_subcommand("cobracket", "necklace Lie cobracket");
    add_common(cmd_cobracket, cobracket_opts);
    cmd_cobracket->add_option("F", expr_a)->required();

    auto* cmd_phiw = app.add_subcommand("phiw", "height symmetrization of an element");
    add_common(cmd_phiw, phiw_opts);
    cmd_phiw->add_option("P", expr_a)->required();

    auto* cmd_trace = app.add_subcommand("trace", "matrix-entry trace of an element");
    add_common(cmd_trace, trace_opts);
    cmd_trace->add_option("--dims", dims_text, "matrix size per vertex, comma separated")
        ->required();
    cmd_trace->add_option("P", expr_a)->required();

    auto* cmd_rho = app.add_subcommand("rho", "quantized trace (rho after phiw) of an element");
    add_common(cmd_rho, rho_opts);
    cmd_rho->add_option("--dims", dims_text, "matrix size per vertex, comma separated")
        ->required();
    cmd_rho->add_option("P", expr_a)->required();

    CheckOpts check_opts;
    auto* cmd_check = app.add_subcommand("check", "verify an identity suite on random inputs");
    add_common(cmd_check, check_opts.common);
    cmd_check
        ->add_option("suite", check_opts.suite,
                     "assoc|coassoc|bialgebra|antipode|counit|classical|liebialg|diagram|"
                     "transport|poisson")
        ->required();
    cmd_check->add_option("--trials", check_opts.trials, "number of random instances");
    cmd_check->add_option("--seed", check_opts.seed, "random seed");
    cmd_check->add_option("--max-edges", check_opts.max_edges, "edge budget per random element");
    cmd_check->add_option("--dims", check_opts.dims_text,
                          "matrix sizes for the representation-side suites");

    auto* cmd_inj = app.add_subcommand("injectivity", "rank of the trace map on low degrees");
    add_common(cmd_inj, inj_opts);
    cmd_inj->add_option("--dims", dims_text, "matrix size per vertex, comma separated")
        ->required();
    cmd_inj->add_option("--degree", inj_degree, "largest monomial degree included");
    cmd_inj->add_flag("--with-idempotents", inj_with_idem,
                      "include monomials containing vertex idempotents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    const int workers = env_worker_count();
    try {
        if (cmd_star->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(star_opts.quiver_file));
            SymLElement out = star(parse_element(expr_a, dq), parse_element(expr_b, dq), dq,
                                   workers);
            std::cout << (star_opts.json ? json_string(out, dq) : to_string(out, dq)) << "\n";
        } else if (cmd_coprod->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(coprod_opts.quiver_file));
            TensorElement out = coproduct(parse_element(expr_a, dq), dq, workers);
            std::cout << (coprod_opts.json ? json_string(out, dq) : to_string(out, dq)) << "\n";
        } else if (cmd_antipode->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(antipode_opts.quiver_file));
            SymLElement out = antipode(parse_element(expr_a, dq));
            std::cout << (antipode_opts.json ? json_string(out, dq) : to_string(out, dq)) << "\n";
        } else if (cmd_counit->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(counit_opts.quiver_file));
            HPoly out = counit(parse_element(expr_a, dq));
            if (counit_opts.json) {
                std::string coeffs = "[";
                for (std::size_t i = 0; i < out.terms().size(); ++i) {
                    if (i) coeffs += ",";
                    coeffs += "[" + std::to_string(out.terms()[i].first) + ",\"" +
                              rat_str(out.terms()[i].second) + "\"]";
                }
                std::cout << "{\"coeff\":" << coeffs << "]}" << "\n";
            } else {
                std::cout << to_string(out) << "\n";
            }
        } else if (cmd_bracket->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(bracket_opts.quiver_file));
            SymLElement out =
                bracket(parse_element(expr_a, dq), parse_element(expr_b, dq), dq);
            std::cout << (bracket_opts.json ? json_string(out, dq) : to_string(out, dq)) << "\n";
        } else if (cmd_cobracket->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(cobracket_opts.quiver_file));
            TensorElement out = cobracket(parse_element(expr_a, dq), dq);
            std::cout << (cobracket_opts.json ? json_string(out, dq) : to_string(out, dq))
                      << "\n";
        } else if (cmd_phiw->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(phiw_opts.quiver_file));
            HeightedElement out = phi_w(parse_element(expr_a, dq), dq);
            std::cout << (phiw_opts.json ? json_string(out, dq) : to_string(out, dq)) << "\n";
        } else if (cmd_trace->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(trace_opts.quiver_file));
            DimVector l = parse_dims(dims_text, dq.base);
            RepPoly out = trace_rep(parse_element(expr_a, dq), l, dq);
            std::cout << (trace_opts.json ? json_string(out, dq) : to_string(out, dq)) << "\n";
        } else if (cmd_rho->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(rho_opts.quiver_file));
            DimVector l = parse_dims(dims_text, dq.base);
            DiffOp out = rho(phi_w(parse_element(expr_a, dq), dq), l, dq);
            std::cout << (rho_opts.json ? json_string(out, dq) : to_string(out, dq)) << "\n";
        } else if (cmd_check->parsed()) {
            return run_check(check_opts);
        } else if (cmd_inj->parsed()) {
            DoubleQuiver dq = build_double(parse_quiver_file(inj_opts.quiver_file));
            DimVector l = parse_dims(dims_text, dq.base);
            RankReport rep = check_injectivity(inj_degree, l, dq, inj_with_idem);
            std::cout << "rank " << rep.rank << " of " << rep.count << " monomials\n";
            if (!rep.independent) {
                std::cout << "dependent: " << rep.dependency << "\n";
                return kExitCounterexample;
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
