#include "gaussrig/cli.hpp"

#include "gaussrig/derivation.hpp"
#include "gaussrig/motzkin.hpp"
#include "gaussrig/quotient.hpp"
#include "gaussrig/rewrite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace gaussrig {

namespace {

int emit_derivation(const Derivation& d, const std::string& out_file, std::ostream& out,
                    std::ostream& err) {
    const std::string text = to_json(d);
    if (out_file.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
        err << "error: cannot open '" << out_file << "' for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

int cmd_synth(const NatPoly& p, const NatPoly& q, std::size_t verify_size, std::ostream& out,
              std::ostream& err) {
    Bijection b = compile(derive(p, q));

    const auto source_values = enumerate_values(b.source(), verify_size);
    std::set<std::string> images;
    for (const TypeValue& v : source_values) {
        TypeValue w = b.forward(v);
        if (w.type_of != b.target()) {
            err << "error: forward image of " << v.str() << " is not a value of the target\n";
            return 1;
        }
        if (!(b.backward(w) == v)) {
            err << "error: round trip failed on " << v.str() << "\n";
            return 1;
        }
        images.insert(w.str());
    }
    if (images.size() != source_values.size()) {
        err << "error: forward map is not injective on the verified set\n";
        return 1;
    }
    const auto target_values = enumerate_values(b.target(), verify_size);
    for (const TypeValue& w : target_values) {
        TypeValue v = b.backward(w);
        if (v.type_of != b.source() || !(b.forward(v) == w)) {
            err << "error: reverse round trip failed on " << w.str() << "\n";
            return 1;
        }
    }
    out << "derivation length: " << b.derivation().length() << "\n";
    out << "forward values checked: " << source_values.size() << "\n";
    out << "backward values checked: " << target_values.size() << "\n";
    out << "ok\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic, rewriting and certified bijections for the rig "
                 "N[x]/(x ~ 1+x+x^2)",
                 "gaussrig"};
    app.require_subcommand(1);

    std::string p_text, q_text, file, out_file;
    bool trace = false, count_only = false;
    std::size_t bfs_budget = 0, verify_size = 0, enum_size = 0, max_degree = 0;

    CLI::App* decide = app.add_subcommand("decide", "Decide equality in the quotient rig");
    decide->add_option("p", p_text, "first polynomial")->required();
    decide->add_option("q", q_text, "second polynomial")->required();

    CLI::App* normalize_cmd =
        app.add_subcommand("normalize", "Rewrite a polynomial to its normal form");
    normalize_cmd->add_option("p", p_text, "polynomial")->required();
    normalize_cmd->add_flag("--trace", trace,
                            "print every single rule application (exponentially many steps "
                            "on large inputs)");

    CLI::App* canon_cmd =
        app.add_subcommand("canon", "Print the canonical semantic value of a polynomial");
    canon_cmd->add_option("p", p_text, "polynomial")->required();

    CLI::App* derive_cmd =
        app.add_subcommand("derive", "Produce a machine-checkable unfold/fold derivation");
    derive_cmd->add_option("p", p_text, "start polynomial")->required();
    derive_cmd->add_option("q", q_text, "end polynomial")->required();
    CLI::Option* bfs_opt = derive_cmd->add_option(
        "--bfs", bfs_budget, "search for a shortest derivation within this step budget");
    derive_cmd->add_option("-o,--output", out_file, "write the derivation file here");

    CLI::App* check_cmd = app.add_subcommand("check", "Validate a derivation file");
    check_cmd->add_option("file", file, "derivation file")->required();

    CLI::App* synth_cmd = app.add_subcommand(
        "synth", "Compile a derivation into a bijection and round-trip verify it");
    synth_cmd->add_option("p", p_text, "source polynomial")->required();
    synth_cmd->add_option("q", q_text, "target polynomial")->required();
    synth_cmd->add_option("--verify-size", verify_size,
                          "verify on all values of total tree size up to this bound")
        ->required();

    CLI::App* enum_cmd = app.add_subcommand("enum-motzkin", "Enumerate Motzkin trees by size");
    enum_cmd->add_option("n", enum_size, "maximum size")->required();
    enum_cmd->add_flag("--count-only", count_only, "print one count per size instead");

    CLI::App* cp_cmd = app.add_subcommand("critical-pairs",
                                          "Enumerate rule overlaps and check joinability");
    cp_cmd->add_option("--max-degree", max_degree, "peak degree bound")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (decide->parsed()) {
            const bool equal = decide_equal(parse_nat_poly(p_text), parse_nat_poly(q_text));
            out << (equal ? "equal" : "not-equal") << "\n";
            return equal ? 0 : 1;
        }

        if (normalize_cmd->parsed()) {
            const NatPoly p = parse_nat_poly(p_text);
            NatPoly nf;
            if (trace) {
                nf = normalize_traced(p, [&](const NatPoly& before, const RuleInstance& inst,
                                             const NatPoly& after) {
                    out << trace_line(before, inst, after) << "\n";
                });
            } else {
                nf = normalize(p);
            }
            out << to_string(nf) << "\n";
            return 0;
        }

        if (canon_cmd->parsed()) {
            out << canon(parse_nat_poly(p_text)).str() << "\n";
            return 0;
        }

        if (derive_cmd->parsed()) {
            const NatPoly p = parse_nat_poly(p_text);
            const NatPoly q = parse_nat_poly(q_text);
            if (bfs_opt->count() > 0) {
                auto d = derive_bfs(p, q, bfs_budget);
                if (!d) {
                    if (!decide_equal(p, q)) {
                        err << "not-equal: the polynomials differ in the quotient\n";
                    } else {
                        err << "not-found: no derivation within " << bfs_budget << " steps\n";
                    }
                    return 1;
                }
                return emit_derivation(*d, out_file, out, err);
            }
            try {
                return emit_derivation(derive(p, q), out_file, out, err);
            } catch (const NotEquivalentError& e) {
                err << "not-equal: " << e.what() << "\n";
                return 1;
            }
        }

        if (check_cmd->parsed()) {
            std::ifstream f(file, std::ios::binary);
            if (!f) {
                err << "error: cannot read '" << file << "'\n";
                return 2;
            }
            std::stringstream buffer;
            buffer << f.rdbuf();
            const Derivation d = derivation_from_json(buffer.str());
            const CheckResult r = check(d);
            if (r.ok) {
                out << "ok\n";
                return 0;
            }
            out << "failed at step " << r.failed_step << ": " << r.reason << "\n";
            return 1;
        }

        if (synth_cmd->parsed()) {
            const NatPoly p = parse_nat_poly(p_text);
            const NatPoly q = parse_nat_poly(q_text);
            try {
                return cmd_synth(p, q, verify_size, out, err);
            } catch (const NotEquivalentError& e) {
                err << "not-equal: " << e.what() << "\n";
                return 1;
            }
        }

        if (enum_cmd->parsed()) {
            const auto levels = enumerate_by_size(enum_size);
            for (std::size_t s = 0; s < levels.size(); ++s) {
                if (count_only) {
                    out << s << " " << levels[s].size() << "\n";
                } else {
                    for (const MotzkinTree& t : levels[s]) out << t.str() << "\n";
                }
            }
            return 0;
        }

        if (cp_cmd->parsed()) {
            const auto pairs = critical_pairs(max_degree);
            std::size_t bad = 0;
            for (const CriticalPair& cp : pairs) {
                if (!cp.joinable) ++bad;
                out << rule_name(cp.left.rule) << "@m=" << cp.left.scale << " / "
                    << rule_name(cp.right.rule) << "@m=" << cp.right.scale << " : peak "
                    << to_string(cp.peak) << " : "
                    << (cp.joinable ? "joinable" : "NOT joinable") << "\n";
            }
            if (bad == 0) {
                out << pairs.size() << " overlaps, all joinable\n";
                return 0;
            }
            out << pairs.size() << " overlaps, " << bad << " not joinable\n";
            return 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace gaussrig
