#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "motivic/dual.hpp"
#include "motivic/error.hpp"
#include "motivic/expr.hpp"
#include "motivic/matrix.hpp"
#include "motivic/product.hpp"
#include "motivic/table.hpp"
#include "motivic/verify.hpp"

namespace {

using namespace motivic;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};
const std::map<std::string, EvalProfile> kProfiles{{"generic", EvalProfile::generic},
                                                   {"rho-zero", EvalProfile::rho_zero},
                                                   {"classical", EvalProfile::classical}};

// bilinear product where every basis-pair product is taken from the pairing
// oracle instead of the closed forms
OpElement element_mul_oracle(const OpElement& x, const OpElement& y) {
    OpElement out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            for (const auto& [c, d] : cy.monomials()) {
                OpElement part = product_oracle(bx.e(), bx.r(), c, by.e(), by.r());
                part.scale(coeff_mul(cx, Coeff::monomial(0, d)));
                out += part;
            }
        }
    }
    return out;
}

OpElement eval_via_oracle(const Expr& expr) {
    OpElement out;
    for (const Term& term : expr.terms) {
        bool have = false;
        OpElement elem;
        Coeff pending = Coeff::one();
        for (const Factor& f : term.factors) {
            switch (f.kind) {
                case Factor::Kind::tau:
                    pending = coeff_mul(pending, Coeff::monomial(f.exp, 0));
                    break;
                case Factor::Kind::rho:
                    pending = coeff_mul(pending, Coeff::monomial(0, f.exp));
                    break;
                case Factor::Kind::one:
                    break;
                case Factor::Kind::zero:
                    pending = Coeff::zero();
                    break;
                case Factor::Kind::basis: {
                    OpElement rhs = OpElement::term(OpBasis(f.q, f.p), pending);
                    elem = have ? element_mul_oracle(elem, rhs) : rhs;
                    have = true;
                    pending = Coeff::one();
                    break;
                }
            }
        }
        if (!have)
            out += OpElement::term(OpBasis{}, pending);
        else if (pending.is_one())
            out += elem;
        else
            out += element_mul_oracle(elem, OpElement::term(OpBasis{}, pending));
    }
    return out;
}

int run_repl(Format format, EvalProfile profile) {
    std::string line;
    std::cerr << "motivic Milnor-basis calculator; :quit to exit, :profile and :format to "
                 "switch modes\n";
    for (;;) {
        std::cerr << "motivic> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == ':') {
            std::istringstream ss(line.substr(first + 1));
            std::string cmd, arg;
            ss >> cmd >> arg;
            if (cmd == "quit" || cmd == "q") break;
            if (cmd == "profile") {
                if (arg.empty()) {
                    for (const auto& [name, p] : kProfiles)
                        if (p == profile) std::cout << name << "\n";
                } else if (auto it = kProfiles.find(arg); it != kProfiles.end()) {
                    profile = it->second;
                } else {
                    std::cerr << "unknown profile '" << arg
                              << "' (generic, rho-zero, classical)\n";
                }
                continue;
            }
            if (cmd == "format") {
                if (arg.empty()) {
                    for (const auto& [name, f] : kFormats)
                        if (f == format) std::cout << name << "\n";
                } else if (auto it = kFormats.find(arg); it != kFormats.end()) {
                    format = it->second;
                } else {
                    std::cerr << "unknown format '" << arg << "' (text, json, latex)\n";
                }
                continue;
            }
            std::cerr << "unknown directive :" << cmd << " (:quit, :profile, :format)\n";
            continue;
        }
        try {
            OpElement value = eval_text(line);
            if (profile != EvalProfile::generic) value = eval_element(value, profile);
            std::cout << print(value, format) << "\n";
        } catch (const SyntaxError& e) {
            std::cerr << "syntax error at byte " << e.offset << ": " << e.what()
                      << " (expected: " << e.expected << ")\n";
        } catch (const InternalError& e) {
            std::cerr << "internal error: " << e.what() << "\n";
            return kExitInternal;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exact products in the mod-2 motivic Steenrod algebra, in the Milnor basis dual to "
        "the conjugated generators.\n"
        "Elements are sums of products of factors: tau[^k], rho[^k], 0, 1, Q(e0,e1,...), "
        "Q i (the i-th exterior generator), and P(r1,r2,...).\n"
        "Q-lists are indexed from e0; P-lists are indexed from r1 (there is no index-0 entry "
        "in a P-list). A Q-part directly followed by a P-part is one basis element Q(E)P(R); "
        "adjacency or '*' between basis factors multiplies; a tau-power between two basis "
        "factors is the central-coefficient insertion, a leading tau-power a left "
        "coefficient."};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string profile_name = "generic";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"text", "json", "latex"}))
            ->capture_default_str();
    };
    auto add_profile = [&](CLI::App* cmd) {
        cmd->add_option("--profile", profile_name, "coefficient specialization")
            ->check(CLI::IsMember({"generic", "rho-zero", "classical"}))
            ->capture_default_str();
    };

    std::string expr_text;
    bool with_oracle = false;
    CLI::App* mul = app.add_subcommand("mul", "evaluate an element expression and print it");
    mul->add_option("expr", expr_text, "element expression, e.g. \"Q(1) * tau * Q(1)\"")
        ->required();
    add_format(mul);
    add_profile(mul);
    mul->add_flag("--oracle", with_oracle,
                  "also evaluate through the pairing oracle and fail on any difference");

    std::string seq_text;
    bool show_tree = false;
    CLI::App* simplify = app.add_subcommand(
        "simplify", "rewrite tau^S into the basis, e.g. simplify \"2,1\" for tau0^2 tau1");
    simplify->add_option("tau-seq", seq_text, "exponent sequence of the tau word, from index 0")
        ->required();
    add_format(simplify);
    simplify->add_flag("--tree", show_tree,
                       "print the rewrite tree's leaf multiset (E|R xCOUNT per line) instead");

    std::string basis_text;
    bool with_brute = false;
    CLI::App* coproduct = app.add_subcommand(
        "coproduct", "coproduct of a dual basis monomial named by its Q/P form");
    coproduct->add_option("basis", basis_text, "basis element, e.g. \"Q(0,1)P(2)\"")->required();
    add_format(coproduct);
    coproduct->add_flag("--brute", with_brute,
                        "also compute by folding generator coproducts and fail on difference");

    std::int64_t max_degree = 12;
    std::string out_path;
    CLI::App* constants =
        app.add_subcommand("constants", "tabulate all basis products up to a degree");
    constants->add_option("--max-degree", max_degree, "largest factor degree")->required();
    constants->add_option("--out", out_path, "output file")->required();

    std::string check_path;
    CLI::App* check = app.add_subcommand("check", "reload a constants table and spot-check it");
    check->add_option("file", check_path, "table file written by constants")->required();

    std::string suite = "all";
    std::int64_t verify_degree = 12;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"all", "tree", "coproduct", "product", "axioms"}))
        ->capture_default_str();
    verify->add_option("--max-degree", verify_degree, "degree bound for the scanned ranges")
        ->capture_default_str();

    CLI::App* repl = app.add_subcommand("repl", "interactive session over the same grammar");
    add_format(repl);
    add_profile(repl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Format format = kFormats.at(format_name);
    EvalProfile profile = kProfiles.at(profile_name);

    if (mul->parsed()) {
        Expr ast = parse(expr_text);
        OpElement value = eval(ast);
        if (with_oracle) {
            OpElement via_oracle = eval_via_oracle(ast);
            if (value != via_oracle) {
                std::cerr << "oracle mismatch:\n  closed: " << print(value, Format::text)
                          << "\n  oracle: " << print(via_oracle, Format::text) << "\n";
                return kExitVerification;
            }
            std::cerr << "oracle agrees\n";
        }
        if (profile != EvalProfile::generic) value = eval_element(value, profile);
        std::cout << print(value, format) << "\n";
        return kExitOk;
    }

    if (simplify->parsed()) {
        Seq s = parse_seq(seq_text);
        if (show_tree) {
            std::cout << print_tree_leaves(s);
            return kExitOk;
        }
        std::cout << print(simplify_tau(s), format) << "\n";
        return kExitOk;
    }

    if (coproduct->parsed()) {
        OpBasis b = parse_basis(basis_text);
        TensorElement closed = coproduct_mono_closed(b.e(), b.r());
        if (with_brute) {
            TensorElement brute = coproduct_mono_bruteforce(DualMono(b.e(), b.r()));
            if (closed != brute) {
                std::cerr << "bruteforce mismatch:\n  closed: " << print(closed, Format::text)
                          << "\n  brute:  " << print(brute, Format::text) << "\n";
                return kExitVerification;
            }
            std::cerr << "bruteforce agrees\n";
        }
        std::cout << print(closed, format) << "\n";
        return kExitOk;
    }

    if (constants->parsed()) {
        ConstantsTable table = constants_table(max_degree);
        save_table(table, out_path);
        std::cerr << "wrote " << table.entries.size() << " products (factor degree <= "
                  << max_degree << ") to " << out_path << "\n";
        return kExitOk;
    }

    if (check->parsed()) {
        try {
            ConstantsTable table = load_table(check_path);
            std::cout << "ok: " << table.entries.size() << " entries, max degree "
                      << table.max_p << "\n";
            return kExitOk;
        } catch (const VersionMismatch& e) {
            std::cerr << "version mismatch: " << e.what() << "\n";
            return kExitVerification;
        } catch (const CorruptTable& e) {
            std::cerr << "corrupt table: " << e.what() << "\n";
            return kExitVerification;
        }
    }

    if (verify->parsed()) {
        bool all_passed = true;
        for (const SuiteResult& r : run_suites(suite, verify_degree)) {
            std::cout << "suite " << r.suite << ": " << (r.passed ? "PASS" : "FAIL") << " ("
                      << r.checks << " checks)\n";
            if (!r.passed) {
                std::cout << "  counterexample: " << r.counterexample << "\n";
                all_passed = false;
            }
        }
        return all_passed ? kExitOk : kExitVerification;
    }

    if (repl->parsed()) return run_repl(format, profile);

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("MOTIVIC_SEQ_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(cap, &end, 10);
        if (end == cap || *end != '\0' || v == 0) {
            std::cerr << "MOTIVIC_SEQ_CAP must be a positive integer, got '" << cap << "'\n";
            return kExitUsage;
        }
        motivic::set_seq_cap(std::size_t(v));
    }
    try {
        return run(argc, argv);
    } catch (const motivic::SyntaxError& e) {
        std::cerr << "syntax error at byte " << e.offset << ": " << e.what()
                  << " (expected: " << e.expected << ")\n";
        return kExitUsage;
    } catch (const motivic::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const motivic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
