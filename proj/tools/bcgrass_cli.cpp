// bcgrass command line: exact Bott-Chern form computation, symmetric-function
// algebra, box (Schubert) products, the Arakelov Chow ring star product, and
// the verification sweeps. Output is deterministic: identical invocations
// produce byte-identical output. Exit codes: 0 success / all checks hold,
// 1 at least one verification case failed, 2 usage error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "bcgrass/arakelov.hpp"
#include "bcgrass/bcform.hpp"
#include "bcgrass/harmonic.hpp"
#include "bcgrass/json_io.hpp"
#include "bcgrass/symfunc.hpp"

namespace {

using namespace bcgrass;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// class-expression grammar: p[3,1] | s[2,1] | e[2] | h[1,1] | c3 | ch3
// Partitions are validated strictly: "s[1,2]" is rejected, not sorted.
// ---------------------------------------------------------------------------

Partition parse_partition_body(const std::string& text, const std::string& ctx) {
    // text is the content between brackets, possibly empty
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string piece = text.substr(pos, next - pos);
        if (piece.empty()) throw UsageError(ctx + ": empty partition entry");
        for (char ch : piece)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw UsageError(ctx + ": partition entries must be positive integers");
        parts.push_back(std::stoi(piece));
        pos = next + (next < text.size() ? 1 : 0);
    }
    auto la = Partition::try_make(parts);
    if (!la) throw UsageError(ctx + ": not a weakly decreasing sequence of positive integers");
    return *la;
}

struct ClassExpr {
    SymF f;
    ClassExpr() : f(Basis::p) {}
};

ClassExpr parse_class_expr(const std::string& text) {
    ClassExpr out;
    if (text.empty()) throw UsageError("empty class expression");

    auto bracketed = [&](size_t letter_len) {
        if (text.size() < letter_len + 2 || text[letter_len] != '[' || text.back() != ']')
            throw UsageError("malformed class expression '" + text + "'");
        return text.substr(letter_len + 1, text.size() - letter_len - 2);
    };

    if (text.rfind("ch", 0) == 0 && text.size() > 2 &&
        std::isdigit(static_cast<unsigned char>(text[2]))) {
        // chK = p_K / K!
        const int k = std::stoi(text.substr(2));
        if (k < 1) throw UsageError("chK requires K >= 1");
        out.f = SymF::generator(Basis::p, Partition{k}, Rat(1) / Rat(factorial(static_cast<unsigned long>(k))));
        return out;
    }
    if (text[0] == 'c' && text.size() > 1 && std::isdigit(static_cast<unsigned char>(text[1]))) {
        // cK = e_K
        const int k = std::stoi(text.substr(1));
        if (k < 1) throw UsageError("cK requires K >= 1");
        out.f = SymF::generator(Basis::e, Partition{k});
        return out;
    }
    const auto basis = basis_from_letter(text[0]);
    if (!basis) throw UsageError("unknown basis letter in '" + text + "'");
    const Partition la = parse_partition_body(bracketed(1), text);
    out.f = SymF::generator(*basis, la);
    return out;
}

ArakelovElem parse_arakelov_expr(const std::string& text, int r, int s) {
    if (text.rfind("sigma[", 0) == 0 && text.back() == ']') {
        const Partition la = parse_partition_body(text.substr(6, text.size() - 7), text);
        if (!la.fits_box(r, s)) throw UsageError(text + ": partition outside the r x s box");
        return ArakelovElem::sigma(la, r, s);
    }
    if (text.rfind("a[", 0) == 0 && text.back() == ']') {
        const Partition la = parse_partition_body(text.substr(2, text.size() - 3), text);
        if (!la.fits_box(r, s)) throw UsageError(text + ": partition outside the r x s box");
        return ArakelovElem::arch_class(SymF::generator(Basis::s, la), r, s);
    }
    throw UsageError("expected sigma[..] or a[..], got '" + text + "'");
}

std::pair<int, int> parse_ranks(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--g expects R,S");
    try {
        const int r = std::stoi(text.substr(0, comma));
        const int s = std::stoi(text.substr(comma + 1));
        if (r < 1 || s < 1) throw UsageError("--g ranks must be positive");
        return {r, s};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("--g expects R,S with integer ranks");
    }
}

// ---------------------------------------------------------------------------
// text rendering
// ---------------------------------------------------------------------------

std::string symf_str(const SymF& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [la, c] : f.terms()) {
        Rat v = c;
        if (first) {
            first = false;
        } else if (v.sign() < 0) {
            out += " - ";
            v = -v;
        } else {
            out += " + ";
        }
        std::string symbol;
        if (!la.empty()) {
            symbol += basis_letter(f.basis());
            symbol += '[';
            for (size_t i = 0; i < la.parts().size(); ++i) {
                if (i) symbol += ',';
                symbol += std::to_string(la.parts()[i]);
            }
            symbol += ']';
        }
        if (symbol.empty()) out += v.str();
        else if (v == Rat(1)) out += symbol;
        else out += v.str() + " * " + symbol;
    }
    return out;
}

// ---------------------------------------------------------------------------
// verification sweeps
// ---------------------------------------------------------------------------

struct SuiteRunner {
    bool json = false;
    bool all_hold = true;

    void emit(const IdentityReport& rep) {
        all_hold = all_hold && rep.holds;
        if (json) {
            std::cout << to_json_string(rep) << "\n";
            return;
        }
        std::cout << (rep.holds ? "[ok]  " : "[FAIL] ") << rep.identity;
        for (const auto& [name, value] : rep.params) std::cout << " " << name << "=" << value;
        std::cout << " lhs=" << rep.lhs.str() << " rhs=" << rep.rhs.str() << "\n";
    }
};

void run_identities(SuiteRunner& out, int max_n) {
    for (int n = 0; n <= max_n; ++n)
        for (int p = 0; p <= max_n; ++p)
            for (int q = 0; q <= max_n; ++q)
                for (int s = 0; s <= max_n; ++s) {
                    out.emit(verify_identity_sum(n, p, q, s));
                    out.emit(verify_identity_binomial(n, p, q, s));
                }
    for (int n = 1; n <= 30; ++n)
        for (int s = 1; s <= n; ++s) out.emit(verify_identity_trinomial(n, s));
    out.emit(harmonic_gf_check(50));
    for (int k = 1; k <= 10; ++k) out.emit(verify_chern_inverse_power(k));
}

IdentityReport oracle_case(const Partition& la, int case_index, int n, int r, Mode mode) {
    const ClassSpec phi(SymF::generator(Basis::p, la), n, r);
    const BCForm oracle = deformation_oracle(phi, mode);
    const BCForm closed = (mode == Mode::flat) ? bc_flat_power(la, n, r)
                                               : bc_projflat_multi(la, n, r);
    return IdentityReport::make(
        mode == Mode::flat ? "oracle-flat" : "oracle-projflat",
        {{"w", la.weight()}, {"i", case_index}, {"r", r}, {"s", n - r}},
        (oracle - closed).coefficient_mass(), Rat(0));
}

void run_oracle(SuiteRunner& out, int max_weight, int max_rank) {
    for (int w = 1; w <= max_weight; ++w) {
        const auto partitions = partitions_of(w);
        for (int r = 1; r <= max_rank; ++r)
            for (int s = 1; s <= max_rank; ++s)
                for (size_t i = 0; i < partitions.size(); ++i) {
                    out.emit(oracle_case(partitions[i], static_cast<int>(i), r + s, r, Mode::flat));
                    out.emit(oracle_case(partitions[i], static_cast<int>(i), r + s, r, Mode::projflat));
                }
    }
}

ArakelovElem random_homogeneous(std::mt19937& rng, int r, int s) {
    std::uniform_int_distribution<int> codim_dist(1, r * s);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    const int d = codim_dist(rng);
    ArakelovElem x(r, s);
    for (const auto& la : partitions_of(d, s, r)) x.add_geom(la, Rat(coeff_dist(rng)));
    if (d >= 1)
        for (const auto& la : partitions_of(d - 1, s, r)) x.add_arch(la, Rat(coeff_dist(rng)));
    return x;
}

void run_ring(SuiteRunner& out, int max_rank, int trials) {
    const std::vector<std::pair<int, int>> shapes = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
    for (const auto& [r, s] : shapes) {
        if (std::max(r, s) > max_rank) continue;
        std::mt19937 rng(0xb0c5u + static_cast<unsigned>(16 * r + s));
        for (int t = 0; t < trials; ++t) {
            const ArakelovElem x = random_homogeneous(rng, r, s);
            const ArakelovElem y = random_homogeneous(rng, r, s);
            const ArakelovElem z = random_homogeneous(rng, r, s);
            Rat mass = (star(x, y) - star(y, x)).coefficient_mass();
            mass += (star(star(x, y), z) - star(x, star(y, z))).coefficient_mass();
            mass += (star(ArakelovElem::one(r, s), x) - x).coefficient_mass();
            out.emit(IdentityReport::make("ring-axioms", {{"r", r}, {"s", s}, {"trial", t}},
                                          mass, Rat(0)));
        }
    }
    // zeta is a ring homomorphism; products of archimedean classes vanish
    for (const auto& [r, s] : shapes) {
        if (std::max(r, s) > max_rank) continue;
        const auto box = box_partitions(r, s);
        for (size_t i = 0; i < box.size(); ++i)
            for (size_t j = 0; j < box.size(); ++j) {
                const ArakelovElem sx = ArakelovElem::sigma(box[i], r, s);
                const ArakelovElem sy = ArakelovElem::sigma(box[j], r, s);
                const SymF lhs = project(star(sx, sy), ProjPart::zeta);
                const SymF rhs = box_reduce(schur_product(box[i], box[j]), r, s);
                Rat mass = (lhs - rhs).coefficient_mass();
                const ArakelovElem ax = ArakelovElem::arch_class(SymF::generator(Basis::s, box[i]), r, s);
                const ArakelovElem ay = ArakelovElem::arch_class(SymF::generator(Basis::s, box[j]), r, s);
                mass += star(ax, ay).coefficient_mass();
                out.emit(IdentityReport::make(
                    "zeta-homomorphism",
                    {{"r", r}, {"s", s}, {"i", static_cast<long long>(i)}, {"j", static_cast<long long>(j)}},
                    mass, Rat(0)));
            }
    }
    // straightening well-definedness probe: row vs column expansion
    for (int r = 1; r <= std::min(2, max_rank); ++r)
        for (int s = 1; s <= std::min(3, max_rank == 1 ? 1 : 3); ++s)
            for (int w = 1; w <= 6; ++w) {
                const auto nus = partitions_of(w, s);
                for (size_t i = 0; i < nus.size(); ++i) {
                    if (nus[i].part(0) <= r) continue;
                    const Rat mass =
                        (eta_correction(nus[i], r, s) - eta_correction_dual(nus[i], r, s))
                            .coefficient_mass();
                    out.emit(IdentityReport::make(
                        "straightening-probe",
                        {{"r", r}, {"s", s}, {"w", w}, {"i", static_cast<long long>(i)}},
                        mass, Rat(0)));
                }
            }
    // flat power-sum relation and assembled Chern relation
    for (int r = 1; r <= std::min(3, max_rank); ++r)
        for (int s = 1; s <= std::min(3, max_rank); ++s)
            for (int k = 1; k <= r + s; ++k) out.emit(verify_power_relation(k, r, s));
}

void run_heights(SuiteRunner& out, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        ArakelovElem acc = ArakelovElem::one(1, n);
        const ArakelovElem h = ArakelovElem::sigma(Partition{1}, 1, n);
        for (int i = 0; i <= n; ++i) acc = star(acc, h);
        Rat expected_c(0);
        for (int k = 1; k <= n; ++k) expected_c += harmonic(k);
        ArakelovElem expected(1, n);
        expected.add_arch(Partition(std::vector<int>(static_cast<size_t>(n), 1)), expected_c);
        IdentityReport rep = IdentityReport::make("projective-height", {{"n", n}},
                                                  (acc - expected).coefficient_mass(), Rat(0));
        if (!out.json)
            std::cout << "projective-height n=" << n << ": c_" << n << " = " << expected_c.str()
                      << "\n";
        out.emit(rep);
    }
}

// ---------------------------------------------------------------------------
// compute subcommands
// ---------------------------------------------------------------------------

struct BcOptions {
    std::string mode = "flat";
    std::string phi;
    int n = 0;
    int r = 0;
    bool json = false;
};

int run_bc(const BcOptions& opt) {
    if (opt.r < 1 || opt.r >= opt.n) throw UsageError("bc: requires 1 <= r < n");
    if (opt.mode != "flat" && opt.mode != "projflat")
        throw UsageError("bc: --mode must be flat or projflat");
    const ClassExpr expr = parse_class_expr(opt.phi);
    const ClassSpec phi(expr.f, opt.n, opt.r);
    const BCForm result = (opt.mode == "flat") ? bc_flat_general(phi) : bc_projflat_general(phi);
    std::cout << (opt.json ? to_json_string(result) : result.str()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bott-Chern forms and arithmetic Schubert calculus"};
    app.require_subcommand(1);

    // bc
    BcOptions bc_opt;
    auto* bc_cmd = app.add_subcommand("bc", "Bott-Chern form of a characteristic class");
    bc_cmd->add_option("--mode", bc_opt.mode, "flat | projflat");
    bc_cmd->add_option("--phi", bc_opt.phi, "class expression, e.g. s[2,1], p[3], c2, ch3")
        ->required();
    bc_cmd->add_option("--n", bc_opt.n, "rank of E")->required();
    bc_cmd->add_option("--r", bc_opt.r, "rank of S")->required();
    bc_cmd->add_flag("--json", bc_opt.json, "JSON output");

    // symf
    std::string symf_to;
    std::vector<std::string> symf_mul_args;
    std::vector<std::string> symf_exprs;
    bool symf_json = false;
    auto* symf_cmd = app.add_subcommand("symf", "symmetric-function algebra");
    symf_cmd->add_option("--to", symf_to, "target basis letter: e h p s");
    symf_cmd->add_option("--mul", symf_mul_args, "two class expressions to multiply")
        ->expected(2);
    symf_cmd->add_option("expr", symf_exprs, "class expression(s)");
    symf_cmd->add_flag("--json", symf_json, "JSON output");

    // chow
    std::string chow_g;
    std::vector<std::string> chow_mul;
    bool chow_json = false;
    auto* chow_cmd = app.add_subcommand("chow", "box-truncated Schubert products");
    chow_cmd->add_option("--g", chow_g, "ranks R,S of the grassmannian box")->required();
    chow_cmd->add_option("--mul", chow_mul, "two class expressions")->expected(2)->required();
    chow_cmd->add_flag("--json", chow_json, "JSON output");

    // arakelov
    std::string ara_g;
    std::vector<std::string> ara_star;
    bool ara_json = false;
    auto* ara_cmd = app.add_subcommand("arakelov", "star products in the Arakelov Chow ring");
    ara_cmd->add_option("--g", ara_g, "ranks R,S of the grassmannian box")->required();
    ara_cmd->add_option("--star", ara_star, "two elements: sigma[..] or a[..]")
        ->expected(2)
        ->required();
    ara_cmd->add_flag("--json", ara_json, "JSON output");

    // verify
    std::string suite;
    int max_weight = 6, max_rank = 3, max_n = -1;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("suite", suite, "identities | oracle | ring | heights | all")
        ->required();
    verify_cmd->add_option("--max-weight", max_weight, "oracle sweep weight bound (default 6)");
    verify_cmd->add_option("--max-rank", max_rank, "rank bound for oracle/ring (default 3)");
    verify_cmd->add_option("--max-n", max_n,
                           "bound for identities (default 12) / heights (default 4)");
    verify_cmd->add_flag("--json", verify_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (bc_cmd->parsed()) return run_bc(bc_opt);

        if (symf_cmd->parsed()) {
            if (!symf_to.empty() && !symf_mul_args.empty())
                throw UsageError("symf: --to and --mul are mutually exclusive");
            SymF result(Basis::s);
            if (!symf_mul_args.empty()) {
                if (!symf_exprs.empty()) throw UsageError("symf: unexpected extra expressions");
                result = symf_mul(parse_class_expr(symf_mul_args[0]).f,
                                  parse_class_expr(symf_mul_args[1]).f);
            } else if (!symf_to.empty()) {
                if (symf_exprs.size() != 1)
                    throw UsageError("symf --to expects exactly one expression");
                const auto basis = symf_to.size() == 1 ? basis_from_letter(symf_to[0]) : std::nullopt;
                if (!basis) throw UsageError("symf: unknown target basis '" + symf_to + "'");
                result = convert_basis(parse_class_expr(symf_exprs[0]).f, *basis);
            } else {
                throw UsageError("symf: expected --to BASIS EXPR or --mul A B");
            }
            std::cout << (symf_json ? to_json_string(result) : symf_str(result)) << "\n";
            return 0;
        }

        if (chow_cmd->parsed()) {
            const auto [r, s] = parse_ranks(chow_g);
            const SymF prod = symf_mul(parse_class_expr(chow_mul[0]).f,
                                       parse_class_expr(chow_mul[1]).f);
            const SymF result = box_reduce(prod, r, s);
            std::cout << (chow_json ? to_json_string(result) : symf_str(result)) << "\n";
            return 0;
        }

        if (ara_cmd->parsed()) {
            const auto [r, s] = parse_ranks(ara_g);
            const ArakelovElem result = star(parse_arakelov_expr(ara_star[0], r, s),
                                             parse_arakelov_expr(ara_star[1], r, s));
            std::cout << (ara_json ? to_json_string(result) : result.str()) << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            SuiteRunner out;
            out.json = verify_json;
            if (suite == "identities") {
                run_identities(out, max_n < 0 ? 12 : max_n);
            } else if (suite == "oracle") {
                run_oracle(out, max_weight, max_rank);
            } else if (suite == "ring") {
                run_ring(out, max_rank, 100);
            } else if (suite == "heights") {
                run_heights(out, max_n < 0 ? 4 : max_n);
            } else if (suite == "all") {
                run_identities(out, max_n < 0 ? 12 : max_n);
                run_oracle(out, max_weight, max_rank);
                run_ring(out, max_rank, 100);
                run_heights(out, max_n < 0 ? 4 : max_n);
            } else {
                throw UsageError("unknown suite '" + suite + "'");
            }
            if (!out.json)
                std::cout << (out.all_hold ? "all checks hold" : "FAILURES present") << "\n";
            return out.all_hold ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
