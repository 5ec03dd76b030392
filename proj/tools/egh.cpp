// egh — exact liaison toolkit over F_p.  Subcommands cover Hilbert
// tables, witness chains from type data, direct links, minimal licci
// chains, the end-to-end EGH witness pipeline, lex-plus-powers, the
// mod-linear-form lemma, and the built-in selftest suites.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "egh/ci_type.hpp"
#include "egh/errors.hpp"
#include "egh/fp.hpp"
#include "egh/hilbert.hpp"
#include "egh/ideal.hpp"
#include "egh/ideal_ops.hpp"
#include "egh/io.hpp"
#include "egh/linkage.hpp"
#include "egh/lpp.hpp"
#include "egh/modlin.hpp"
#include "egh/monomial_ideal.hpp"
#include "egh/parse.hpp"
#include "egh/pipeline.hpp"
#include "egh/report.hpp"
#include "egh/selftest.hpp"
#include "egh/witness.hpp"

namespace {

using namespace egh;

std::vector<std::string> polynomial_strings(const std::vector<Polynomial>& polys) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const Polynomial& f : polys) out.push_back(f.to_string());
    return out;
}

std::string generator_summary(const Ideal& I) {
    return join(polynomial_strings(I.min_generators()), ", ");
}

std::string chain_summary(const std::vector<CIType>& types) {
    std::vector<std::string> pieces;
    pieces.reserve(types.size());
    for (const CIType& t : types) pieces.push_back(t.to_string());
    return join(pieces, ";");
}

// ---------------------------------------------------------------- hilbert

int cmd_hilbert(const std::string& path, int degree_bound, OutputFormat format) {
    const Ideal I = read_ideal_file(path);
    if (!I.artinian() && degree_bound < 0)
        throw Error("ideal is not Artinian; pass --degree-bound to truncate");
    const HilbertFunction hf =
        degree_bound >= 0 ? I.hilbert_truncated(degree_bound) : I.hilbert();
    const int top = hf.artinian() ? std::max(hf.top_socle_degree(), 0) : degree_bound;
    if (format == OutputFormat::Table) {
        std::cout << "t  H(S/I,t)\n";
        for (int d = 0; d <= top; ++d) std::cout << d << "  " << hf.at(d) << "\n";
        return 0;
    }
    Report r;
    r.add("command", "hilbert");
    r.add("input", path);
    r.add("prime", std::uint64_t(I.ring()->characteristic()));
    r.add("nvars", (long long)I.ring()->nvars());
    r.add("artinian", I.artinian());
    r.add("hf", hf.to_string());
    for (int d = 0; d <= top; ++d)
        r.add("h[" + std::to_string(d) + "]", hf.at(d));
    r.print(std::cout, format);
    return 0;
}

// ---------------------------------------------------------------- witness

int cmd_witness(const std::string& chain_text, std::uint32_t prime,
                OutputFormat format) {
    const TypeChain chain = TypeChain::parse(chain_text);
    const int n = chain.type(0).size();
    const RingPtr ring = RingContext::make_default(n, prime);
    const std::vector<Multicomplex> levels = tilde_gamma_chain(chain, ring);
    const MonomialIdeal witness = witness_ideal(chain, ring);
    Report r;
    r.add("command", "witness");
    r.add("prime", std::uint64_t(prime));
    r.add("chain", chain.to_string());
    r.add("nvars", (long long)n);
    r.add("length", (long long)chain.length());
    for (std::size_t i = 0; i < levels.size(); ++i)
        r.add("level[" + std::to_string(i + 1) + "]",
              (long long)levels[i].monomials().size());
    r.add("hf", witness.hilbert().to_string());
    r.add("witness", join(monomial_strings(ring, witness.generators()), ", "));
    r.add("witness_count", (long long)witness.generators().size());
    r.print(std::cout, format);
    return 0;
}

// ------------------------------------------------------------------- link

int cmd_link(const std::string& path_i, const std::string& path_j,
             OutputFormat format) {
    const Ideal I = read_ideal_file(path_i);
    const Ideal J = read_ideal_file(path_j);
    if (!same_ring(I.ring(), J.ring()))
        throw Error("ideal files declare different rings");
    const LinkStep step = direct_link(I, J);
    Report r;
    r.add("command", "link");
    r.add("input_i", path_i);
    r.add("input_j", path_j);
    r.add("prime", std::uint64_t(I.ring()->characteristic()));
    r.add("type", step.type.to_string());
    r.add("height", (long long)step.link.height());
    r.add("target", generator_summary(step.target));
    r.add("target_count", (long long)step.target.min_generators().size());
    r.add("verified", true);
    r.print(std::cout, format);
    return 0;
}

// ------------------------------------------------------------------ chain

int cmd_chain(const std::string& path, std::uint64_t seed, int max_steps,
              OutputFormat format) {
    const Ideal I = read_ideal_file(path);
    std::mt19937_64 rng(seed);
    const LinkChain chain = minimally_licci_chain(I, rng, max_steps);
    Report r;
    r.add("command", "chain");
    r.add("input", path);
    r.add("prime", std::uint64_t(I.ring()->characteristic()));
    r.add("seed", seed);
    r.add("steps", (long long)chain.steps.size());
    r.add("types", chain_summary(chain.types()));
    r.add("terminal_type", chain.terminal_type.to_string());
    r.add("sequentially_bounded", chain.sequentially_bounded);
    std::vector<std::string> counts{
        std::to_string(I.min_generators().size())};
    for (const LinkStep& step : chain.steps)
        counts.push_back(std::to_string(step.target.min_generators().size()));
    r.add("gens", join(counts, ","));
    r.add("terminal", generator_summary(chain.terminal));
    r.print(std::cout, format);
    return 0;
}

// -------------------------------------------------------------------- egh

int cmd_egh(const std::string& path, std::uint64_t seed, OutputFormat format) {
    const Ideal I = read_ideal_file(path);
    std::mt19937_64 rng(seed);
    const EghResult result = egh_pipeline(I, rng);
    const int n = I.ring()->nvars();

    Report r;
    r.add("command", "egh");
    r.add("input", path);
    r.add("prime", std::uint64_t(I.ring()->characteristic()));
    r.add("seed", seed);
    r.add("e", result.e.to_string());
    bool degenerate = false;
    for (int i = 0; i < result.e.size(); ++i)
        if (result.e[i] < 2) degenerate = true;
    if (degenerate)
        r.add("note", "a degree below 2 falls outside the EGH statement; "
                      "witness computed anyway");
    r.add("steps", (long long)result.chain.steps.size());
    r.add("chain", chain_summary(result.chain.types()));
    r.add("hf_input", result.hf_input.to_string());
    r.add("hf_witness", result.hf_witness.to_string());
    r.add("hf_equal", result.hf_input == result.hf_witness);
    bool powers = false;
    std::string witness_text;
    if (result.witness) {
        powers = true;
        for (int i = 0; i < n && i < result.e.size(); ++i)
            if (!result.witness->contains(Monomial::var(n, i, result.e[i])))
                powers = false;
        witness_text =
            join(monomial_strings(I.ring(), result.witness->generators()), ", ");
    }
    r.add("witness", witness_text);
    r.add("witness_count",
          (long long)(result.witness ? result.witness->generators().size() : 0));
    r.add("powers_contained", powers);
    r.add("result", result.pass ? "PASS" : "FAIL");
    if (!result.pass) r.add("failure", result.failure);
    r.print(std::cout, format);
    return result.pass ? 0 : 3;
}

// -------------------------------------------------------------------- lpp

std::vector<long long> parse_value_list(const std::string& text) {
    std::vector<long long> values;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        std::size_t pos = 0;
        const long long v = std::stoll(piece, &pos);
        if (pos != piece.size())
            throw Error("malformed value list '" + text + "'");
        values.push_back(v);
    }
    if (values.empty()) throw Error("empty value list");
    return values;
}

int cmd_lpp(const std::string& e_text, const std::string& target_text,
            std::uint32_t prime, OutputFormat format) {
    const CIType e = CIType::parse(e_text);
    const HilbertFunction target =
        HilbertFunction::artinian(parse_value_list(target_text));
    const RingPtr ring = RingContext::make_default(e.size(), prime);
    const MonomialIdeal result = lex_plus_powers(e, target, ring);
    Report r;
    r.add("command", "lpp");
    r.add("prime", std::uint64_t(prime));
    r.add("e", e.to_string());
    r.add("target", target.to_string());
    r.add("ideal", join(monomial_strings(ring, result.generators()), ", "));
    r.add("count", (long long)result.generators().size());
    r.add("hf", result.hilbert().to_string());
    r.print(std::cout, format);
    return 0;
}

// ----------------------------------------------------------------- modlin

int cmd_modlin(const std::string& path_i1, const std::string& path_j,
               const std::string& g_text, int j, OutputFormat format) {
    const Ideal I1 = read_ideal_file(path_i1);
    const Ideal J = read_ideal_file(path_j);
    if (!same_ring(I1.ring(), J.ring()))
        throw Error("ideal files declare different rings");
    const Polynomial g = parse_polynomial(g_text, I1.ring());
    const Ideal I2 = colon(J, I1);
    const ModLinResult result = mod_linear_form(I1, I2, J, g, j);
    Report r;
    r.add("command", "modlin");
    r.add("input_i1", path_i1);
    r.add("input_j", path_j);
    r.add("prime", std::uint64_t(I1.ring()->characteristic()));
    r.add("g", g.to_string());
    r.add("j", (long long)j);
    r.add("i2", generator_summary(I2));
    r.add("i1_prime", generator_summary(result.I1_prime));
    r.add("i2_prime", generator_summary(result.I2_prime));
    r.add("j_prime", generator_summary(result.J_prime));
    r.add("substituted", I1.ring()->var_name(result.substituted_var));
    r.add("quotient_type", result.quotient_step.type.to_string());
    r.add("quotient_target", generator_summary(result.quotient_step.target));
    r.add("verified", true);
    r.print(std::cout, format);
    return 0;
}

// --------------------------------------------------------------- selftest

int cmd_selftest(std::uint32_t prime, std::uint64_t seed, OutputFormat format) {
    const SelftestResult result = run_selftest(prime, seed);
    if (format == OutputFormat::Table) {
        for (const SuiteResult& suite : result.suites) {
            std::cout << "suite " << suite.name << ": "
                      << (suite.passed ? "PASS" : "FAIL") << " ("
                      << suite.checks << " checks)\n";
            for (const std::string& w : suite.warnings)
                std::cout << "  warning: " << w << "\n";
            for (const std::string& f : suite.failures)
                std::cout << "  failure: " << f << "\n";
        }
        if (result.all_passed())
            std::cout << "all suites passed\n";
        else
            std::cout << "selftest FAILED\n";
    } else {
        Report r;
        r.add("command", "selftest");
        r.add("prime", std::uint64_t(prime));
        r.add("seed", seed);
        for (const SuiteResult& suite : result.suites) {
            r.add("suite[" + suite.name + "]", suite.passed ? "PASS" : "FAIL");
            r.add("checks[" + suite.name + "]", (long long)suite.checks);
        }
        int k = 0;
        for (const SuiteResult& suite : result.suites)
            for (const std::string& w : suite.warnings)
                r.add("warning[" + std::to_string(k++) + "]",
                      suite.name + ": " + w);
        k = 0;
        for (const SuiteResult& suite : result.suites)
            for (const std::string& f : suite.failures)
                r.add("failure[" + std::to_string(k++) + "]",
                      suite.name + ": " + f);
        r.add("result", result.all_passed() ? "PASS" : "FAIL");
        r.print(std::cout, format);
    }
    return result.all_passed() ? 0 : 3;
}

// Runs a command body and maps thrown errors to the exit-code contract:
// 3 verification failure, 2 any other computation error.
template <typename F>
int guarded(const std::optional<std::uint64_t>& seed, F&& body) {
    const auto reproduce = [&]() -> std::string {
        return seed ? " (seed " + std::to_string(*seed) + ")" : std::string{};
    };
    try {
        return body();
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << reproduce() << "\n";
        return 3;
    } catch (const TargetNotAchievable& e) {
        std::cerr << "not achievable: " << e.what() << "\n";
        return 2;
    } catch (const GenericityError& e) {
        std::cerr << "genericity failure: " << e.what() << reproduce() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << reproduce() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact liaison and EGH-witness toolkit over F_p"};
    app.require_subcommand(1);

    std::uint32_t prime = 32003;
    std::string format_name = "table";
    app.add_option("--prime", prime, "field characteristic (default 32003)");
    app.add_option("--format", format_name, "output style")
        ->check(CLI::IsMember({"table", "records"}));

    std::string hilbert_file;
    int degree_bound = -1;
    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "Hilbert function of S/I from an ideal file");
    hilbert_cmd->add_option("file", hilbert_file, "ideal file")->required();
    hilbert_cmd->add_option("--degree-bound", degree_bound,
                            "truncation degree for non-Artinian ideals");

    std::string witness_chain;
    CLI::App* witness_cmd = app.add_subcommand(
        "witness", "witness monomial ideal from a type chain, e.g. 3,3;2,2;1,1");
    witness_cmd->add_option("chain", witness_chain, "semicolon-separated types")
        ->required();

    std::string link_file_i, link_file_j;
    CLI::App* link_cmd =
        app.add_subcommand("link", "direct link J : I with verification");
    link_cmd->add_option("file-I", link_file_i, "ideal file for I")->required();
    link_cmd->add_option("file-J", link_file_j, "ideal file for the CI J")
        ->required();

    std::string chain_file;
    std::uint64_t chain_seed = 0;
    int max_steps = 20;
    CLI::App* chain_cmd =
        app.add_subcommand("chain", "minimal licci chain down to a CI");
    chain_cmd->add_option("file", chain_file, "ideal file")->required();
    chain_cmd->add_option("--seed", chain_seed, "random seed")->required();
    chain_cmd->add_option("--max-steps", max_steps, "link budget");

    std::string egh_file;
    std::uint64_t egh_seed = 0;
    CLI::App* egh_cmd =
        app.add_subcommand("egh", "end-to-end EGH witness pipeline");
    egh_cmd->add_option("file", egh_file, "ideal file")->required();
    egh_cmd->add_option("--seed", egh_seed, "random seed")->required();

    std::string lpp_e, lpp_target;
    CLI::App* lpp_cmd =
        app.add_subcommand("lpp", "lex-plus-powers ideal for a target HF");
    lpp_cmd->add_option("e", lpp_e, "power degrees, e.g. 2,3")->required();
    lpp_cmd->add_option("target", lpp_target, "target HF, e.g. 1,2,1")->required();

    std::string modlin_file_i1, modlin_file_j, modlin_g;
    int modlin_j = 0;
    CLI::App* modlin_cmd = app.add_subcommand(
        "modlin", "transport a link along a linear nonzerodivisor");
    modlin_cmd->add_option("file-I1", modlin_file_i1, "ideal file for I1")
        ->required();
    modlin_cmd->add_option("file-J", modlin_file_j, "ideal file for the CI J")
        ->required();
    modlin_cmd->add_option("--g", modlin_g, "linear form")->required();
    modlin_cmd->add_option("--j", modlin_j, "colon exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);

    std::uint64_t selftest_seed = 1;
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the built-in verification suites");
    selftest_cmd->add_option("--seed", selftest_seed, "random seed");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (prime < 2 || prime > 0x7fffffffu || !egh::is_prime(prime)) {
        std::cerr << "error: --prime must be a prime below 2^31\n";
        return 1;
    }
    const OutputFormat format =
        format_name == "records" ? OutputFormat::Records : OutputFormat::Table;

    if (hilbert_cmd->parsed())
        return guarded(std::nullopt,
                       [&] { return cmd_hilbert(hilbert_file, degree_bound, format); });
    if (witness_cmd->parsed())
        return guarded(std::nullopt,
                       [&] { return cmd_witness(witness_chain, prime, format); });
    if (link_cmd->parsed())
        return guarded(std::nullopt,
                       [&] { return cmd_link(link_file_i, link_file_j, format); });
    if (chain_cmd->parsed())
        return guarded(chain_seed, [&] {
            return cmd_chain(chain_file, chain_seed, max_steps, format);
        });
    if (egh_cmd->parsed())
        return guarded(egh_seed, [&] { return cmd_egh(egh_file, egh_seed, format); });
    if (lpp_cmd->parsed())
        return guarded(std::nullopt,
                       [&] { return cmd_lpp(lpp_e, lpp_target, prime, format); });
    if (modlin_cmd->parsed())
        return guarded(std::nullopt, [&] {
            return cmd_modlin(modlin_file_i1, modlin_file_j, modlin_g, modlin_j,
                              format);
        });
    if (selftest_cmd->parsed())
        return guarded(selftest_seed,
                       [&] { return cmd_selftest(prime, selftest_seed, format); });

    std::cerr << "error: no command\n";
    return 1;
}
