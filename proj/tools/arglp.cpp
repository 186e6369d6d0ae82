// arglp — framework solver, translator and differential checker.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 validation error,
// 4 resource limit, 5 internal invariant breach (including diff mismatches).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arglp/direct.hpp"
#include "arglp/flatten.hpp"
#include "arglp/harness.hpp"
#include "arglp/io.hpp"
#include "arglp/program.hpp"
#include "arglp/psm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResourceLimit = 4;
constexpr int kExitInternal = 5;

int env_limit(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr) return fallback;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(name) + " is not an integer: " + value);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

arglp::Framework load(const std::string& path) { return arglp::parse_framework(read_file(path)); }

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot write '" + path + "'");
    out << text;
}

std::string render_extension(const arglp::Interpretation& m,
                             const std::vector<std::string>& atoms) {
    auto bucket = [&](arglp::TruthValue v) {
        std::string out = "{";
        bool first = true;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (m.values[i] != v) continue;
            if (!first) out += ",";
            out += atoms[i];
            first = false;
        }
        return out + "}";
    };
    return "in=" + bucket(arglp::TruthValue::True) + " out=" + bucket(arglp::TruthValue::False) +
           " undec=" + bucket(arglp::TruthValue::Undef);
}

struct SolveConfig {
    std::string file;
    std::string semantics = "complete";
    std::string engine = "lp";
    bool json = false;
    bool force = false;
};

std::vector<arglp::Interpretation> solve_models(const arglp::Framework& f,
                                                arglp::Semantics sem, const std::string& engine,
                                                const arglp::EnumOptions& lp_opts,
                                                const arglp::DirectOptions& direct_opts) {
    using namespace arglp;
    std::vector<Interpretation> models;
    if (engine == "lp") {
        models = enumerate_psms(compile(f), lp_opts);
    } else if (engine == "lp-normalized") {
        NormalProgram n = normalize(compile(f));
        std::vector<Interpretation> full = enumerate_psms(n, lp_opts);
        for (const auto& m : full) models.push_back(project_model(m, n));
        std::sort(models.begin(), models.end());
    } else {
        auto cos = complete_extensions(f, direct_opts);
        std::vector<Interpretation> out;
        for (const auto& e : select_extensions(cos, f, sem)) {
            out.push_back(completion_interpretation(e, f));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    if (sem == Semantics::Complete) return models;
    return select(models, selector_counterpart(sem));
}

int run_solve(const SolveConfig& cfg, const arglp::EnumOptions& lp_opts,
              const arglp::DirectOptions& direct_opts) {
    using namespace arglp;
    Semantics sem;
    if (!semantics_from_string(cfg.semantics, sem))
        throw CLI::ValidationError("unknown semantics '" + cfg.semantics + "'");
    Framework f = load(cfg.file);
    auto atoms = universe_names(f);
    auto models = solve_models(f, sem, cfg.engine, lp_opts, direct_opts);
    for (const auto& m : models)
        std::cout << (cfg.json ? emit_model(m, atoms) : render_extension(m, atoms)) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and logic-program translator for argumentation frameworks"};
    app.require_subcommand(1);

    arglp::EnumOptions lp_opts;
    arglp::DirectOptions direct_opts;

    // validate
    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "check a framework file");
    cmd_validate->add_option("file", validate_file)->required();

    // compile
    std::string compile_file, compile_target = "prop", compile_out;
    auto* cmd_compile = app.add_subcommand("compile", "derive the logic program");
    cmd_compile->add_option("file", compile_file)->required();
    cmd_compile->add_option("--target", compile_target)
        ->check(CLI::IsMember({"prop", "normal"}));
    cmd_compile->add_option("-o,--output", compile_out);

    // flatten
    std::string flatten_file, flatten_interp = "n";
    bool flatten_strip = false;
    auto* cmd_flatten = app.add_subcommand("flatten", "reduce a BAF to a plain AF");
    cmd_flatten->add_option("file", flatten_file)->required();
    cmd_flatten->add_option("--interpretation", flatten_interp)->check(CLI::IsMember({"n", "d"}));
    cmd_flatten->add_flag("--strip-mediated", flatten_strip,
                          "drop mediated attacks (necessary interpretation only)");

    // solve / oracle
    SolveConfig solve_cfg, oracle_cfg;
    auto add_solve = [](CLI::App* cmd, SolveConfig& cfg, bool with_engine) {
        cmd->add_option("file", cfg.file)->required();
        cmd->add_option("--semantics", cfg.semantics)
            ->check(CLI::IsMember({"complete", "preferred", "stable", "semi-stable", "grounded",
                                   "ideal"}));
        if (with_engine)
            cmd->add_option("--engine", cfg.engine)
                ->check(CLI::IsMember({"lp", "lp-normalized", "direct"}));
        cmd->add_flag("--json", cfg.json);
        cmd->add_flag("--force", cfg.force, "bypass enumeration limits");
    };
    auto* cmd_solve = app.add_subcommand("solve", "compute extensions");
    add_solve(cmd_solve, solve_cfg, true);
    auto* cmd_oracle = app.add_subcommand("oracle", "compute extensions with the direct engine");
    add_solve(cmd_oracle, oracle_cfg, false);
    oracle_cfg.engine = "direct";

    // diff
    SolveConfig diff_cfg;
    auto* cmd_diff = app.add_subcommand("diff", "compare the lp and direct engines");
    add_solve(cmd_diff, diff_cfg, false);

    // gen
    arglp::GenSpec gen_spec;
    std::string gen_kind = "af";
    auto* cmd_gen = app.add_subcommand("gen", "generate a random framework");
    cmd_gen->add_option("--kind", gen_kind)
        ->check(CLI::IsMember({"af", "afn", "afd", "raf", "afra", "rafn", "asaf", "rafd",
                               "afrad"}));
    cmd_gen->add_option("--args", gen_spec.n_args)->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--atts", gen_spec.n_atts)->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--sups", gen_spec.n_sups)->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--seed", gen_spec.seed);
    cmd_gen->add_option("--recursion-rate", gen_spec.recursion_rate)
        ->check(CLI::Range(0.0, 1.0));

    // export-dot
    std::string dot_file;
    auto* cmd_dot = app.add_subcommand("export-dot", "render a framework as DOT");
    cmd_dot->add_option("file", dot_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        lp_opts.atom_limit = env_limit("ARGLP_LIMIT_ATOMS", lp_opts.atom_limit);
        direct_opts.element_limit = env_limit("ARGLP_LIMIT_ELEMENTS", direct_opts.element_limit);

        if (cmd_validate->parsed()) {
            arglp::Framework f;
            try {
                f = load(validate_file);
            } catch (const arglp::ValidationError& e) {
                for (const auto& v : e.violations())
                    std::cout << to_string(v.code) << ": " << v.message << "\n";
                return kExitValidation;
            }
            std::cout << "ok\n";
            return kExitOk;
        }
        if (cmd_compile->parsed()) {
            arglp::PropProgram p = arglp::compile(load(compile_file));
            std::string text = compile_target == "normal"
                                   ? arglp::emit_program(arglp::normalize(p))
                                   : arglp::emit_program(p);
            write_output(compile_out, text);
            return kExitOk;
        }
        if (cmd_flatten->parsed()) {
            if (flatten_strip && flatten_interp != "n")
                throw CLI::ValidationError("--strip-mediated requires --interpretation n");
            arglp::Framework f = load(flatten_file);
            arglp::Framework flat = flatten_interp == "n"
                                        ? (flatten_strip ? arglp::strip_mediated(f)
                                                         : arglp::flatten_afn(f))
                                        : arglp::flatten_afd(f);
            std::cout << arglp::emit_framework(flat);
            return kExitOk;
        }
        if (cmd_solve->parsed()) {
            lp_opts.force = solve_cfg.force;
            direct_opts.force = solve_cfg.force;
            return run_solve(solve_cfg, lp_opts, direct_opts);
        }
        if (cmd_oracle->parsed()) {
            oracle_cfg.engine = "direct";
            lp_opts.force = oracle_cfg.force;
            direct_opts.force = oracle_cfg.force;
            return run_solve(oracle_cfg, lp_opts, direct_opts);
        }
        if (cmd_diff->parsed()) {
            arglp::Semantics sem;
            if (!arglp::semantics_from_string(diff_cfg.semantics, sem))
                throw CLI::ValidationError("unknown semantics '" + diff_cfg.semantics + "'");
            lp_opts.force = diff_cfg.force;
            direct_opts.force = diff_cfg.force;
            arglp::DiffReport report =
                arglp::diff_frameworks(load(diff_cfg.file), sem, lp_opts, direct_opts);
            std::cout << (diff_cfg.json ? report.render_json() + "\n" : report.render_text());
            return report.match ? kExitOk : kExitInternal;
        }
        if (cmd_gen->parsed()) {
            arglp::kind_from_string(gen_kind, gen_spec.kind);
            std::vector<std::string> warnings;
            arglp::Framework f = arglp::random_framework(gen_spec, &warnings);
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            std::cout << arglp::emit_framework(f);
            return kExitOk;
        }
        if (cmd_dot->parsed()) {
            std::cout << arglp::export_dot(load(dot_file));
            return kExitOk;
        }
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const arglp::ParseError& e) {
        std::cerr << "parse error at " << e.span().line << ":" << e.span().column << ": "
                  << e.what() << "\n";
        return kExitParse;
    } catch (const arglp::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const arglp::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const arglp::InternalError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    }
}
