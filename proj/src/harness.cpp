#include "arglp/harness.hpp"

#include <algorithm>
#include <sstream>

#include "arglp/flatten.hpp"
#include "arglp/io.hpp"
#include "arglp/program.hpp"

namespace arglp {

namespace {

// splitmix64: portable and stable across platforms, unlike the standard
// library distributions.
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
};

}  // namespace

Framework random_framework(const GenSpec& spec, std::vector<std::string>* warnings) {
    if (spec.n_args < 0 || spec.n_atts < 0 || spec.n_sups < 0)
        throw std::invalid_argument("element counts must be non-negative");
    if (spec.recursion_rate < 0.0 || spec.recursion_rate > 1.0)
        throw std::invalid_argument("recursion rate must lie in [0,1]");

    auto warn = [&](const std::string& msg) {
        if (warnings) warnings->push_back(msg);
    };

    int n_args = spec.n_args;
    int n_atts = spec.n_atts;
    int n_sups = spec.n_sups;
    if (!kind_allows_supports(spec.kind) && n_sups > 0) {
        warn("kind '" + to_string(spec.kind) + "' has no supports; generating 0 instead of " +
             std::to_string(n_sups));
        n_sups = 0;
    }
    if (n_args == 0 && (n_atts > 0 || n_sups > 0)) {
        warn("no arguments to act as sources; generating 0 attacks and supports");
        n_atts = 0;
        n_sups = 0;
    }
    bool recursive_supports = kind_has_support_elements(spec.kind);
    if (n_sups > 0 && n_args < 2 && (!recursive_supports || n_atts == 0)) {
        warn("no acyclic support targets available; generating 0 supports");
        n_sups = 0;
    }

    Rng rng{spec.seed};
    Framework f;
    f.kind = spec.kind;

    std::vector<std::string> args, atts, sups;
    for (int i = 0; i < n_args; ++i) args.push_back("a" + std::to_string(i + 1));
    for (int i = 0; i < n_atts; ++i) atts.push_back("att" + std::to_string(i + 1));
    for (int i = 0; i < n_sups; ++i) sups.push_back("sup" + std::to_string(i + 1));
    f.args.insert(args.begin(), args.end());

    // Random argument ranks keep the support pair relation acyclic.
    std::vector<int> rank(n_args);
    for (int i = 0; i < n_args; ++i) rank[i] = i;
    for (int i = n_args - 1; i > 0; --i)
        std::swap(rank[i], rank[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    bool recursive_attacks = kind_has_attack_elements(spec.kind);
    auto generate = [&] {
        f.attacks.clear();
        f.supports.clear();
        for (int i = 0; i < n_atts; ++i) {
            const std::string& source = args[rng.below(args.size())];
            std::string target;
            bool recurse = spec.recursion_rate > 0 && recursive_attacks &&
                           (n_atts + (recursive_supports ? n_sups : 0)) > 0 &&
                           rng.chance(spec.recursion_rate);
            if (recurse) {
                std::uint64_t pool = static_cast<std::uint64_t>(n_atts) +
                                     (recursive_supports ? static_cast<std::uint64_t>(n_sups) : 0);
                std::uint64_t pick = rng.below(pool);
                target = pick < static_cast<std::uint64_t>(n_atts)
                             ? atts[pick]
                             : sups[pick - static_cast<std::uint64_t>(n_atts)];
            } else {
                target = args[rng.below(args.size())];
            }
            f.attacks.emplace(atts[i], Interaction{source, target});
        }

        for (int i = 0; i < n_sups; ++i) {
            // Candidate targets: later support names, any attack name
            // (recursive kinds), or an argument of strictly larger rank than
            // the source.
            bool can_sup = recursive_supports && i + 1 < n_sups;
            bool can_att = recursive_supports && n_atts > 0;
            bool can_arg = n_args >= 2;
            bool recurse = (can_sup || can_att) &&
                           (!can_arg || rng.chance(spec.recursion_rate));
            if (recurse) {
                std::uint64_t pool = (can_att ? static_cast<std::uint64_t>(n_atts) : 0) +
                                     (can_sup ? static_cast<std::uint64_t>(n_sups - i - 1) : 0);
                std::uint64_t pick = rng.below(pool);
                std::string target;
                if (can_att && pick < static_cast<std::uint64_t>(n_atts))
                    target = atts[pick];
                else
                    target = sups[i + 1 + (pick - (can_att ? n_atts : 0))];
                f.supports.emplace(sups[i], Interaction{args[rng.below(args.size())], target});
            } else {
                // Two distinct arguments ordered by rank.
                int x = static_cast<int>(rng.below(args.size()));
                int y = static_cast<int>(rng.below(args.size() - 1));
                if (y >= x) ++y;
                if (rank[x] > rank[y]) std::swap(x, y);
                f.supports.emplace(sups[i], Interaction{args[x], args[y]});
            }
        }
    };

    // The BAF kinds get resampled until their contrapositive complex attacks
    // cannot loop back onto the support chains that induce them; the pair
    // flattening is only extension-preserving on that class.
    generate();
    for (int attempt = 0; attempt < 64 && !mediated_attack_safe(f); ++attempt) generate();
    if (!mediated_attack_safe(f)) {
        warn("could not place supports clear of their own complex attacks; dropping supports");
        n_sups = 0;
        generate();
    }

    ensure_valid(f);
    return f;
}

std::string export_dot(const Framework& f) {
    std::ostringstream out;
    out << "digraph framework {\n";
    for (const auto& a : f.args) out << "  \"" << a << "\" [shape=ellipse];\n";
    for (const auto& [name, _] : f.attacks)
        out << "  \"" << name << "\" [shape=box,label=\"" << name << "\"];\n";
    for (const auto& [name, _] : f.supports)
        out << "  \"" << name << "\" [shape=box,style=bold,label=\"" << name << "\"];\n";
    for (const auto& [name, e] : f.attacks) {
        out << "  \"" << e.source << "\" -> \"" << name << "\" [arrowhead=none];\n";
        out << "  \"" << name << "\" -> \"" << e.target << "\";\n";
    }
    for (const auto& [name, e] : f.supports) {
        out << "  \"" << e.source << "\" -> \"" << name
            << "\" [arrowhead=none,style=bold,color=\"black:invis:black\"];\n";
        out << "  \"" << name << "\" -> \"" << e.target
            << "\" [style=bold,color=\"black:invis:black\"];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

std::vector<Interpretation> lp_models(const Framework& f, Semantics sem,
                                      const EnumOptions& opts) {
    auto models = enumerate_psms(compile(f), opts);
    if (sem == Semantics::Complete) return models;
    return select(models, selector_counterpart(sem));
}

std::vector<Interpretation> direct_models(const Framework& f, Semantics sem,
                                          const DirectOptions& opts) {
    auto cos = complete_extensions(f, opts);
    auto chosen = select_extensions(cos, f, sem);
    std::vector<Interpretation> out;
    for (const auto& e : chosen) out.push_back(completion_interpretation(e, f));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DiffReport diff_frameworks(const Framework& f, Semantics sem, const EnumOptions& lp_opts,
                           const DirectOptions& direct_opts) {
    DiffReport report;
    report.semantics = sem;
    report.atoms = universe_names(f);

    auto lp = lp_models(f, sem, lp_opts);
    auto direct = direct_models(f, sem, direct_opts);

    std::set_difference(lp.begin(), lp.end(), direct.begin(), direct.end(),
                        std::back_inserter(report.lp_only));
    std::set_difference(direct.begin(), direct.end(), lp.begin(), lp.end(),
                        std::back_inserter(report.direct_only));
    report.match = report.lp_only.empty() && report.direct_only.empty();
    return report;
}

std::string DiffReport::render_text() const {
    std::ostringstream out;
    out << "semantics: " << to_string(semantics) << "\n";
    if (match) {
        out << "match: model sets coincide\n";
        return out.str();
    }
    out << "MISMATCH\n";
    auto dump = [&](const char* label, const std::vector<Interpretation>& models) {
        out << label << " (" << models.size() << "):\n";
        for (const auto& m : models) out << "  " << emit_model(m, atoms) << "\n";
    };
    dump("only lp", lp_only);
    dump("only direct", direct_only);

    const Interpretation* first = nullptr;
    const char* side = "";
    if (!lp_only.empty()) {
        first = &lp_only.front();
        side = "lp";
    }
    if (!direct_only.empty() && (first == nullptr || direct_only.front() < *first)) {
        first = &direct_only.front();
        side = "direct";
    }
    if (first != nullptr)
        out << "first divergence (" << side << "): " << emit_model(*first, atoms) << "\n";
    return out.str();
}

std::string DiffReport::render_json() const {
    std::ostringstream out;
    out << "{\"semantics\":\"" << to_string(semantics) << "\",\"match\":" << (match ? "true" : "false");
    out << ",\"universe\":[";
    for (std::size_t i = 0; i < atoms.size(); ++i) out << (i ? "," : "") << '"' << atoms[i] << '"';
    out << "]";
    auto dump = [&](const char* key, const std::vector<Interpretation>& models) {
        out << ",\"" << key << "\":[";
        for (std::size_t i = 0; i < models.size(); ++i)
            out << (i ? "," : "") << emit_model(models[i], atoms);
        out << "]";
    };
    dump("lp_only", lp_only);
    dump("direct_only", direct_only);
    out << "}";
    return out.str();
}

}  // namespace arglp
