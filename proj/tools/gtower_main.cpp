// Command-line front end.  Subcommands: wp, reduce, enum-sets, iso-probe,
// separate.  Exit codes: 0 trivial/ok, 1 nontrivial/violations, 2 usage or
// parse failure, 3 step budget exhausted (answer unknown).

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtower/abelian.hpp"
#include "gtower/freeprod.hpp"
#include "gtower/hnntower.hpp"
#include "gtower/separator.hpp"
#include "gtower/sets.hpp"
#include "gtower/words.hpp"

using json = nlohmann::json;
using namespace gtower;

namespace {

constexpr int kExitTrivial = 0;
constexpr int kExitNontrivial = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string sets = "mock";
    std::uint64_t budget = 0;
    bool budget_given = false;
    std::string output = "text";

    bool machine() const { return output == "machine"; }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--sets", opt.sets, "set-pair backend: mock | dovetail | file:<path>")
        ->capture_default_str();
    cmd->add_option("--budget", opt.budget, "step budget for enumeration queries")
        ->check(CLI::PositiveNumber)
        ->each([&opt](const std::string&) { opt.budget_given = true; });
    cmd->add_option("--output", opt.output, "output mode: text | machine")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
}

std::unique_ptr<SetPairBackend> make_backend(const Options& opt) {
    if (opt.sets == "mock") return std::make_unique<MockBackend>();
    if (opt.sets == "dovetail") {
        if (!opt.budget_given) {
            throw CLI::ValidationError("--sets dovetail requires a positive --budget");
        }
        return std::make_unique<DovetailBackend>(DovetailBackend::bundled_table(), opt.budget);
    }
    if (opt.sets.rfind("file:", 0) == 0) {
        return std::make_unique<ExplicitListBackend>(
            ExplicitListBackend::from_file(opt.sets.substr(5)));
    }
    throw CLI::ValidationError("--sets must be mock, dovetail or file:<path>");
}

void emit(const Options& opt, const json& record, const std::string& text) {
    if (opt.machine()) {
        std::cout << record.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

int budget_exhausted(const Options& opt, const BudgetExhausted& e) {
    emit(opt, {{"error", "budget-exhausted"}, {"detail", e.what()}},
         std::string("budget exhausted: ") + e.what());
    return kExitBudget;
}

int cmd_wp(const Options& opt, const std::string& text) {
    auto backend = make_backend(opt);
    GroupWord w = parse_word(text);
    try {
        bool trivial = is_trivial_in_g(*backend, w);
        emit(opt, {{"cmd", "wp"}, {"verdict", trivial ? "trivial" : "nontrivial"}},
             trivial ? "trivial" : "nontrivial");
        return trivial ? kExitTrivial : kExitNontrivial;
    } catch (const BudgetExhausted& e) {
        return budget_exhausted(opt, e);
    }
}

int cmd_reduce(const Options& opt, const std::string& text) {
    auto backend = make_backend(opt);
    std::vector<Letter> raw = parse_letters(text);
    BigInt raw_units = 0;
    for (const auto& l : raw) {
        if (l.sym.kind == GeneratorSymbol::Kind::Stable) raw_units += abs(l.exp);
    }
    try {
        ReductionReport rep = britton_reduce(*backend, GroupWord(std::move(raw)));
        // Count every removed unit pair, including free cancellations folded
        // away while the input was being assembled.
        BigInt pinches = (raw_units - rep.result.stable_unit_count()) / 2;
        emit(opt,
             {{"cmd", "reduce"},
              {"word", render_word(rep.result)},
              {"pinches", pinches.str()},
              {"level", rep.level}},
             render_word(rep.result) + "\npinches=" + pinches.str() +
                 "\nlevel=" + std::to_string(rep.level));
        return kExitTrivial;
    } catch (const BudgetExhausted& e) {
        return budget_exhausted(opt, e);
    }
}

int cmd_enum_sets(const Options& opt, std::uint64_t count) {
    auto backend = make_backend(opt);
    for (std::uint64_t i = 1; i <= count; ++i) {
        std::optional<std::uint64_t> n, m;
        try {
            n = backend->try_element_at(Family::N, i);
            m = backend->try_element_at(Family::M, i);
        } catch (const BudgetExhausted& e) {
            return budget_exhausted(opt, e);
        }
        if (!n || !m) {
            emit(opt,
                 {{"error", "budget-exhausted"},
                  {"detail", "enumeration ended after " + std::to_string(i - 1) + " rows"}},
                 "budget exhausted after " + std::to_string(i - 1) + " rows");
            return kExitBudget;
        }
        emit(opt, {{"i", i}, {"n", *n}, {"m", *m}},
             std::to_string(i) + " " + std::to_string(*n) + " " + std::to_string(*m));
    }
    return kExitTrivial;
}

int cmd_iso_probe(const Options& opt, std::uint64_t n) {
    auto backend = make_backend(opt);
    IsoVerdict v = iso_probe(*backend, n, opt.budget);
    emit(opt, {{"cmd", "iso-probe"}, {"n", n}, {"verdict", iso_verdict_name(v)}},
         iso_verdict_name(v));
    switch (v) {
        case IsoVerdict::Isomorphism: return kExitTrivial;
        case IsoVerdict::NotIsomorphism: return kExitNontrivial;
        default: return kExitBudget;
    }
}

int cmd_separate(const Options& opt, std::uint64_t range, const std::string& oracle_name) {
    auto backend = make_backend(opt);
    std::unique_ptr<ConjugacyOracle> oracle;
    if (oracle_name == "faithful") {
        oracle = std::make_unique<FaithfulMockOracle>(*backend);
    } else if (oracle_name == "all-false") {
        oracle = std::make_unique<AllFalseOracle>();
    } else if (oracle_name == "adversarial") {
        oracle = std::make_unique<AdversarialOracle>(*backend);
    } else {
        throw CLI::ValidationError("--oracle must be faithful, all-false or adversarial");
    }
    try {
        SeparationReport rep = compute_separating_set(*oracle, *backend, range);
        json violations = json::array();
        std::string vtext;
        for (const auto& v : rep.violations) {
            violations.push_back({{"n", v.n}, {"reason", v.reason}});
            vtext += "\nviolation: n=" + std::to_string(v.n) + " " + v.reason;
        }
        auto join = [](const std::vector<std::uint64_t>& xs) {
            std::string s;
            for (std::uint64_t x : xs) {
                if (!s.empty()) s += ' ';
                s += std::to_string(x);
            }
            return s;
        };
        emit(opt,
             {{"cmd", "separate"},
              {"range", rep.range_max},
              {"set_C", rep.set_C},
              {"set_A", rep.set_A},
              {"violations", violations}},
             "C: " + join(rep.set_C) + "\nA: " + join(rep.set_A) +
                 (rep.violations.empty() ? "\nviolations: none" : vtext));
        return rep.violations.empty() ? kExitTrivial : kExitNontrivial;
    } catch (const BudgetExhausted& e) {
        return budget_exhausted(opt, e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word problems over a recursively enumerated HNN tower"};
    app.require_subcommand(1);

    Options opt;
    std::string word_text;
    std::uint64_t count = 0, probe_n = 0, range = 0;
    std::string oracle_name = "faithful";

    CLI::App* wp = app.add_subcommand("wp", "decide triviality of a word");
    add_common(wp, opt);
    wp->add_option("word", word_text, "word over a[n,m], b[n,m], t[i]");

    CLI::App* reduce = app.add_subcommand("reduce", "pinch-reduce a word");
    add_common(reduce, opt);
    reduce->add_option("word", word_text, "word over a[n,m], b[n,m], t[i]");

    CLI::App* es = app.add_subcommand("enum-sets", "tabulate both enumerations");
    add_common(es, opt);
    es->add_option("count", count, "rows to print")->required()->check(CLI::PositiveNumber);

    CLI::App* iso = app.add_subcommand("iso-probe", "probe the coordinate isomorphism at n");
    add_common(iso, opt);
    iso->add_option("n", probe_n, "factor index")->required()->check(CLI::PositiveNumber);

    CLI::App* sep = app.add_subcommand("separate", "extract the separating set from an oracle");
    add_common(sep, opt);
    sep->add_option("--range", range, "scan n = 1..range")->required()->check(CLI::PositiveNumber);
    sep->add_option("--oracle", oracle_name, "faithful | all-false | adversarial")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (wp->parsed()) return cmd_wp(opt, word_text);
        if (reduce->parsed()) return cmd_reduce(opt, word_text);
        if (es->parsed()) return cmd_enum_sets(opt, count);
        if (iso->parsed()) return cmd_iso_probe(opt, probe_n);
        if (sep->parsed()) return cmd_separate(opt, range, oracle_name);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
