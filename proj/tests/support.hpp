#pragma once

// Shared test scaffolding: an independent ground-truth evaluator for the
// quotiented rank-2 factors (mock sets only), a seeded random word source,
// and a tiny subprocess runner for exercising the CLI binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gtower/bigint.hpp"
#include "gtower/words.hpp"

namespace tsup {

// Ground truth for the mock sets, written against the definitions rather
// than the library: the factor at n is Z^2 unless n = 4i (relation g1 =
// 2^i g0 on both sides) or n = 4i - 2 (g1 = 3^i g0 on the A side, 2^i g0 on
// the B side).  An element (l0, l1) dies exactly when its image under the
// relation vanishes.
inline gtower::BigInt power_of(unsigned base, std::uint64_t e) {
    gtower::BigInt r = 1;
    for (std::uint64_t k = 0; k < e; ++k) r *= base;
    return r;
}

inline bool mock_quotient_trivial(gtower::Side side, std::uint64_t n, const gtower::BigInt& l0,
                                  const gtower::BigInt& l1) {
    if (n % 4 == 0 && n > 0) {
        std::uint64_t i = n / 4;
        return l0 + l1 * power_of(2, i) == 0;
    }
    if (n % 4 == 2) {
        std::uint64_t i = (n + 2) / 4;
        unsigned base = side == gtower::Side::A ? 3 : 2;
        return l0 + l1 * power_of(base, i) == 0;
    }
    return l0 == 0 && l1 == 0;
}

// ---------------------------------------------------------------------------
// seeded word source

class WordGen {
  public:
    explicit WordGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    gtower::BigInt nonzero_exp(int bound) {
        int e = uniform(1, bound);
        return uniform(0, 1) ? gtower::BigInt(e) : gtower::BigInt(-e);
    }

    gtower::Letter abelian_letter(std::uint64_t max_factor, int exp_bound) {
        auto side = uniform(0, 1) ? gtower::Side::A : gtower::Side::B;
        auto n = static_cast<std::uint64_t>(uniform(1, static_cast<int>(max_factor)));
        auto m = static_cast<unsigned char>(uniform(0, 1));
        return {gtower::GeneratorSymbol::abelian(side, n, m), nonzero_exp(exp_bound)};
    }

    gtower::Letter stable_letter(std::uint64_t max_stable, int exp_bound) {
        auto i = static_cast<std::uint64_t>(uniform(1, static_cast<int>(max_stable)));
        return {gtower::GeneratorSymbol::stable(i), nonzero_exp(exp_bound)};
    }

    // Uniform word: every position independently a base letter or (with the
    // given percentage) a stable letter.
    gtower::GroupWord word(std::size_t len, std::uint64_t max_factor = 10,
                           std::uint64_t max_stable = 3, int exp_bound = 3,
                           int stable_percent = 40) {
        std::vector<gtower::Letter> letters;
        letters.reserve(len);
        for (std::size_t k = 0; k < len; ++k) {
            if (uniform(1, 100) <= stable_percent) {
                letters.push_back(stable_letter(max_stable, exp_bound));
            } else {
                letters.push_back(abelian_letter(max_factor, exp_bound));
            }
        }
        return gtower::GroupWord(std::move(letters));
    }

    // A word guaranteed to contain pinch material: a conjugated multiple of
    // the cyclic generator at a first-set member (mock: n_i = 4i), sometimes
    // written through the defining relation so the interior is a nontrivial
    // spelling of a cyclic element, sometimes concatenated or conjugated
    // further.
    gtower::GroupWord pinch_bearing(std::uint64_t max_stable = 3) {
        using gtower::GeneratorSymbol;
        using gtower::GroupWord;
        auto i = static_cast<std::uint64_t>(uniform(1, static_cast<int>(max_stable)));
        std::uint64_t n = 4 * i;
        bool a_side = uniform(0, 1) == 1;
        auto interior_side = a_side ? gtower::Side::A : gtower::Side::B;
        GroupWord interior;
        switch (uniform(0, 2)) {
            case 0:  // plain multiple of the 0-generator
                interior = GroupWord::generator(
                    GeneratorSymbol::abelian(interior_side, n, 0), nonzero_exp(6));
                break;
            case 1: {  // same element spelled through the index relation
                gtower::BigInt l1 = nonzero_exp(3);
                interior =
                    GroupWord::generator(GeneratorSymbol::abelian(interior_side, n, 1), l1) *
                    GroupWord::generator(GeneratorSymbol::abelian(interior_side, n, 0),
                                         nonzero_exp(4));
                break;
            }
            default: {  // trivial interior: a lambda = 0 pinch with letters
                gtower::BigInt two_i = power_of(2, i);
                interior =
                    GroupWord::generator(GeneratorSymbol::abelian(interior_side, n, 1), 1) *
                    GroupWord::generator(GeneratorSymbol::abelian(interior_side, n, 0), -two_i);
                break;
            }
        }
        GroupWord t = GroupWord::generator(GeneratorSymbol::stable(i), a_side ? -1 : 1);
        GroupWord core = t * interior * t.inverse();
        if (uniform(0, 1)) {  // bury the pinch inside a conjugate
            GroupWord u = word(uniform(1, 3));
            core = u * core * u.inverse();
        }
        if (uniform(0, 3) == 0) core = core * pinch_bearing(max_stable);
        return core;
    }

  private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// subprocess runner

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') {
            q += "'\\''";
        } else {
            q += c;
        }
    }
    q += "'";
    return q;
}

// Runs the binary at `exe` with the given arguments, capturing stdout.
inline CliResult run_cli(const std::string& exe, const std::vector<std::string>& args) {
    std::string cmd = shell_quote(exe);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = ::pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

inline const char* cli_path_from_env() {
    const char* p = std::getenv("GTOWER_CLI");
    return p ? p : "";
}

}  // namespace tsup
