#include "gtower/hnntower.hpp"

namespace gtower {

std::uint64_t min_level(const GroupWord& word) { return word.min_level(); }

namespace {

// A candidate pinch: the facing unit steps of two consecutive stable-letter
// runs with the same index and opposite orientation, around a base-alphabet
// interior.  In a freely reduced word every pinch has this shape - a run
// never pinches with itself (equal signs), and consecutive equal-index runs
// cannot touch (they would have merged).
struct Candidate {
    std::size_t left;   // letter position of the left stable run
    std::size_t right;  // letter position of the right stable run
    std::uint64_t index;
    Side interior_side;  // A when t^-1 u t, B when t v t^-1
};

GroupWord slice(const std::vector<Letter>& letters, std::size_t from, std::size_t to) {
    // A contiguous slice of a reduced word is already reduced.
    return GroupWord(std::vector<Letter>(letters.begin() + from, letters.begin() + to));
}

template <typename OnPinch>
bool scan_pinches(SetPairBackend& backend, const GroupWord& word, OnPinch&& on_pinch) {
    const auto& letters = word.letters();
    std::size_t prev_stable = letters.size();
    for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p].sym.kind != GeneratorSymbol::Kind::Stable) continue;
        if (prev_stable != letters.size()) {
            const Letter& lhs = letters[prev_stable];
            const Letter& rhs = letters[p];
            if (lhs.sym.n == rhs.sym.n && (lhs.exp < 0) != (rhs.exp < 0)) {
                Candidate c{prev_stable, p, lhs.sym.n, lhs.exp < 0 ? Side::A : Side::B};
                GroupWord interior = slice(letters, prev_stable + 1, p);
                if (auto lambda =
                        cyclic_membership(backend, interior, c.index, c.interior_side)) {
                    if (on_pinch(c, interior, *lambda)) return true;
                }
            }
        }
        prev_stable = p;
    }
    return false;
}

}  // namespace

ReductionReport britton_reduce(SetPairBackend& backend, const GroupWord& word) {
    ReductionReport report;
    GroupWord cur = word;
    bool replaced = true;
    while (replaced) {
        replaced = scan_pinches(backend, cur, [&](const Candidate& c, const GroupWord& interior,
                                                  const BigInt& lambda) {
            const auto& letters = cur.letters();
            const bool a_interior = c.interior_side == Side::A;
            GeneratorSymbol t = GeneratorSymbol::stable(c.index);
            std::uint64_t n_i = backend.element_at(Family::N, c.index);
            GeneratorSymbol out_gen =
                GeneratorSymbol::abelian(a_interior ? Side::B : Side::A, n_i, 0);

            // removed: one facing unit step off each run around the interior.
            std::vector<Letter> removed;
            removed.push_back({t, a_interior ? BigInt(-1) : BigInt(1)});
            for (const auto& l : interior.letters()) removed.push_back(l);
            removed.push_back({t, a_interior ? BigInt(1) : BigInt(-1)});

            std::vector<Letter> next(letters.begin(), letters.begin() + c.left);
            next.push_back({t, letters[c.left].exp + (a_interior ? 1 : -1)});
            next.push_back({out_gen, lambda});
            next.push_back({t, letters[c.right].exp - (a_interior ? 1 : -1)});
            next.insert(next.end(), letters.begin() + c.right + 1, letters.end());

            BigInt units_before = cur.stable_unit_count();
            GroupWord reduced(std::move(next));
            // Construction may cascade further free stable-letter
            // cancellations; those are lambda = 0 pinches and count too.
            BigInt delta = units_before - reduced.stable_unit_count();
            report.pinches_removed += static_cast<std::uint64_t>(delta / 2);
            report.trace.push_back({GroupWord(std::move(removed)),
                                    GroupWord::generator(out_gen, lambda), c.index,
                                    c.interior_side});
            cur = std::move(reduced);
            return true;  // restart the scan: leftmost pinch first
        });
    }
    report.level = cur.min_level();
    report.result = std::move(cur);
    return report;
}

bool is_reduced(SetPairBackend& backend, const GroupWord& word, std::uint64_t k) {
    if (word.min_level() > k) {
        throw PreconditionViolated("is_reduced: word uses stable letters above level " +
                                   std::to_string(k));
    }
    bool found = scan_pinches(backend, word,
                              [](const Candidate&, const GroupWord&, const BigInt&) {
                                  return true;
                              });
    return !found;
}

bool is_trivial_in_g(SetPairBackend& backend, const GroupWord& word) {
    ReductionReport r = britton_reduce(backend, word);
    if (r.result.has_stable_letter()) return false;  // reduced with stable letters: nontrivial
    return is_trivial_g0(backend, r.result);
}

bool are_equal(SetPairBackend& backend, const GroupWord& w1, const GroupWord& w2) {
    return is_trivial_in_g(backend, w1 * w2.inverse());
}

bool torsion_probe(SetPairBackend& backend, const GroupWord& word, std::uint64_t max_power) {
    if (max_power < 2) throw PreconditionViolated("torsion_probe: max_power must be >= 2");
    if (is_trivial_in_g(backend, word)) return true;
    GroupWord acc = word;
    for (std::uint64_t p = 2; p <= max_power; ++p) {
        acc = acc * word;
        if (is_trivial_in_g(backend, acc)) return false;  // torsion witness
    }
    return true;
}

}  // namespace gtower
