#include "gtower/freeprod.hpp"

namespace gtower {

GroupWord G0NormalForm::to_word() const {
    std::vector<Letter> letters;
    letters.reserve(2 * syllables.size());
    for (const auto& s : syllables) {
        if (s.lambda0 != 0) {
            letters.push_back({GeneratorSymbol::abelian(s.side, s.n, 0), s.lambda0});
        }
        if (s.lambda1 != 0) {
            letters.push_back({GeneratorSymbol::abelian(s.side, s.n, 1), s.lambda1});
        }
    }
    return GroupWord(std::move(letters));
}

G0NormalForm normalize(SetPairBackend& backend, const GroupWord& word) {
    G0NormalForm nf;
    for (const auto& l : word.letters()) {
        if (l.sym.kind == GeneratorSymbol::Kind::Stable) {
            throw StableLetterPresent("normalize: stable letter " + l.sym.str() +
                                      " outside the level-0 alphabet");
        }
        AbelianElement part{l.sym.side, l.sym.n, 0, 0};
        (l.sym.m == 0 ? part.lambda0 : part.lambda1) = l.exp;
        // Single generator powers are never trivial (a nonzero coefficient
        // survives every quotient), so fresh syllables go in unchecked; only
        // merged syllables can die, re-exposing the one beneath.
        if (!nf.syllables.empty() && nf.syllables.back().side == part.side &&
            nf.syllables.back().n == part.n) {
            nf.syllables.back() += part;
            if (is_trivial(backend, nf.syllables.back())) nf.syllables.pop_back();
        } else {
            nf.syllables.push_back(std::move(part));
        }
    }
    return nf;
}

bool is_trivial_g0(SetPairBackend& backend, const GroupWord& word) {
    return normalize(backend, word).empty();
}

std::optional<BigInt> cyclic_membership(SetPairBackend& backend, const GroupWord& word,
                                        std::uint64_t i, Side side) {
    G0NormalForm nf = normalize(backend, word);
    if (nf.empty()) return BigInt(0);
    if (nf.syllables.size() != 1) return std::nullopt;
    const AbelianElement& s = nf.syllables.front();
    if (s.side != side || s.n != backend.element_at(Family::N, i)) return std::nullopt;
    // The factor at a first-set member is cyclic on its 0-generator, so the
    // lone syllable is exactly one multiple of it.
    return cyclic_coefficient(backend, s, i);
}

}  // namespace gtower
