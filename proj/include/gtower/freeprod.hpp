#pragma once

// The level-0 group: the free product of all the abelian factors (both
// families, all n).  Normal form is the alternating syllable decomposition;
// a word is trivial iff its normal form is empty.

#include <cstdint>
#include <optional>
#include <vector>

#include "gtower/abelian.hpp"
#include "gtower/sets.hpp"
#include "gtower/words.hpp"

namespace gtower {

struct G0NormalForm {
    // Nontrivial syllables, adjacent ones in distinct factors.
    std::vector<AbelianElement> syllables;

    bool empty() const { return syllables.empty(); }
    GroupWord to_word() const;  // canonical letters g[n,0]^l0 g[n,1]^l1 per syllable
};

// StableLetterPresent on any t letter; BudgetExhausted may bubble up from
// syllable triviality checks on semi-deciding backends.
G0NormalForm normalize(SetPairBackend& backend, const GroupWord& word);

bool is_trivial_g0(SetPairBackend& backend, const GroupWord& word);

// Membership of a base-alphabet word in the cyclic subgroup generated by
// a[n_i,0] (side A) or b[n_i,0] (side B) where n_i = element_at(N, i);
// returns the unique coefficient, nullopt when the word lies outside.
std::optional<BigInt> cyclic_membership(SetPairBackend& backend, const GroupWord& word,
                                        std::uint64_t i, Side side);

}  // namespace gtower
