#pragma once

// The tower above level 0: stable letter t[i] conjugates a[n_i,0] to
// b[n_i,0], where n_i is the i-th element of the first enumerated set.  The
// whole group is the union over all levels, and a word is decided at the
// lowest level containing it: repeatedly replace pinches
//
//     t[i]^-1 u t[i]  with  u = lambda a[n_i,0]   ->  lambda b[n_i,0]
//     t[i]   v t[i]^-1 with v = lambda b[n_i,0]   ->  lambda a[n_i,0]
//
// (interiors free of stable letters; free cancellation is the lambda = 0
// case).  The fixpoint either has no stable letters - decide at level 0 - or
// is a reduced word and therefore nontrivial.

#include <cstdint>
#include <vector>

#include "gtower/freeprod.hpp"
#include "gtower/sets.hpp"
#include "gtower/words.hpp"

namespace gtower {

// One performed replacement: `removed` equals `inserted` in the group.
struct PinchRewrite {
    GroupWord removed;
    GroupWord inserted;
    std::uint64_t stable_index;
    Side interior_side;  // which cyclic subgroup the interior sat in
};

struct ReductionReport {
    GroupWord result;
    std::uint64_t pinches_removed = 0;
    std::uint64_t level = 0;  // min_level(result)
    std::vector<PinchRewrite> trace;
};

std::uint64_t min_level(const GroupWord& word);

// Pinch elimination to fixpoint, leftmost pinch first (interiors are always
// innermost: they contain no stable letters by definition).  Terminates:
// every replacement strictly lowers the stable-unit count by at least 2, and
// 2 * pinches_removed accounts exactly for the drop.
ReductionReport britton_reduce(SetPairBackend& backend, const GroupWord& word);

// No pinch of either orientation for any stable index (words are freely
// reduced by construction).  Requires min_level(word) <= k.
bool is_reduced(SetPairBackend& backend, const GroupWord& word, std::uint64_t k);

// Word problem in the limit group.
bool is_trivial_in_g(SetPairBackend& backend, const GroupWord& word);

bool are_equal(SetPairBackend& backend, const GroupWord& w1, const GroupWord& w2);

// Torsion-freeness probe: true iff word is trivial or none of the powers
// word^2 .. word^max_power is trivial.  Requires max_power >= 2.
bool torsion_probe(SetPairBackend& backend, const GroupWord& word, std::uint64_t max_power);

}  // namespace gtower
