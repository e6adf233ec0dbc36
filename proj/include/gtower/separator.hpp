#pragma once

// Reduction from a conjugacy oracle to a separating set.  Scanning n in
// range: C collects the n whose generator pair a[n,0], b[n,0] the oracle
// calls conjugate; A keeps those whose returned conjugator also matches the
// index-1 generators.  For a truthful oracle over any group containing the
// tower, A contains every first-set member in range and misses every
// second-set member - a recursive separation, which is the point.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gtower/sets.hpp"
#include "gtower/words.hpp"

namespace gtower {

// Opaque to callers: produced by find_conjugator, consumed by
// conjugated_equals of the same oracle.
struct ConjugatorHandle {
    std::uint64_t id = 0;
    GroupWord word;
};

class ConjugacyOracle {
  public:
    virtual ~ConjugacyOracle() = default;

    virtual bool is_conjugate(const GroupWord& g, const GroupWord& h) = 0;

    // Defined only when is_conjugate(g, h).
    virtual ConjugatorHandle find_conjugator(const GroupWord& g, const GroupWord& h) = 0;

    // Does c^-1 x c = y hold (in the oracle's ambient group)?
    virtual bool conjugated_equals(const GroupWord& x, const ConjugatorHandle& c,
                                   const GroupWord& y) = 0;
};

struct Violation {
    std::uint64_t n;
    std::string reason;
};

struct SeparationReport {
    std::uint64_t range_max = 0;
    std::vector<std::uint64_t> set_C;
    std::vector<std::uint64_t> set_A;
    std::vector<Violation> violations;
};

// Two oracle queries per n (is_conjugate, then find_conjugator when it
// holds) plus one conjugated_equals per compared generator pair.  Every
// conjugator is checked on its defining pair first (OracleInconsistent on
// failure).  Violations flag positive oracle claims that contradict the
// backend's ground truth where membership is decidable: an A-member inside
// the second set, or a first-set member whose own conjugator fails the
// index-1 identity.
SeparationReport compute_separating_set(ConjugacyOracle& oracle, SetPairBackend& backend,
                                        std::uint64_t range_max);

// Truthful test double over a deciding backend (UndecidableBackend
// otherwise).  Recognizes equal words (trivial conjugator) and cyclic
// single-factor pairs at first-set members, where t[i] conjugates; answers
// false off that fragment.
class FaithfulMockOracle : public ConjugacyOracle {
  public:
    explicit FaithfulMockOracle(SetPairBackend& backend);

    bool is_conjugate(const GroupWord& g, const GroupWord& h) override;
    ConjugatorHandle find_conjugator(const GroupWord& g, const GroupWord& h) override;
    bool conjugated_equals(const GroupWord& x, const ConjugatorHandle& c,
                           const GroupWord& y) override;

  protected:
    SetPairBackend& backend_;
};

// Denies every conjugacy.
class AllFalseOracle : public ConjugacyOracle {
  public:
    bool is_conjugate(const GroupWord&, const GroupWord&) override { return false; }
    ConjugatorHandle find_conjugator(const GroupWord&, const GroupWord&) override;
    bool conjugated_equals(const GroupWord&, const ConjugatorHandle&,
                           const GroupWord&) override {
        return false;
    }
};

// Faithful, except it also claims the generator pairs at second-set members
// are conjugate and backs the claim with a bogus handle whose
// conjugated_equals always agrees - planting exactly the violations the
// harness must catch.
class AdversarialOracle : public FaithfulMockOracle {
  public:
    explicit AdversarialOracle(SetPairBackend& backend) : FaithfulMockOracle(backend) {}

    bool is_conjugate(const GroupWord& g, const GroupWord& h) override;
    ConjugatorHandle find_conjugator(const GroupWord& g, const GroupWord& h) override;
    bool conjugated_equals(const GroupWord& x, const ConjugatorHandle& c,
                           const GroupWord& y) override;

  private:
    bool lies_about(const GroupWord& g, const GroupWord& h, std::uint64_t* n_out);
    static constexpr std::uint64_t kFakeIdBase = 1u << 20;
};

}  // namespace gtower
