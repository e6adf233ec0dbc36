#include "gtower/separator.hpp"

#include <optional>

#include "gtower/abelian.hpp"
#include "gtower/freeprod.hpp"
#include "gtower/hnntower.hpp"

namespace gtower {

namespace {

GroupWord pair_gen(Side side, std::uint64_t n, unsigned char m) {
    return GroupWord::generator(GeneratorSymbol::abelian(side, n, m));
}

// A word that is (up to the word problem) a single multiple of one factor's
// 0-generator at a first-set member: the shape the mock oracles understand.
struct CyclicForm {
    Side side;
    std::uint64_t n;
    std::uint64_t index;  // position of n in the first set
    BigInt lambda;
};

std::optional<CyclicForm> as_cyclic_form(SetPairBackend& backend, const GroupWord& word) {
    ReductionReport r = britton_reduce(backend, word);
    if (r.result.has_stable_letter()) return std::nullopt;
    G0NormalForm nf = normalize(backend, r.result);
    if (nf.syllables.size() != 1) return std::nullopt;
    const AbelianElement& s = nf.syllables.front();
    IndexLookup at = backend.index_of(Family::N, s.n, backend.decides_membership() ? 0 : ~0ull);
    if (at.status != IndexLookup::Status::Found) return std::nullopt;
    return CyclicForm{s.side, s.n, at.index, cyclic_coefficient(backend, s, at.index)};
}

}  // namespace

SeparationReport compute_separating_set(ConjugacyOracle& oracle, SetPairBackend& backend,
                                        std::uint64_t range_max) {
    SeparationReport report;
    report.range_max = range_max;
    const bool decides = backend.decides_membership();
    for (std::uint64_t n = 1; n <= range_max; ++n) {
        GroupWord a0 = pair_gen(Side::A, n, 0);
        GroupWord b0 = pair_gen(Side::B, n, 0);
        if (!oracle.is_conjugate(a0, b0)) continue;
        report.set_C.push_back(n);
        ConjugatorHandle g = oracle.find_conjugator(a0, b0);
        if (!oracle.conjugated_equals(a0, g, b0)) {
            throw OracleInconsistent("conjugator for the generator pair at n = " +
                                     std::to_string(n) + " fails its defining equality");
        }
        bool in_a = oracle.conjugated_equals(pair_gen(Side::A, n, 1), g, pair_gen(Side::B, n, 1));
        if (in_a) report.set_A.push_back(n);
        if (!decides) continue;
        if (in_a && backend.is_member(Family::M, n)) {
            report.violations.push_back(
                {n, "second-set member admitted: the two sets are not separated"});
        } else if (!in_a && backend.is_member(Family::N, n)) {
            report.violations.push_back(
                {n, "first-set member rejected: its conjugator must match the index-1 pair"});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// oracles

FaithfulMockOracle::FaithfulMockOracle(SetPairBackend& backend) : backend_(backend) {
    if (!backend.decides_membership()) {
        throw UndecidableBackend(
            "faithful oracle needs decidable membership (mock or explicit lists)");
    }
}

bool FaithfulMockOracle::is_conjugate(const GroupWord& g, const GroupWord& h) {
    if (are_equal(backend_, g, h)) return true;
    auto cg = as_cyclic_form(backend_, g);
    auto ch = as_cyclic_form(backend_, h);
    // Across the two families the stable letter at n's index conjugates the
    // whole cyclic factor; same-family distinct elements stay separated.
    return cg && ch && cg->n == ch->n && cg->side != ch->side && cg->lambda == ch->lambda;
}

ConjugatorHandle FaithfulMockOracle::find_conjugator(const GroupWord& g, const GroupWord& h) {
    if (are_equal(backend_, g, h)) return {0, GroupWord{}};
    auto cg = as_cyclic_form(backend_, g);
    auto ch = as_cyclic_form(backend_, h);
    if (cg && ch && cg->n == ch->n && cg->side != ch->side && cg->lambda == ch->lambda) {
        BigInt exp = cg->side == Side::A ? 1 : -1;  // t maps the A side onto the B side
        return {cg->index, GroupWord::generator(GeneratorSymbol::stable(cg->index), exp)};
    }
    throw PreconditionViolated("find_conjugator: the words were not reported conjugate");
}

bool FaithfulMockOracle::conjugated_equals(const GroupWord& x, const ConjugatorHandle& c,
                                           const GroupWord& y) {
    return are_equal(backend_, c.word.inverse() * x * c.word, y);
}

ConjugatorHandle AllFalseOracle::find_conjugator(const GroupWord&, const GroupWord&) {
    throw PreconditionViolated("find_conjugator: oracle denies every conjugacy");
}

bool AdversarialOracle::lies_about(const GroupWord& g, const GroupWord& h, std::uint64_t* n_out) {
    // Claim the plain generator pairs of second-set members - a fragment the
    // faithful logic never affirms, and one no genuine conjugator supports.
    auto single = [&](const GroupWord& w, Side side) -> std::optional<std::uint64_t> {
        if (w.size() != 1) return std::nullopt;
        const Letter& l = w.letters().front();
        if (l.sym.kind != GeneratorSymbol::Kind::Abelian || l.sym.side != side || l.sym.m != 0 ||
            l.exp != 1) {
            return std::nullopt;
        }
        return l.sym.n;
    };
    auto na = single(g, Side::A);
    auto nb = single(h, Side::B);
    if (!na || !nb || *na != *nb || !backend_.is_member(Family::M, *na)) return false;
    if (n_out) *n_out = *na;
    return true;
}

bool AdversarialOracle::is_conjugate(const GroupWord& g, const GroupWord& h) {
    if (FaithfulMockOracle::is_conjugate(g, h)) return true;
    return lies_about(g, h, nullptr);
}

ConjugatorHandle AdversarialOracle::find_conjugator(const GroupWord& g, const GroupWord& h) {
    std::uint64_t n = 0;
    if (lies_about(g, h, &n)) return {kFakeIdBase + n, GroupWord{}};
    return FaithfulMockOracle::find_conjugator(g, h);
}

bool AdversarialOracle::conjugated_equals(const GroupWord& x, const ConjugatorHandle& c,
                                          const GroupWord& y) {
    if (c.id >= kFakeIdBase) return true;  // the lie stays self-consistent
    return FaithfulMockOracle::conjugated_equals(x, c, y);
}

}  // namespace gtower
