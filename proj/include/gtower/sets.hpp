#pragma once

// A pair of disjoint, injectively enumerated sets of positive integers is the
// parameter everything else is built over.  Three interchangeable backends:
//
//   mock      - decidable closed forms n_i = 4i, m_i = 4i - 2 (deterministic
//               default for tests),
//   file      - explicit finite lists, treated as the whole sets (closed
//               world, hence decidable),
//   dovetail  - genuine r.e. enumeration by fairly interleaved register
//               machines, each run on its own code; accepting codes join the
//               first set, rejecting ones the second.  Only semi-decidable:
//               callers get "unknown yet" (BudgetExhausted), never a wrong
//               answer.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gtower/bigint.hpp"
#include "gtower/errors.hpp"

namespace gtower {

enum class Family : unsigned char { N, M };

inline const char* family_name(Family f) { return f == Family::N ? "N" : "M"; }

// One freshly enumerated element: value = family's index-th element (1-based).
struct Enumerated {
    Family family;
    std::uint64_t index;
    std::uint64_t value;
};

struct IndexLookup {
    enum class Status : unsigned char { Found, DefinitelyAbsent, Unknown };
    Status status;
    std::uint64_t index = 0;  // meaningful only when status == Found

    static IndexLookup found(std::uint64_t i) { return {Status::Found, i}; }
    static IndexLookup absent() { return {Status::DefinitelyAbsent, 0}; }
    static IndexLookup unknown() { return {Status::Unknown, 0}; }
};

class SetPairBackend {
  public:
    virtual ~SetPairBackend() = default;

    // i-th element (1-based) of the family's enumeration.  Throws
    // BudgetExhausted when the enumeration has not reached i yet.
    std::uint64_t element_at(Family f, std::uint64_t i);

    // Is n the x-th element?  False when the enumeration provably ends before
    // x; BudgetExhausted only when the answer is genuinely still unknown.
    bool check_index(Family f, std::uint64_t n, std::uint64_t x);

    // As element_at, but nullopt instead of throwing.
    virtual std::optional<std::uint64_t> try_element_at(Family f, std::uint64_t i) = 0;

    // Whether membership of arbitrary n is decidable (not merely r.e.).
    virtual bool decides_membership() const = 0;

    // Only when decides_membership(); otherwise throws UndecidableBackend.
    virtual bool is_member(Family f, std::uint64_t n);

    // Search for n in the enumeration.  `budget` bounds the work (total
    // machine steps for the dovetailer); decidable backends ignore it.
    virtual IndexLookup index_of(Family f, std::uint64_t n, std::uint64_t budget) = 0;

    // True when the enumeration of f is provably complete (finite backends
    // after exhaustion); element positions past the end then do not exist.
    virtual bool enumeration_complete(Family f) const = 0;
};

// n_i = 4i, m_i = 4i - 2.
class MockBackend final : public SetPairBackend {
  public:
    std::optional<std::uint64_t> try_element_at(Family f, std::uint64_t i) override;
    bool decides_membership() const override { return true; }
    bool is_member(Family f, std::uint64_t n) override;
    IndexLookup index_of(Family f, std::uint64_t n, std::uint64_t budget) override;
    bool enumeration_complete(Family) const override { return false; }
};

// Two explicit lists, validated positive, duplicate-free and disjoint.
class ExplicitListBackend final : public SetPairBackend {
  public:
    ExplicitListBackend(std::vector<std::uint64_t> n_list, std::vector<std::uint64_t> m_list);

    // Parses two whitespace-separated integer lines (first set, then second).
    static ExplicitListBackend from_file(const std::string& path);

    std::optional<std::uint64_t> try_element_at(Family f, std::uint64_t i) override;
    bool decides_membership() const override { return true; }
    bool is_member(Family f, std::uint64_t n) override;
    IndexLookup index_of(Family f, std::uint64_t n, std::uint64_t budget) override;
    bool enumeration_complete(Family) const override { return true; }

  private:
    const std::vector<std::uint64_t>& list(Family f) const {
        return f == Family::N ? n_list_ : m_list_;
    }
    std::vector<std::uint64_t> n_list_, m_list_;
};

// Counter-machine instruction set: increment, decrement-or-branch, and two
// halting states.  Every instruction names its successor explicitly.
struct Instruction {
    enum class Op : unsigned char { Inc, DecOrBranch, HaltAccept, HaltReject };
    Op op;
    std::uint32_t reg = 0;
    std::uint32_t next = 0;    // successor (Inc; DecOrBranch when reg > 0)
    std::uint32_t branch = 0;  // DecOrBranch successor when reg == 0

    static Instruction inc(std::uint32_t reg, std::uint32_t next);
    static Instruction dec_or_branch(std::uint32_t reg, std::uint32_t next, std::uint32_t branch);
    static Instruction halt_accept();
    static Instruction halt_reject();
};

using Program = std::vector<Instruction>;

class RegisterMachine {
  public:
    enum class Status : unsigned char { Running, Accepted, Rejected };

    // Input goes to register 0.  Programs must be nonempty with in-range
    // successors (checked here).
    RegisterMachine(Program program, const BigInt& input);

    Status status() const { return status_; }
    bool halted() const { return status_ != Status::Running; }
    void step();  // deterministic; no-op once halted
    const BigInt& reg(std::uint32_t r) const;

  private:
    Program program_;
    std::vector<BigInt> regs_;
    std::uint32_t pc_ = 0;
    Status status_ = Status::Running;
};

class DovetailBackend final : public SetPairBackend {
  public:
    // Machine e (1-based position in the table) runs on input e.  The budget
    // caps the total machine steps implicit queries may consume.
    DovetailBackend(std::vector<Program> table, std::uint64_t step_budget);

    // Five small machines: immediate accept, immediate reject, a spinner,
    // count-down-then-accept, count-down-then-reject.
    static std::vector<Program> bundled_table();

    // Advance the fair interleaving by up to `steps` machine steps; returns
    // whatever got newly enumerated.  Ignores the step budget.
    std::vector<Enumerated> dovetail_step(std::uint64_t steps);

    void set_step_budget(std::uint64_t b) { budget_ = b; }
    std::uint64_t step_budget() const { return budget_; }
    std::uint64_t steps_executed() const { return executed_; }
    const std::vector<std::uint64_t>& prefix(Family f) const {
        return f == Family::N ? n_prefix_ : m_prefix_;
    }

    std::optional<std::uint64_t> try_element_at(Family f, std::uint64_t i) override;
    bool decides_membership() const override { return false; }
    IndexLookup index_of(Family f, std::uint64_t n, std::uint64_t budget) override;
    bool enumeration_complete(Family) const override { return running_ == 0; }

  private:
    bool advance_one(std::vector<Enumerated>* out);  // false when all halted

    std::vector<RegisterMachine> machines_;
    std::vector<std::uint64_t> n_prefix_, m_prefix_;
    std::uint64_t round_ = 1;   // round r serves machines 1..min(r, count)
    std::uint64_t pos_ = 0;     // position within the current round
    std::uint64_t executed_ = 0;
    std::uint64_t budget_;
    std::size_t running_;
};

}  // namespace gtower
