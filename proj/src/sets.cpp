#include "gtower/sets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace gtower {

std::uint64_t SetPairBackend::element_at(Family f, std::uint64_t i) {
    if (i == 0) throw InvalidIndex("element_at: indices are 1-based");
    if (auto v = try_element_at(f, i)) return *v;
    if (enumeration_complete(f)) {
        throw BudgetExhausted(std::string("enumeration of ") + family_name(f) +
                              " is complete and shorter than index " + std::to_string(i));
    }
    throw BudgetExhausted(std::string("element ") + std::to_string(i) + " of " + family_name(f) +
                          " not enumerated within the step budget");
}

bool SetPairBackend::check_index(Family f, std::uint64_t n, std::uint64_t x) {
    if (x == 0) throw InvalidIndex("check_index: indices are 1-based");
    if (auto v = try_element_at(f, x)) return *v == n;
    if (enumeration_complete(f)) return false;  // the enumeration provably ends before x
    throw BudgetExhausted(std::string("membership of ") + std::to_string(n) + " at index " +
                          std::to_string(x) + " of " + family_name(f) +
                          " unresolved within the step budget");
}

bool SetPairBackend::is_member(Family, std::uint64_t) {
    throw UndecidableBackend("backend only semi-decides membership");
}

// ---------------------------------------------------------------------------
// mock

std::optional<std::uint64_t> MockBackend::try_element_at(Family f, std::uint64_t i) {
    if (i == 0) throw InvalidIndex("element_at: indices are 1-based");
    return f == Family::N ? 4 * i : 4 * i - 2;
}

bool MockBackend::is_member(Family f, std::uint64_t n) {
    return f == Family::N ? (n > 0 && n % 4 == 0) : (n % 4 == 2);
}

IndexLookup MockBackend::index_of(Family f, std::uint64_t n, std::uint64_t) {
    if (!is_member(f, n)) return IndexLookup::absent();
    return IndexLookup::found(f == Family::N ? n / 4 : (n + 2) / 4);
}

// ---------------------------------------------------------------------------
// explicit lists

ExplicitListBackend::ExplicitListBackend(std::vector<std::uint64_t> n_list,
                                         std::vector<std::uint64_t> m_list)
    : n_list_(std::move(n_list)), m_list_(std::move(m_list)) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto* lst : {&n_list_, &m_list_}) {
        for (std::uint64_t v : *lst) {
            if (v == 0) throw std::invalid_argument("set elements must be positive");
            if (!seen.insert(v).second) {
                throw std::invalid_argument("set lists must be duplicate-free and disjoint; " +
                                            std::to_string(v) + " repeats");
            }
        }
    }
}

ExplicitListBackend ExplicitListBackend::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set-pair file: " + path);
    std::string line;
    std::vector<std::vector<std::uint64_t>> lists;
    while (std::getline(in, line) && lists.size() < 2) {
        std::istringstream ls(line);
        std::vector<std::uint64_t> vals;
        long long v;
        while (ls >> v) {
            if (v <= 0) throw std::invalid_argument("set-pair file: elements must be positive");
            vals.push_back(static_cast<std::uint64_t>(v));
        }
        if (!ls.eof()) throw std::invalid_argument("set-pair file: non-integer token in " + path);
        lists.push_back(std::move(vals));
    }
    if (lists.size() < 2) {
        throw std::invalid_argument("set-pair file needs two lines (first set, second set)");
    }
    return ExplicitListBackend(std::move(lists[0]), std::move(lists[1]));
}

std::optional<std::uint64_t> ExplicitListBackend::try_element_at(Family f, std::uint64_t i) {
    if (i == 0) throw InvalidIndex("element_at: indices are 1-based");
    const auto& l = list(f);
    if (i > l.size()) return std::nullopt;
    return l[i - 1];
}

bool ExplicitListBackend::is_member(Family f, std::uint64_t n) {
    const auto& l = list(f);
    return std::find(l.begin(), l.end(), n) != l.end();
}

IndexLookup ExplicitListBackend::index_of(Family f, std::uint64_t n, std::uint64_t) {
    const auto& l = list(f);
    auto it = std::find(l.begin(), l.end(), n);
    if (it == l.end()) return IndexLookup::absent();
    return IndexLookup::found(static_cast<std::uint64_t>(it - l.begin()) + 1);
}

// ---------------------------------------------------------------------------
// register machines

Instruction Instruction::inc(std::uint32_t reg, std::uint32_t next) {
    return {Op::Inc, reg, next, 0};
}
Instruction Instruction::dec_or_branch(std::uint32_t reg, std::uint32_t next,
                                       std::uint32_t branch) {
    return {Op::DecOrBranch, reg, next, branch};
}
Instruction Instruction::halt_accept() { return {Op::HaltAccept, 0, 0, 0}; }
Instruction Instruction::halt_reject() { return {Op::HaltReject, 0, 0, 0}; }

RegisterMachine::RegisterMachine(Program program, const BigInt& input)
    : program_(std::move(program)) {
    if (program_.empty()) throw std::invalid_argument("register machine: empty program");
    for (const auto& ins : program_) {
        auto in_range = [&](std::uint32_t pc) { return pc < program_.size(); };
        bool ok = true;
        switch (ins.op) {
            case Instruction::Op::Inc: ok = in_range(ins.next); break;
            case Instruction::Op::DecOrBranch: ok = in_range(ins.next) && in_range(ins.branch); break;
            default: break;
        }
        if (!ok) throw std::invalid_argument("register machine: jump target out of range");
    }
    if (input < 0) throw std::invalid_argument("register machine: input must be non-negative");
    regs_.push_back(input);
}

const BigInt& RegisterMachine::reg(std::uint32_t r) const {
    static const BigInt zero = 0;
    return r < regs_.size() ? regs_[r] : zero;
}

void RegisterMachine::step() {
    if (halted()) return;
    const Instruction& ins = program_[pc_];
    if (ins.op != Instruction::Op::HaltAccept && ins.op != Instruction::Op::HaltReject &&
        ins.reg >= regs_.size()) {
        regs_.resize(ins.reg + 1, BigInt(0));
    }
    switch (ins.op) {
        case Instruction::Op::Inc:
            regs_[ins.reg] += 1;
            pc_ = ins.next;
            break;
        case Instruction::Op::DecOrBranch:
            if (regs_[ins.reg] > 0) {
                regs_[ins.reg] -= 1;
                pc_ = ins.next;
            } else {
                pc_ = ins.branch;
            }
            break;
        case Instruction::Op::HaltAccept: status_ = Status::Accepted; break;
        case Instruction::Op::HaltReject: status_ = Status::Rejected; break;
    }
}

// ---------------------------------------------------------------------------
// dovetailing

DovetailBackend::DovetailBackend(std::vector<Program> table, std::uint64_t step_budget)
    : budget_(step_budget) {
    machines_.reserve(table.size());
    for (std::size_t e = 0; e < table.size(); ++e) {
        // Self-application: machine at position e+1 runs on input e+1, so the
        // two enumerations consist of machine codes and stay disjoint.
        machines_.emplace_back(std::move(table[e]), BigInt(e + 1));
    }
    running_ = machines_.size();
}

std::vector<Program> DovetailBackend::bundled_table() {
    using I = Instruction;
    std::vector<Program> table;
    table.push_back({I::halt_accept()});
    table.push_back({I::halt_reject()});
    table.push_back({I::inc(0, 0)});  // spins forever
    table.push_back({I::dec_or_branch(0, 0, 1), I::halt_accept()});
    table.push_back({I::dec_or_branch(0, 0, 1), I::halt_reject()});
    return table;
}

bool DovetailBackend::advance_one(std::vector<Enumerated>* out) {
    if (running_ == 0) return false;
    for (;;) {
        std::uint64_t limit = std::min<std::uint64_t>(round_, machines_.size());
        while (pos_ < limit) {
            std::size_t e = pos_++;
            RegisterMachine& mach = machines_[e];
            if (mach.halted()) continue;
            mach.step();
            ++executed_;
            if (mach.halted()) {
                --running_;
                auto& prefix =
                    mach.status() == RegisterMachine::Status::Accepted ? n_prefix_ : m_prefix_;
                prefix.push_back(e + 1);
                if (out) {
                    out->push_back({mach.status() == RegisterMachine::Status::Accepted
                                        ? Family::N
                                        : Family::M,
                                    prefix.size(), e + 1});
                }
            }
            return true;
        }
        ++round_;
        pos_ = 0;
    }
}

std::vector<Enumerated> DovetailBackend::dovetail_step(std::uint64_t steps) {
    std::vector<Enumerated> fresh;
    while (steps-- > 0 && advance_one(&fresh)) {
    }
    return fresh;
}

std::optional<std::uint64_t> DovetailBackend::try_element_at(Family f, std::uint64_t i) {
    if (i == 0) throw InvalidIndex("element_at: indices are 1-based");
    const auto& pre = prefix(f);
    while (pre.size() < i && executed_ < budget_ && advance_one(nullptr)) {
    }
    if (pre.size() < i) return std::nullopt;
    return pre[i - 1];
}

IndexLookup DovetailBackend::index_of(Family f, std::uint64_t n, std::uint64_t budget) {
    const auto& pre = prefix(f);
    auto scan = [&]() -> std::optional<std::uint64_t> {
        for (std::size_t k = 0; k < pre.size(); ++k) {
            if (pre[k] == n) return k + 1;
        }
        return std::nullopt;
    };
    for (;;) {
        if (auto i = scan()) return IndexLookup::found(*i);
        if (running_ == 0) return IndexLookup::absent();  // enumeration complete
        if (executed_ >= budget || !advance_one(nullptr)) return IndexLookup::unknown();
    }
}

}  // namespace gtower
