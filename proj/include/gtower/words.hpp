#pragma once

// Words over the tower alphabet: abelian generators a[n,m] / b[n,m] (two
// families of rank-2 factors, indexed by positive n, with m in {0,1}) and
// stable letters t[i].  A GroupWord is kept freely reduced at the symbol
// level: nonzero exponents, no two adjacent letters with the same symbol.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gtower/bigint.hpp"
#include "gtower/errors.hpp"

namespace gtower {

// Factor family of an abelian generator (the `a` side or the `b` side).
enum class Side : unsigned char { A, B };

inline const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

struct GeneratorSymbol {
    enum class Kind : unsigned char { Abelian, Stable };

    Kind kind;
    Side side;         // Abelian only
    std::uint64_t n;   // factor index (Abelian) or stable-letter index (Stable)
    unsigned char m;   // 0 or 1 (Abelian only)

    static GeneratorSymbol abelian(Side side, std::uint64_t n, unsigned char m);
    static GeneratorSymbol stable(std::uint64_t i);

    bool operator==(const GeneratorSymbol& o) const {
        if (kind != o.kind || n != o.n) return false;
        return kind == Kind::Stable || (side == o.side && m == o.m);
    }
    std::string str() const;  // "a[4,0]", "t[2]"
};

struct Letter {
    GeneratorSymbol sym;
    BigInt exp;

    bool operator==(const Letter&) const = default;
};

class GroupWord {
  public:
    GroupWord() = default;

    // Free-reduces the sequence: zero exponents dropped, adjacent letters
    // with equal symbol merged (cascading).
    explicit GroupWord(std::vector<Letter> letters);

    static GroupWord generator(GeneratorSymbol sym, BigInt exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& rhs) const;
    GroupWord pow(std::uint64_t k) const;  // k-fold product

    bool operator==(const GroupWord&) const = default;

    // Number of unit stable-letter steps (sum of |exp| over stable letters).
    BigInt stable_unit_count() const;

    // Largest stable-letter index occurring, 0 when none: the least tower
    // level whose alphabet contains the word.
    std::uint64_t min_level() const;

    bool has_stable_letter() const;

  private:
    std::vector<Letter> letters_;
};

// Text grammar, shared by the CLI and the serialization helpers.  Tokens are
// whitespace-separated: a[n,m], b[n,m], t[i], each optionally followed by
// ^<integer>; a leading '-' inverts the whole token.  Parsing is lenient
// about spacing, rendering is canonical (single spaces, caret only for
// exponents != 1).  parse_word(render_word(w)) == w, bit for bit.
std::vector<Letter> parse_letters(std::string_view text);  // raw, un-reduced
GroupWord parse_word(std::string_view text);
std::string render_word(const GroupWord& word);

}  // namespace gtower
