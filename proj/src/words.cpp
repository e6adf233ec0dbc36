#include "gtower/words.hpp"

#include <cctype>
#include <utility>

namespace gtower {

GeneratorSymbol GeneratorSymbol::abelian(Side side, std::uint64_t n, unsigned char m) {
    if (n == 0) throw InvalidIndex("factor indices are 1-based");
    if (m > 1) throw InvalidIndex("abelian generator coordinate must be 0 or 1");
    return {Kind::Abelian, side, n, m};
}

GeneratorSymbol GeneratorSymbol::stable(std::uint64_t i) {
    if (i == 0) throw InvalidIndex("stable-letter indices are 1-based");
    return {Kind::Stable, Side::A, i, 0};
}

std::string GeneratorSymbol::str() const {
    if (kind == Kind::Stable) return "t[" + std::to_string(n) + "]";
    std::string s(1, side == Side::A ? 'a' : 'b');
    s += "[" + std::to_string(n) + "," + std::to_string(static_cast<int>(m)) + "]";
    return s;
}

GroupWord::GroupWord(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (auto& l : letters) {
        if (l.exp == 0) continue;
        if (!letters_.empty() && letters_.back().sym == l.sym) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0) letters_.pop_back();
        } else {
            letters_.push_back(std::move(l));
        }
    }
}

GroupWord GroupWord::generator(GeneratorSymbol sym, BigInt exp) {
    GroupWord w;
    if (exp != 0) w.letters_.push_back({sym, std::move(exp)});
    return w;
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        rev.push_back({it->sym, -it->exp});
    }
    GroupWord w;
    w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return GroupWord(std::move(cat));
}

GroupWord GroupWord::pow(std::uint64_t k) const {
    GroupWord acc;
    for (std::uint64_t j = 0; j < k; ++j) acc = acc * *this;
    return acc;
}

BigInt GroupWord::stable_unit_count() const {
    BigInt total = 0;
    for (const auto& l : letters_) {
        if (l.sym.kind == GeneratorSymbol::Kind::Stable) total += abs(l.exp);
    }
    return total;
}

std::uint64_t GroupWord::min_level() const {
    std::uint64_t k = 0;
    for (const auto& l : letters_) {
        if (l.sym.kind == GeneratorSymbol::Kind::Stable && l.sym.n > k) k = l.sym.n;
    }
    return k;
}

bool GroupWord::has_stable_letter() const {
    for (const auto& l : letters_) {
        if (l.sym.kind == GeneratorSymbol::Kind::Stable) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// grammar

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    char take() { return text[pos++]; }
    void expect(char c, const char* what) {
        if (done() || peek() != c) throw ParseError(pos, std::string("expected ") + what);
        ++pos;
    }
    std::string digits(const char* what) {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) throw ParseError(pos, std::string("expected ") + what);
        return std::string(text.substr(start, pos - start));
    }
};

std::uint64_t to_index(const std::string& digits, std::size_t at) {
    try {
        return std::stoull(digits);
    } catch (const std::out_of_range&) {
        throw ParseError(at, "index out of range");
    }
}

Letter scan_letter(Scanner& sc) {
    bool inverted = false;
    if (sc.peek() == '-') {
        inverted = true;
        sc.take();
    }
    if (sc.done()) throw ParseError(sc.pos, "dangling '-'");
    std::size_t at = sc.pos;
    char name = sc.take();
    if (name != 'a' && name != 'b' && name != 't') {
        throw ParseError(at, "expected generator name a, b or t");
    }
    sc.expect('[', "'['");
    std::size_t nat = sc.pos;
    std::uint64_t n = to_index(sc.digits("index"), nat);
    GeneratorSymbol sym{};
    if (name == 't') {
        sc.expect(']', "']'");
        if (n == 0) throw ParseError(nat, "stable-letter indices start at 1");
        sym = GeneratorSymbol::stable(n);
    } else {
        sc.expect(',', "','");
        std::size_t mat = sc.pos;
        std::string ms = sc.digits("coordinate 0 or 1");
        sc.expect(']', "']'");
        if (n == 0) throw ParseError(nat, "factor indices start at 1");
        if (ms != "0" && ms != "1") throw ParseError(mat, "coordinate must be 0 or 1");
        sym = GeneratorSymbol::abelian(name == 'a' ? Side::A : Side::B, n,
                                       static_cast<unsigned char>(ms == "1"));
    }
    BigInt exp = 1;
    if (!sc.done() && sc.peek() == '^') {
        sc.take();
        bool neg = false;
        if (!sc.done() && (sc.peek() == '-' || sc.peek() == '+')) neg = sc.take() == '-';
        std::size_t eat = sc.pos;
        exp = BigInt(sc.digits("exponent"));
        if (neg) exp = -exp;
        (void)eat;
    }
    if (inverted) exp = -exp;
    return {sym, std::move(exp)};
}

}  // namespace

std::vector<Letter> parse_letters(std::string_view text) {
    Scanner sc{text};
    std::vector<Letter> letters;
    for (;;) {
        sc.skip_space();
        if (sc.done()) break;
        letters.push_back(scan_letter(sc));
        if (!sc.done() && !std::isspace(static_cast<unsigned char>(sc.peek()))) {
            throw ParseError(sc.pos, "letters must be whitespace-separated");
        }
    }
    return letters;
}

GroupWord parse_word(std::string_view text) { return GroupWord(parse_letters(text)); }

std::string render_word(const GroupWord& word) {
    std::string out;
    bool first = true;
    for (const auto& l : word.letters()) {
        if (!first) out += ' ';
        first = false;
        out += l.sym.str();
        if (l.exp != 1) {
            out += '^';
            out += l.exp.str();
        }
    }
    return out;
}

}  // namespace gtower
