#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "treeact/errors.hpp"

namespace treeact {

/// Letters of the genus-2 surface group presentation ⟨a,b,c,d | [a,b][c,d]⟩.
enum class Gen : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

struct Letter {
    Gen g;
    int sign;  // +1 or -1

    Letter inverse() const { return {g, -sign}; }
    bool operator==(const Letter& o) const { return g == o.g && sign == o.sign; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
};

/// Which free factor a generator belongs to: 1 for ⟨a,b⟩, 2 for ⟨c,d⟩.
inline int factor_of(Gen g) { return (g == Gen::a || g == Gen::b) ? 1 : 2; }

using Word = std::vector<Letter>;

/// Text form: lowercase = generator, uppercase = inverse ("A" is a⁻¹).
inline Word parse_word(const std::string& text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        int sign = std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1;
        char lo = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (lo < 'a' || lo > 'd') throw ParseError("expected letter in {a,b,c,d}", i);
        w.push_back({static_cast<Gen>(lo - 'a'), sign});
    }
    return w;
}

inline std::string format_word(const Word& w) {
    std::string s;
    for (const Letter& l : w) {
        char ch = static_cast<char>('a' + static_cast<int>(l.g));
        s += l.sign > 0 ? ch : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    return s;
}

/// Cancel adjacent inverse pairs until none remain.
inline Word free_reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().g == l.g && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Word inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

/// The homomorphism S₂ → F₂ given by a,d ↦ g₁ and b,c ↦ g₂; the relator
/// [a,b][c,d] maps to [g₁,g₂][g₂,g₁] which freely reduces to the empty word,
/// so this is well defined on the surface group. Result letters: 0 = g₁,
/// 1 = g₂, with the sign convention of Letter.
struct FreeLetter {
    int g;  // 0 or 1
    int sign;
    bool operator==(const FreeLetter& o) const { return g == o.g && sign == o.sign; }
};

inline std::vector<FreeLetter> free_image(const Word& w) {
    std::vector<FreeLetter> out;
    for (const Letter& l : w) {
        int g = (l.g == Gen::a || l.g == Gen::d) ? 0 : 1;
        if (!out.empty() && out.back().g == g && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back({g, l.sign});
    }
    return out;
}

}  // namespace treeact
