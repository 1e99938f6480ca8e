#pragma once

#include <optional>

#include "treeact/word.hpp"

namespace treeact {

/// One block of consecutive letters from a single free factor.
struct Syllable {
    int factor;  // 1 = ⟨a,b⟩, 2 = ⟨c,d⟩
    Word word;   // nonempty, reduced, all letters from that factor
};

/// Normal form of an element of the amalgam ⟨a,b⟩ *_H ⟨c,d⟩ with
/// H = ⟨h⟩, h = aba⁻¹b⁻¹ = dcd⁻¹c⁻¹ (forced by the surface relator).
struct AmalgamNF {
    enum class Kind { Identity, InFactor, Alternating };
    Kind kind;
    int factor = 0;                   // InFactor only
    Word word;                        // InFactor only
    std::vector<Syllable> syllables;  // Alternating only; strictly alternating,
                                      // length >= 2, no syllable in H
};

/// Reduced form of h^k in the letters of the given factor. Powers of the
/// commutator reduce to plain concatenation, so membership in H is a direct
/// pattern match.
inline Word h_power_word(int factor, long long k) {
    static const char* pos[3] = {nullptr, "abAB", "dcDC"};
    static const char* neg[3] = {nullptr, "baBA", "cdCD"};
    Word unit = parse_word(k >= 0 ? pos[factor] : neg[factor]);
    Word out;
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i)
        out.insert(out.end(), unit.begin(), unit.end());
    return out;
}

/// If the reduced single-factor word equals h^k, return k.
inline std::optional<long long> h_power_of(const Word& w, int factor) {
    if (w.empty()) return 0;
    if (w.size() % 4 != 0) return std::nullopt;
    long long k = static_cast<long long>(w.size() / 4);
    if (w == h_power_word(factor, k)) return k;
    if (w == h_power_word(factor, -k)) return -k;
    return std::nullopt;
}

inline std::vector<Syllable> split_syllables(const Word& w) {
    std::vector<Syllable> out;
    for (const Letter& l : w) {
        int f = factor_of(l.g);
        if (out.empty() || out.back().factor != f) out.push_back({f, {}});
        out.back().word.push_back(l);
    }
    return out;
}

/// Solve the word problem: iteratively push syllables that lie in H into the
/// neighboring factor and re-reduce. Each rewrite strictly decreases the
/// syllable count, so this terminates; an alternating form with no H-syllable
/// is nontrivial by the normal form theorem for amalgams.
inline AmalgamNF amalgam_normal_form(const Word& input) {
    Word w = free_reduce(input);
    for (;;) {
        std::vector<Syllable> syl = split_syllables(w);
        if (syl.empty()) return {AmalgamNF::Kind::Identity};
        if (syl.size() == 1) {
            // Canonical form for H elements: keep them in factor 1.
            if (auto k = h_power_of(syl[0].word, syl[0].factor); k && syl[0].factor == 2)
                return {AmalgamNF::Kind::InFactor, 1, h_power_word(1, *k)};
            return {AmalgamNF::Kind::InFactor, syl[0].factor, syl[0].word};
        }
        bool rewrote = false;
        for (std::size_t i = 0; i < syl.size(); ++i) {
            auto k = h_power_of(syl[i].word, syl[i].factor);
            if (!k) continue;
            syl[i].word = h_power_word(3 - syl[i].factor, *k);
            Word next;
            for (const Syllable& s : syl)
                next.insert(next.end(), s.word.begin(), s.word.end());
            w = free_reduce(next);
            rewrote = true;
            break;
        }
        if (!rewrote) {
            AmalgamNF nf{AmalgamNF::Kind::Alternating};
            nf.syllables = std::move(syl);
            return nf;
        }
    }
}

/// Cyclically conjugate an alternating form into the shape γ₁δ₁…γ_lδ_l with
/// γ-syllables in factor 2 and δ-syllables in factor 1. Returns the rotated
/// syllables and a conjugator u with  original = u · rotated · u⁻¹.
struct GammaDeltaForm {
    std::vector<Syllable> syllables;  // even count, starts with factor 2
    Word conjugator;
};

inline GammaDeltaForm to_gamma_delta(const AmalgamNF& nf) {
    if (nf.kind != AmalgamNF::Kind::Alternating) throw NotAlternating();
    std::vector<Syllable> syl = nf.syllables;
    Word conj;
    for (int guard = 0; guard < 1000; ++guard) {
        if (syl.size() % 2 == 0 && syl.front().factor == 2)
            return {std::move(syl), std::move(conj)};
        // rotate: g = s₁·g'·s₁⁻¹ with g' = s₂…s_n·s₁
        Syllable first = syl.front();
        conj = concat(conj, first.word);
        Word rest;
        for (std::size_t i = 1; i < syl.size(); ++i)
            rest.insert(rest.end(), syl[i].word.begin(), syl[i].word.end());
        rest.insert(rest.end(), first.word.begin(), first.word.end());
        AmalgamNF again = amalgam_normal_form(rest);
        if (again.kind != AmalgamNF::Kind::Alternating)
            throw NotAlternating("element is conjugate into a factor");
        syl = again.syllables;
    }
    throw Error("gamma-delta rotation failed to stabilize");
}

inline std::string format_nf(const AmalgamNF& nf) {
    switch (nf.kind) {
        case AmalgamNF::Kind::Identity:
            return "Identity";
        case AmalgamNF::Kind::InFactor:
            return "InFactor(" + std::to_string(nf.factor) + ", " + format_word(nf.word) + ")";
        default: {
            std::string s = "Alternating[";
            for (std::size_t i = 0; i < nf.syllables.size(); ++i) {
                if (i) s += ", ";
                s += "<" + std::to_string(nf.syllables[i].factor) + ":" +
                     format_word(nf.syllables[i].word) + ">";
            }
            return s + "]";
        }
    }
}

}  // namespace treeact
