#pragma once

// Reduced words in a free group F_r. Letters are nonzero ints: +k is the
// k-th generator, -k its inverse. Words are kept freely reduced.
//
// Includes a Nielsen-reduction basis certificate (a tuple of r words is a
// basis of F_r iff elementary Nielsen moves reduce it to the r generators up
// to inversion) and a solver for simultaneous conjugacy.

#include <optional>
#include <vector>

#include "tropmod/graph.hpp"

namespace tropmod {

struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) { reduce(); }

    static Word generator(int k, bool inverse = false) {
        Word w;
        w.letters.push_back(inverse ? -k : k);
        return w;
    }

    void reduce() {
        std::vector<int> out;
        for (int l : letters) {
            if (!out.empty() && out.back() == -l)
                out.pop_back();
            else
                out.push_back(l);
        }
        letters = std::move(out);
    }

    bool trivial() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    Word inverse() const {
        Word w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
        return w;
    }

    bool operator==(const Word& o) const = default;
    bool operator<(const Word& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

inline Word operator*(const Word& a, const Word& b) {
    Word w;
    w.letters = a.letters;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    w.reduce();
    return w;
}

// c^{-1} w c
inline Word conjugate(const Word& w, const Word& c) { return c.inverse() * w * c; }

inline std::string word_string(const Word& w) {
    std::string out;
    for (int l : w.letters) {
        if (!out.empty()) out += ' ';
        out += (l > 0 ? 'a' : 'A');
        out += std::to_string(l > 0 ? l : -l);
    }
    return out;
}

// Parses "a1 A2 a1" (capital = inverse). Whitespace-separated tokens.
inline Word parse_word(const std::string& s, int rank) {
    Word w;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        char c = s[i++];
        if (c != 'a' && c != 'A') throw error("bad word letter: " + s);
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw error("bad word letter index: " + s);
        int k = std::stoi(s.substr(i, j - i));
        if (k < 1 || k > rank) throw error("word letter out of rank: " + s);
        w.letters.push_back(c == 'a' ? k : -k);
        i = j;
    }
    w.reduce();
    return w;
}

// Nielsen reduction: repeatedly replace some w_i by one of w_i w_j^{+-1},
// w_j^{+-1} w_i or w_i^{-1} whenever that strictly lowers the sorted
// multiset of (length, letters) keys. A minimal tuple that generates all of
// F_r must be the standard generators, each exactly once, up to inversion.
inline bool is_free_basis(std::vector<Word> ws, int rank) {
    if (static_cast<int>(ws.size()) != rank) return false;
    auto weight = [&](const std::vector<Word>& t) {
        std::vector<std::pair<std::size_t, std::vector<int>>> m;
        for (const auto& w : t) m.push_back({w.size(), w.letters});
        std::sort(m.begin(), m.end());
        return m;
    };
    auto current = weight(ws);
    for (bool improved = true; improved;) {
        improved = false;
        for (int i = 0; i < rank && !improved; ++i) {
            std::vector<Word> candidates;
            candidates.push_back(ws[i].inverse());
            for (int j = 0; j < rank; ++j) {
                if (j == i) continue;
                candidates.push_back(ws[i] * ws[j]);
                candidates.push_back(ws[i] * ws[j].inverse());
                candidates.push_back(ws[j] * ws[i]);
                candidates.push_back(ws[j].inverse() * ws[i]);
            }
            for (const auto& cand : candidates) {
                Word saved = ws[i];
                ws[i] = cand;
                auto next = weight(ws);
                if (next < current) {
                    current = std::move(next);
                    improved = true;
                    break;
                }
                ws[i] = saved;
            }
        }
    }
    std::vector<int> hit(rank + 1, 0);
    for (const auto& w : ws) {
        if (w.size() != 1) return false;
        ++hit[std::abs(w.letters[0])];
    }
    for (int k = 1; k <= rank; ++k)
        if (hit[k] != 1) return false;
    return true;
}

// Cyclic reduction: w = s * core * s^{-1} with core cyclically reduced.
inline std::pair<Word, Word> cyclic_reduce(const Word& w) {
    Word core = w, prefix;
    while (core.size() >= 2 && core.letters.front() == -core.letters.back()) {
        prefix.letters.push_back(core.letters.front());
        core.letters.erase(core.letters.begin());
        core.letters.pop_back();
    }
    return {core, prefix};
}

// Finds c with c^{-1} from_i c = to_i for all i, if one exists.
inline std::optional<Word> simultaneous_conjugator(const std::vector<Word>& from,
                                                   const std::vector<Word>& to) {
    if (from.size() != to.size()) return std::nullopt;
    auto check_all = [&](const Word& c) {
        for (std::size_t i = 0; i < from.size(); ++i)
            if (conjugate(from[i], c) != to[i]) return false;
        return true;
    };

    int pivot = -1;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i].trivial() != to[i].trivial()) return std::nullopt;
        if (from[i].size() != to[i].size()) return std::nullopt;
        if (!from[i].trivial() && pivot < 0) pivot = static_cast<int>(i);
    }
    if (pivot < 0) return Word{};  // everything trivial; the identity works

    auto [ucore, us] = cyclic_reduce(from[pivot]);
    auto [vcore, vs] = cyclic_reduce(to[pivot]);
    if (ucore.size() != vcore.size()) return std::nullopt;

    // Solutions of c^{-1} u c = v are s z^k d t^{-1}, where d rotates the
    // cyclic word of u onto v and z is the primitive root of u's core.
    Word z = ucore;
    for (std::size_t p = 1; p <= ucore.size() / 2; ++p) {
        if (ucore.size() % p) continue;
        Word cand;
        cand.letters.assign(ucore.letters.begin(), ucore.letters.begin() + p);
        Word power;
        for (std::size_t q = 0; q < ucore.size() / p; ++q) power = power * cand;
        if (power == ucore) {
            z = cand;
            break;
        }
    }

    // Any solution is s z^k d t^{-1} with |k| small relative to the word
    // lengths: larger k forces the conjugated words to grow past the
    // targets. The factor is generous, the words here are short.
    long long span = 8;
    for (const auto& w : from) span += 6 * static_cast<long long>(w.size());
    for (const auto& w : to) span += 6 * static_cast<long long>(w.size());

    for (std::size_t r = 0; r < std::max<std::size_t>(ucore.size(), 1); ++r) {
        Word rotated;
        rotated.letters.assign(ucore.letters.begin() + r, ucore.letters.end());
        rotated.letters.insert(rotated.letters.end(), ucore.letters.begin(),
                               ucore.letters.begin() + r);
        if (rotated != vcore) continue;
        Word d;
        d.letters.assign(ucore.letters.begin(), ucore.letters.begin() + r);
        // c = s z^k d t^{-1}; remaining pairs bound |k|.
        for (long long k = -span; k <= span; ++k) {
            Word zk;
            for (long long q = 0; q < std::llabs(k); ++q) zk = zk * (k > 0 ? z : z.inverse());
            Word c = us * zk * d * vs.inverse();
            if (check_all(c)) return c;
        }
    }
    return std::nullopt;
}

}  // namespace tropmod
