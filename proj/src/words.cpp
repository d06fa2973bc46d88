#include "groundedq/words.hpp"

#include <algorithm>
#include <set>

namespace gq {

bool is_binary_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

int count_ones(const Word& w) { return static_cast<int>(std::count(w.begin(), w.end(), '1')); }

int maj(const Word& w) {
    int s = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == '1' && w[i + 1] == '0') s += static_cast<int>(i) + 1;
    return s;
}

int mmaj(const Word& w) { return maj(w + "0"); }

bool is_yamanouchi(const Word& w) {
    int bal = 0;
    for (char c : w) {
        bal += c == '0' ? 1 : -1;
        if (bal < 0) return false;
    }
    return true;
}

static void gen(int n, int k, bool yam, int bal, Word& cur, std::vector<Word>& out) {
    if (n == 0 && k == 0) {
        out.push_back(cur);
        return;
    }
    if (n > 0) {
        cur.push_back('0');
        gen(n - 1, k, yam, bal + 1, cur, out);
        cur.pop_back();
    }
    if (k > 0 && (!yam || bal > 0)) {
        cur.push_back('1');
        gen(n, k - 1, yam, bal - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Word> enumerate_words(int n, int k, bool yamanouchi_only) {
    if (n < 0 || k < 0) throw usage_error("word counts must be nonnegative");
    std::vector<Word> out;
    Word cur;
    gen(n, k, yamanouchi_only, 0, cur, out);
    return out;
}

template <class Stat>
static Series stat_gf(int n, int k, bool yam, Stat stat) {
    const int len = n + k;
    Series r(len * (len + 1) / 2);
    for (const auto& w : enumerate_words(n, k, yam)) r[stat(w)] += 1;
    return r;
}

Series mmaj_gf(int n, int k, bool yamanouchi_only) {
    return stat_gf(n, k, yamanouchi_only, [](const Word& w) { return mmaj(w); });
}

Series maj_gf(int n, int k, bool yamanouchi_only) {
    return stat_gf(n, k, yamanouchi_only, [](const Word& w) { return maj(w); });
}

Word fh_map(const Word& w) {
    if (!is_binary_word(w)) throw usage_error("not a binary word: " + w);
    int excess = 0, best = 0;
    size_t at = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
        excess += w[i] == '1' ? 1 : -1;
        if (excess > best) {
            best = excess;
            at = i;
        }
    }
    if (at == w.size()) throw usage_error("fh_map: word is Yamanouchi: " + w);
    Word r = w;
    r[at] = '0';  // a new maximum is always reached by a right step
    return r;
}

FhReport check_fh(int n, int k) {
    FhReport rep;
    rep.n = n;
    rep.k = k;
    std::set<Word> image;
    bool inj = true;
    for (const auto& w : enumerate_words(n, k, false)) {
        if (is_yamanouchi(w)) continue;
        ++rep.domain;
        Word v = fh_map(w);
        if (!image.insert(v).second) inj = false;
        rep.mmaj_shift[mmaj(v) - mmaj(w)]++;
    }
    std::vector<Word> target = k >= 1 ? enumerate_words(n + 1, k - 1, false) : std::vector<Word>{};
    rep.codomain = target.size();
    rep.injective = inj;
    rep.surjective = image == std::set<Word>(target.begin(), target.end());
    return rep;
}

}  // namespace gq
