#include <algorithm>

#include "groundedq/crystal.hpp"

namespace gq {

const char* arrow_name(Arrow a) { return a == Arrow::blue ? "blue" : "green"; }

// --- words ----------------------------------------------------------------

static char initial_letter(size_t pos0) { return pos0 % 2 == 0 ? '1' : '0'; }

Word word_normalize(Word p) {
    if (p.size() % 2) p.push_back(initial_letter(p.size()));
    while (p.size() >= 2 && p.compare(p.size() - 2, 2, "10") == 0) p.resize(p.size() - 2);
    return p;
}

std::optional<Word> word_arrow(const Word& prefix, Arrow a) {
    if (!is_binary_word(prefix)) throw usage_error("not a binary word: " + prefix);
    const Word p = word_normalize(prefix);
    // open bracket letter, and the window the matching runs over
    const char open = a == Arrow::blue ? '1' : '0';
    const Word win = a == Arrow::blue ? p : p + '1';
    int depth = 0;
    std::optional<size_t> flip;
    for (size_t i = 0; i < win.size(); ++i) {
        if (win[i] == open) {
            ++depth;
        } else if (depth > 0) {
            --depth;
        } else {
            flip = i;  // unmatched closing bracket; keep the rightmost
        }
    }
    if (!flip) return std::nullopt;
    Word r = p;
    if (*flip == p.size()) {
        r += "00";
    } else {
        r[*flip] = open;
    }
    return word_normalize(r);
}

std::string word_label(const Word& prefix) { return word_normalize(prefix) + "10…"; }

Partition word_to_partition(const Word& prefix) {
    const Word p = word_normalize(prefix);
    std::vector<int> d(p.size());
    for (size_t i = 0; i < p.size(); ++i) d[i] = p[i] != initial_letter(i);
    Partition cols;
    int pos = static_cast<int>(d.size()) - 1;
    while (pos >= 0 && d[pos] == 0) --pos;
    int want = 1;
    while (pos >= 0) {
        cols.push_back(pos + 1);
        want ^= 1;
        --pos;
        while (pos >= 0 && d[pos] != want) --pos;
    }
    return conjugate(cols);
}

Word partition_to_word(const Partition& p) {
    if (!is_conjugate_distinct(p)) throw usage_error("not conjugate-distinct: " + to_string(p));
    const Partition cols = conjugate(p);
    const int len = cols.empty() ? 0 : cols.front();
    Word w;
    for (int i = 1; i <= len; ++i) {
        const int cnt = static_cast<int>(std::count_if(cols.begin(), cols.end(), [i](int c) { return c >= i; }));
        const char init = initial_letter(i - 1);
        w.push_back(cnt % 2 ? (init == '1' ? '0' : '1') : init);
    }
    return word_normalize(w);
}

// --- chequered partitions -------------------------------------------------

bool is_conjugate_distinct(const Partition& p) { return is_partition(p) && is_distinct(conjugate(p)); }

static bool is_green(int row, int col, bool green_top_left) { return ((row + col) % 2 == 0) == green_top_left; }

std::vector<Corner> corners(const Partition& p, Arrow colour, bool green_top_left) {
    std::vector<Corner> out;
    const int l = static_cast<int>(p.size());
    auto keep = [&](int r, int c) { return is_green(r, c, green_top_left) == (colour == Arrow::green); };
    for (int r = 1; r <= l; ++r) {
        const int len = p[r - 1];
        if (r == 1 || p[r - 2] > len)
            if (keep(r, len + 1)) out.push_back({r, len + 1, true});
        if (r == l || p[r] < len)
            if (keep(r, len)) out.push_back({r, len, false});
    }
    if (keep(l + 1, 1)) out.push_back({l + 1, 1, true});
    std::stable_sort(out.begin(), out.end(), [](const Corner& x, const Corner& y) { return x.content() < y.content(); });
    return out;
}

std::optional<size_t> first_unmatched(const std::vector<Corner>& seq) {
    std::vector<size_t> open;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].addable)
            open.push_back(i);
        else if (!open.empty())
            open.pop_back();
    }
    if (open.empty()) return std::nullopt;
    return open.front();
}

static Partition add_cell(Partition p, const Corner& c) {
    if (c.row == static_cast<int>(p.size()) + 1)
        p.push_back(1);
    else
        p[c.row - 1] += 1;
    return p;
}

std::optional<Partition> partition1_arrow(const Partition& p, Arrow a) {
    if (!is_conjugate_distinct(p)) throw usage_error("partition1: not a vertex: " + to_string(p));
    auto seq = corners(p, a, true);
    auto i = first_unmatched(seq);
    if (!i) return std::nullopt;
    return add_cell(p, seq[*i]);
}

std::string partition1_brackets(const Partition& p, Arrow a) {
    std::string b;
    for (const auto& c : corners(p, a, true)) b += c.addable ? '(' : ')';
    return b;
}

std::optional<PartitionPair> pairs2_arrow(const PartitionPair& v, Arrow a) {
    auto s2 = corners(v.second, a, false);
    auto s1 = corners(v.first, a, true);
    std::vector<Corner> seq = s2;
    seq.insert(seq.end(), s1.begin(), s1.end());
    auto i = first_unmatched(seq);
    if (!i) return std::nullopt;
    if (*i < s2.size()) return PartitionPair{v.first, add_cell(v.second, seq[*i])};
    return PartitionPair{add_cell(v.first, seq[*i]), v.second};
}

std::string pair_label(const PartitionPair& v) { return to_string(v.first) + "|" + to_string(v.second); }

}  // namespace gq
