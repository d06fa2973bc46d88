#include "groundedq/partitions.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "groundedq/series.hpp"

namespace gq {

static const char* kMacron = "\u0304";
static const char* kOverline = "\u0305";

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int weight(const Overpartition& p) {
    int s = 0;
    for (auto& x : p) s += x.v;
    return s;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

bool is_distinct(const Partition& p) {
    return is_partition(p) && std::adjacent_find(p.begin(), p.end()) == p.end();
}

bool is_overpartition(const Overpartition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].v < 1) return false;
        if (i && p[i].v > p[i - 1].v) return false;
        if (p[i].over && i && p[i - 1].v == p[i].v) return false;
    }
    return true;
}

Partition values(const Overpartition& p) {
    Partition r;
    for (auto& x : p) r.push_back(x.v);
    return r;
}

Partition conjugate(const Partition& p) {
    Partition r;
    if (p.empty()) return r;
    for (int c = 1; c <= p.front(); ++c) {
        int h = 0;
        while (h < static_cast<int>(p.size()) && p[h] >= c) ++h;
        r.push_back(h);
    }
    return r;
}

std::pair<int, Partition> staircase_split(const Partition& p, bool odd) {
    if (!is_partition(p)) throw usage_error("not a partition: " + to_string(p));
    const int n = static_cast<int>(p.size());
    const int gap = odd ? 2 : 1;
    for (int i = 0; i + 1 < n; ++i)
        if (p[i] - p[i + 1] < gap) throw usage_error("staircase_split: gap condition fails in " + to_string(p));
    if (odd && n && p.back() < 1) throw usage_error("staircase_split: bad smallest part");
    Partition rest;
    for (int i = 0; i < n; ++i) {
        const int stair = odd ? 2 * (n - i) - 1 : n - i;
        if (p[i] - stair > 0) rest.push_back(p[i] - stair);
    }
    return {n, rest};
}

Partition staircase_join(int n, const Partition& rest, bool odd) {
    if (static_cast<int>(rest.size()) > n) throw usage_error("staircase_join: rest has too many parts");
    Partition p;
    for (int i = 0; i < n; ++i) {
        const int stair = odd ? 2 * (n - i) - 1 : n - i;
        p.push_back(stair + (i < static_cast<int>(rest.size()) ? rest[i] : 0));
    }
    return p;
}

namespace {

// parts in [1, max], weakly decreasing (or strictly), lexicographically decreasing
void gen(int n, int max, bool distinct, int step_min, Partition& cur, std::vector<Partition>& out,
         const std::function<bool(int)>& allowed) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = std::min(n, max); v >= 1; --v) {
        if (!allowed(v)) continue;
        cur.push_back(v);
        gen(n - v, distinct ? v - step_min : v, distinct, step_min, cur, out, allowed);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw usage_error("weight must be nonnegative");
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, false, 0, cur, out, [](int) { return true; });
    return out;
}

std::vector<Partition> enumerate_distinct(int n) {
    if (n < 0) throw usage_error("weight must be nonnegative");
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, true, 1, cur, out, [](int) { return true; });
    return out;
}

std::vector<Overpartition> enumerate_odd_overpartitions(int n, int k) {
    if (n < 0 || k < 0) throw usage_error("weight and length must be nonnegative");
    std::vector<Partition> base;
    Partition cur;
    gen(n, n, false, 0, cur, base, [](int v) { return v % 2 == 1; });
    std::vector<Overpartition> out;
    for (const auto& p : base) {
        if (static_cast<int>(p.size()) != k) continue;
        Partition vals(p.rbegin(), p.rend());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());  // ascending distinct values
        const unsigned d = static_cast<unsigned>(vals.size());
        std::vector<unsigned> masks(1u << d);
        std::iota(masks.begin(), masks.end(), 0u);
        std::stable_sort(masks.begin(), masks.end(),
                         [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
        for (unsigned m : masks) {
            Overpartition o;
            for (size_t i = 0; i < p.size(); ++i) {
                const bool first = i == 0 || p[i - 1] != p[i];
                size_t bit = std::lower_bound(vals.begin(), vals.end(), p[i]) - vals.begin();
                o.push_back({p[i], first && ((m >> bit) & 1u)});
            }
            out.push_back(o);
        }
    }
    return out;
}

std::vector<Partition> enumerate_distinct_even(int n, int k) {
    if (n < 0 || k < 0) throw usage_error("weight and count must be nonnegative");
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n)) {
        int odd = 0;
        bool ok = true;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] % 2) ++odd;
            else if (i && p[i - 1] == p[i]) ok = false;
        }
        if (ok && odd == k) out.push_back(p);
    }
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

std::string to_string(const Overpartition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].v << (p[i].over ? kMacron : "");
    os << ")";
    return os.str();
}

Overpartition parse_overpartition(const std::string& s) {
    Overpartition r;
    size_t i = 0;
    while (i < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        bool over = false;
        if (i < s.size() && s[i] == '\'') {
            over = true;
            ++i;
        } else if (s.compare(i, 2, kMacron) == 0 || s.compare(i, 2, kOverline) == 0) {
            over = true;
            i += 2;
        }
        if (v < 1) throw usage_error("parts must be positive: " + s);
        r.push_back({v, over});
    }
    // Either display order is accepted; a bar belongs to a value, so it moves
    // to the first copy of the decreasing form.
    std::map<int, int, std::greater<int>> count, bars;
    for (auto& x : r) {
        count[x.v]++;
        bars[x.v] += x.over;
    }
    Overpartition out;
    for (auto [v, c] : count) {
        if (bars[v] > 1) throw usage_error("value barred twice: " + s);
        for (int j = 0; j < c; ++j) out.push_back({v, j == 0 && bars[v] == 1});
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    Overpartition o = parse_overpartition(s);
    for (auto& x : o)
        if (x.over) throw usage_error("unexpected bar in partition: " + s);
    return values(o);
}

}  // namespace gq
