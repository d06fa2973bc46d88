#include "groundedq/grounded.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "groundedq/qfunc.hpp"

namespace gq {

char colour_char(int c) { return static_cast<char>('a' + c); }

int colour_index(char ch) {
    if (ch < 'a' || ch > 'd') throw usage_error(std::string("unknown colour: ") + ch);
    return ch - 'a';
}

static void check_level(int n) {
    if (n < 1 || n > kMaxLevel) throw usage_error("level must be in 1.." + std::to_string(kMaxLevel));
}

int diff_entry(int n, int new_colour, int old_colour) {
    check_level(n);
    if (new_colour < 0 || new_colour > n || old_colour < 0 || old_colour > n)
        throw usage_error("colour out of range for level " + std::to_string(n));
    return std::abs(n - new_colour - old_colour);
}

bool validate(const GroundedPartition& g) {
    if (g.level < 1 || g.level > kMaxLevel || g.ground < 0 || g.ground > g.level) return false;
    int pv = 0, pc = g.ground;
    for (const auto& p : g.parts) {
        if (p.c < 0 || p.c > g.level || p.v < 1) return false;
        if (p.v - pv != diff_entry(g.level, p.c, pc)) return false;
        pv = p.v;
        pc = p.c;
    }
    return true;
}

namespace {

void dfs(int n, int budget, int pv, int pc, GroundedPartition& cur,
         const std::function<void(const GroundedPartition&)>& f) {
    f(cur);
    for (int c = 0; c <= n; ++c) {
        const int v = pv + diff_entry(n, c, pc);
        if (v < 1 || v > budget) continue;
        cur.parts.push_back({v, c});
        dfs(n, budget - v, v, c, cur, f);
        cur.parts.pop_back();
    }
}

}  // namespace

void for_each_grounded(int n, int ground, int max_weight, const std::function<void(const GroundedPartition&)>& f) {
    check_level(n);
    if (ground < 0 || ground > n) throw usage_error("ground colour out of range for the level");
    if (max_weight < 0) throw usage_error("max weight must be nonnegative");
    GroundedPartition cur{n, ground, {}};
    dfs(n, max_weight, 0, ground, cur, f);
}

std::vector<GroundedPartition> enumerate(int n, int ground, int max_weight) {
    std::vector<std::vector<GroundedPartition>> by_weight(max_weight + 1);
    for_each_grounded(n, ground, max_weight, [&](const GroundedPartition& g) { by_weight[weight(g)].push_back(g); });
    std::vector<GroundedPartition> out;
    for (auto& b : by_weight)
        for (auto& g : b) out.push_back(std::move(g));
    return out;
}

GroundedPartition swap_colours(const GroundedPartition& g) {
    GroundedPartition r = g;
    r.ground = g.level - g.ground;
    for (auto& p : r.parts) p.c = g.level - p.c;
    return r;
}

int weight(const GroundedPartition& g) {
    int s = 0;
    for (auto& p : g.parts) s += p.v;
    return s;
}

GroundedStats stats(const GroundedPartition& g) {
    GroundedStats s;
    for (auto& p : g.parts) {
        s.weight += p.v;
        s.odd_count += p.v % 2;
        s.colour_word.push_back(colour_char(p.c));
    }
    return s;
}

Series enumeration_gf(int n, int ground, int order) {
    Series r(order);
    for_each_grounded(n, ground, order, [&](const GroundedPartition& g) { r[weight(g)] += 1; });
    return r;
}

BiSeries enumeration_odd_gf(int n, int ground, Orders o) {
    BiSeries r(o);
    for_each_grounded(n, ground, o.q, [&](const GroundedPartition& g) {
        auto s = stats(g);
        if (s.odd_count <= o.t) r.at(s.odd_count, s.weight) += 1;
    });
    return r;
}

std::string to_string(const GroundedPartition& g) {
    if (g.parts.empty()) return std::string("0_") + colour_char(g.ground);
    std::string s;
    for (size_t i = 0; i < g.parts.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(g.parts[i].v) + "_" + colour_char(g.parts[i].c);
    }
    return s;
}

std::string to_compact(const GroundedPartition& g) {
    std::string s;
    for (auto& p : g.parts) s += std::to_string(p.v) + colour_char(p.c);
    return s;
}

GroundedPartition parse_grounded(const std::string& s, int level, int ground) {
    GroundedPartition g{level, ground, {}};
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw usage_error("bad grounded partition: " + s);
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        if (i < s.size() && s[i] == '_') ++i;
        if (i >= s.size()) throw usage_error("missing colour in: " + s);
        const int c = colour_index(s[i++]);
        if (v == 0) {
            if (!g.parts.empty() || c != ground) throw usage_error("0 is only allowed as the ground: " + s);
            continue;
        }
        g.parts.push_back({v, c});
    }
    return g;
}

}  // namespace gq
