#include <algorithm>
#include <numeric>

#include "groundedq/crystal.hpp"

namespace gq {

Partition shape(const LabelledDiagram& d) {
    Partition p;
    for (auto& r : d.rows) p.push_back(static_cast<int>(r.size()));
    return p;
}

std::string diagram_key(const LabelledDiagram& d) {
    std::string k;
    for (size_t i = 0; i < d.rows.size(); ++i) k += (i ? "/" : "") + d.rows[i];
    return k;
}

bool diagram_valid(const LabelledDiagram& d) {
    for (size_t r = 0; r < d.rows.size(); ++r) {
        const auto& row = d.rows[r];
        if (row.empty()) return false;
        if (r && row.size() > d.rows[r - 1].size()) return false;
        for (size_t c = 0; c < row.size(); ++c) {
            const char x = row[c];
            if (x != 'a' && x != 'b' && x != 'c') return false;
            const bool even_col = (c + 1) % 2 == 0;
            if (even_col != (x == 'b')) return false;
        }
    }
    return true;
}

Arrow cell_colour(const LabelledDiagram& d, int row, int col) {
    const char x = d.rows[row - 1][col - 1];
    if (x == 'a') return Arrow::green;
    if (x == 'c') return Arrow::blue;
    const char left = col >= 2 ? d.rows[row - 1][col - 2] : 'b';
    if (left == 'a') return Arrow::blue;
    if (left == 'c') return Arrow::green;
    throw std::logic_error("labelled diagram: b-cell without an a/c neighbour");
}

namespace {

struct DCorner {
    Corner at;
    char label = 0;  // for addable corners
};

// Each row acts through its last label as an element of the level-2 perfect
// crystal a -> b -> c (blue) / c -> b -> a (green): the "down" end gives two
// addable corners, b gives a removable then an addable one, the "up" end two
// removable ones. The ground contributes one addable corner (a new row) and is
// read first, then the rows bottom to top.
void row_corners(char last, int row, int len, Arrow a, std::vector<DCorner>& out) {
    const char lo = a == Arrow::blue ? 'a' : 'c';
    const char hi = a == Arrow::blue ? 'c' : 'a';
    const Corner add{row, len + 1, true}, rem{row, len, false};
    if (last == lo) {
        out.push_back({add, 'b'});
        out.push_back({add, 'b'});
    } else if (last == 'b') {
        out.push_back({rem, 0});
        out.push_back({add, hi});
    } else {
        out.push_back({rem, 0});
        out.push_back({rem, 0});
    }
}

std::vector<DCorner> grounded2_corners(const LabelledDiagram& d, Arrow a) {
    if (!diagram_valid(d)) throw usage_error("grounded2: invalid labelled diagram " + diagram_key(d));
    const int l = static_cast<int>(d.rows.size());
    std::vector<DCorner> cs;
    cs.push_back({{l + 1, 1, true}, a == Arrow::blue ? 'c' : 'a'});
    for (int r = l; r >= 1; --r) row_corners(d.rows[r - 1].back(), r, static_cast<int>(d.rows[r - 1].size()), a, cs);
    return cs;
}

}  // namespace

std::string grounded2_brackets(const LabelledDiagram& d, Arrow a) {
    std::string b;
    for (const auto& c : grounded2_corners(d, a)) b += c.at.addable ? '(' : ')';
    return b;
}

std::optional<LabelledDiagram> grounded2_arrow(const LabelledDiagram& d, Arrow a) {
    const int l = static_cast<int>(d.rows.size());
    const auto cs = grounded2_corners(d, a);
    std::vector<Corner> seq;
    for (auto& c : cs) seq.push_back(c.at);
    auto i = first_unmatched(seq);
    if (!i) return std::nullopt;
    LabelledDiagram r = d;
    const auto& c = cs[*i];
    if (c.at.row == l + 1)
        r.rows.push_back(std::string(1, c.label));
    else
        r.rows[c.at.row - 1].push_back(c.label);
    if (!diagram_valid(r) || canonical_diagram(diagram_to_grounded(r)).rows != r.rows)
        throw std::logic_error("grounded2: arrow left the canonical diagrams at " + diagram_key(d));
    return r;
}

GroundedPartition diagram_to_grounded(const LabelledDiagram& d) {
    GroundedPartition g{2, colour_index('b'), {}};
    for (auto it = d.rows.rbegin(); it != d.rows.rend(); ++it)
        g.parts.push_back({static_cast<int>(it->size()), colour_index(it->back())});
    return g;
}

LabelledDiagram canonical_diagram(const GroundedPartition& g) {
    const auto& ps = g.parts;  // increasing; bottom row first
    const int l = static_cast<int>(ps.size());
    std::vector<std::string> bottom_up(l);
    for (int t = 0; t < l; ++t) bottom_up[t].assign(ps[t].v, '?');
    const int width = l ? ps.back().v : 0;
    for (int j = 1; j <= width; ++j) {
        if (j % 2 == 0) {
            for (int t = 0; t < l; ++t)
                if (ps[t].v >= j) bottom_up[t][j - 1] = 'b';
            continue;
        }
        auto first = std::find_if(ps.begin(), ps.end(), [j](const Part& p) { return p.v == j; });
        if (first == ps.end() || first->c == colour_index('b'))
            throw usage_error("canonical_diagram: no a/c part equal to " + std::to_string(j));
        char lab = colour_char(first->c);
        for (int t = 0; t < l; ++t) {
            if (ps[t].v < j) continue;
            bottom_up[t][j - 1] = lab;
            lab = lab == 'a' ? 'c' : 'a';
        }
    }
    LabelledDiagram d;
    d.rows.assign(bottom_up.rbegin(), bottom_up.rend());
    return d;
}

SplitS1S2 split_s1_s2(const LabelledDiagram& d, bool stop_at_failure) {
    SplitS1S2 s;
    const int l = static_cast<int>(d.rows.size());
    s.s1_start.assign(l, 0);
    int prev = 0;
    for (int r = 0; r < l; ++r) {
        const auto& row = d.rows[r];
        int start = 0;
        for (int c = prev + 1; c <= static_cast<int>(row.size()); ++c)
            if (row[c - 1] == 'a') {
                start = c;
                break;
            }
        if (!start) {
            if (stop_at_failure) break;
            continue;
        }
        s.s1_start[r] = start;
        s.s1_size += static_cast<int>(row.size()) - start + 1;
        prev = start;
    }
    const int width = l ? static_cast<int>(d.rows[0].size()) : 0;
    s.s2_columns.assign(width, 0);
    for (int r = 0; r < l; ++r)
        for (int c = 1; c <= static_cast<int>(d.rows[r].size()); ++c)
            if (!(s.s1_start[r] && c >= s.s1_start[r])) s.s2_columns[c - 1]++;
    s.s2_size = std::accumulate(s.s2_columns.begin(), s.s2_columns.end(), 0);
    return s;
}

std::optional<Partition> lambda2_of(const SplitS1S2& s) {
    Partition cols;
    bool ended = false;
    for (int h : s.s2_columns) {
        if (h == 0) {
            ended = true;
            continue;
        }
        if (ended || (!cols.empty() && h > cols.back())) return std::nullopt;
        cols.push_back(h);
    }
    return conjugate(cols);
}

std::vector<Stripe> stripes(const LabelledDiagram& d, const SplitS1S2& s) {
    const int l = static_cast<int>(d.rows.size());
    auto in_s1 = [&](int r, int c) {
        return r >= 1 && r <= l && c >= 1 && c <= static_cast<int>(d.rows[r - 1].size()) && s.s1_start[r - 1] &&
               c >= s.s1_start[r - 1];
    };
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= l; ++r)
        for (int c = 1; c <= static_cast<int>(d.rows[r - 1].size()); ++c)
            if (in_s1(r, c)) {
                id[{r, c}] = static_cast<int>(cells.size());
                cells.push_back({r, c});
            }
    std::vector<int> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [r, c] : cells) {
        const Arrow col = cell_colour(d, r, c);
        for (auto [dr, dc] : {std::pair{0, -1}, std::pair{1, -1}}) {
            const int r2 = r + dr, c2 = c + dc;
            if (!in_s1(r2, c2) || cell_colour(d, r2, c2) != col) continue;
            parent[find(id[{r, c}])] = find(id[{r2, c2}]);
        }
    }
    // component -> (min column, min row, colour, size)
    std::map<int, std::array<int, 4>> comp;
    for (size_t i = 0; i < cells.size(); ++i) {
        auto [r, c] = cells[i];
        auto it = comp.find(find(static_cast<int>(i)));
        if (it == comp.end()) {
            comp[find(static_cast<int>(i))] = {c, r, static_cast<int>(cell_colour(d, r, c)), 1};
        } else {
            auto& v = it->second;
            if (c < v[0] || (c == v[0] && r < v[1])) {
                v[0] = c;
                v[1] = r;
            }
            v[3]++;
        }
    }
    std::vector<std::array<int, 4>> list;
    for (auto& [k, v] : comp) list.push_back(v);
    std::sort(list.begin(), list.end());
    std::vector<Stripe> out;
    for (auto& v : list) out.push_back({static_cast<Arrow>(v[2]), v[3]});
    return out;
}

Partition lambda1_from_stripes(const std::vector<Stripe>& st) {
    Partition p;
    for (const auto& s : st) {
        for (int k = 0; k < s.size; ++k) {
            std::optional<Corner> best;
            for (const auto& c : corners(p, s.colour, true))
                if (c.addable && (!best || c.row > best->row)) best = c;
            if (best->row == static_cast<int>(p.size()) + 1)
                p.push_back(1);
            else
                p[best->row - 1]++;
        }
    }
    return p;
}

}  // namespace gq
