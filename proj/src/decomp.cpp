#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "groundedq/decomp.hpp"
#include "groundedq/identities.hpp"
#include "groundedq/qfunc.hpp"

namespace gq {

namespace {

Word brackets_to_word(const std::string& b) {
    Word w;
    for (char ch : b) w += ch == '(' ? '0' : '1';
    return w;
}

int zeros(const Word& w) { return static_cast<int>(w.size()) - count_ones(w); }

Partition from_columns(const std::vector<int>& cols) {
    std::vector<int> c;
    for (int x : cols)
        if (x > 0) c.push_back(x);
    return conjugate(c);
}

// Removing the bottom two cells of column j (1-based), if that leaves a partition.
std::optional<Partition> remove_domino(const Partition& p, int j) {
    Partition cols = conjugate(p);
    if (j < 1 || j > static_cast<int>(cols.size())) return std::nullopt;
    if (cols[j - 1] < 2) return std::nullopt;
    const int next = j < static_cast<int>(cols.size()) ? cols[j] : 0;
    if (cols[j - 1] - 2 < next) return std::nullopt;
    cols[j - 1] -= 2;
    return from_columns(cols);
}

std::vector<Partition> same_length_removals(const Partition& p, Arrow a) {
    std::vector<Partition> out;
    // The removal has to keep the whole corner word, not only the string
    // length; with the length alone the pivot figures are not pivots.
    const Word fp = fingerprint1(p, a);
    const int width = p.empty() ? 0 : p.front();
    for (int j = 1; j <= width; ++j) {
        auto q = remove_domino(p, j);
        if (!q || !is_conjugate_distinct(*q)) continue;
        if (fingerprint1(*q, a) == fp) out.push_back(*q);
    }
    return out;
}

bool same_poly(const Series& a, const Series& b) {
    const int o = std::max(a.order(), b.order());
    return a.resized(o) == b.resized(o);
}

Series yamanouchi_shifted(int n, int k, int dil, int shift) {
    if (k < 0 || n < k) throw usage_error("pivot gf needs n >= k >= 0");
    const Series y = q_yamanouchi(n, k);
    const int o = dil * y.order();
    return y.resized(o).dilate(dil).resized(o + shift).shifted(shift);
}

}  // namespace

// --- level 1 --------------------------------------------------------------

Word fingerprint1(const Partition& p, Arrow a) { return brackets_to_word(partition1_brackets(p, a)); }

bool is_starting_point1(const Partition& p, Arrow a) { return is_yamanouchi(fingerprint1(p, a)); }

Partition psi(const Word& w) {
    if (!is_binary_word(w) || !is_yamanouchi(w) || w.size() % 2)
        throw usage_error("psi needs an even-length Yamanouchi word: " + w);
    const int m = static_cast<int>(w.size());
    const Word w0 = w + '0';
    std::vector<int> desc, asc;
    for (int i = m; i >= 1; --i) {
        if (w0[i - 1] == '1' && w0[i] == '0') desc.push_back(i);
        if (i < m && w[i - 1] == '0' && w[i] == '1') asc.push_back(i);
    }
    std::vector<int> d;
    for (size_t i = 0; i < std::max(desc.size(), asc.size()); ++i) {
        if (i < desc.size()) d.push_back(desc[i]);
        if (i < asc.size()) d.push_back(asc[i]);
    }
    // staircase rows m-1, ..., 1, then diagonal j puts a cell in row m+j-c of column c
    std::vector<int> rows(std::max(0, m - 1));
    for (int r = 1; r < m; ++r) rows[r - 1] = m - r;
    for (size_t j = 1; j <= d.size(); ++j)
        for (int c = 1; c <= d[j - 1]; ++c) {
            const int r = m + static_cast<int>(j) - c;
            if (static_cast<int>(rows.size()) < r) rows.resize(r, 0);
            rows[r - 1]++;
        }
    Partition p(rows.begin(), rows.end());
    if (!is_partition(p)) throw std::logic_error("psi produced a non-partition for " + w);
    return p;
}

Word phi(const Partition& pivot) {
    if (!is_conjugate_distinct(pivot) || !is_pivot1(pivot)) throw usage_error("phi needs a pivot: " + to_string(pivot));
    return fingerprint1(pivot);
}

bool is_pivot1(const Partition& p, Arrow a) {
    return is_conjugate_distinct(p) && is_starting_point1(p, a) && same_length_removals(p, a).empty();
}

std::vector<Partition> pivots_by_removal(const Partition& s, Arrow a) {
    if (!is_conjugate_distinct(s) || !is_starting_point1(s, a))
        throw usage_error("not a starting point: " + to_string(s));
    std::set<Partition> seen{s}, found;
    std::vector<Partition> todo{s};
    while (!todo.empty()) {
        Partition x = todo.back();
        todo.pop_back();
        auto next = same_length_removals(x, a);
        if (next.empty()) found.insert(x);
        for (auto& y : next)
            if (seen.insert(y).second) todo.push_back(y);
    }
    return {found.begin(), found.end()};
}

Partition pivot1_of(const Partition& s) {
    if (!is_conjugate_distinct(s) || !is_starting_point1(s)) throw usage_error("not a starting point: " + to_string(s));
    return psi(fingerprint1(s));
}

std::optional<std::vector<int>> family_offsets(const Partition& pivot, const Partition& s, int cols) {
    Partition cp = conjugate(pivot), cs = conjugate(s);
    const size_t width = std::max({cp.size(), cs.size(), static_cast<size_t>(cols)});
    cp.resize(width, 0);
    cs.resize(width, 0);
    std::vector<int> b;
    for (size_t i = 0; i < width; ++i) {
        const int d = cs[i] - cp[i];
        if (d < 0 || d % 2) return std::nullopt;
        if (static_cast<int>(i) >= cols) {
            if (d) return std::nullopt;
            continue;
        }
        if (!b.empty() && d > b.back()) return std::nullopt;
        b.push_back(d);
    }
    return b;
}

std::vector<Partition> starting_point_family(const Partition& pivot, int cols, int max_weight) {
    std::vector<Partition> out;
    Partition cp = conjugate(pivot);
    if (static_cast<int>(cp.size()) < cols) cp.resize(cols, 0);
    const int budget = max_weight - weight(pivot);
    if (budget < 0) return out;
    std::vector<int> b(cols, 0);
    std::function<void(int, int, int)> rec = [&](int i, int cap, int left) {
        if (i == cols) {
            Partition c = cp;
            for (int j = 0; j < cols; ++j) c[j] += b[j];
            out.push_back(from_columns(c));
            return;
        }
        for (int x = 0; x <= cap && x <= left; x += 2) {
            b[i] = x;
            rec(i + 1, x, left - x);
        }
        b[i] = 0;
    };
    if (cols == 0)
        out.push_back(pivot);
    else
        rec(0, budget, budget);
    return out;
}

// --- level 2 --------------------------------------------------------------

Word colour_word2(const GroundedPartition& g) {
    if (g.level != 2) throw usage_error("colour_word2 needs a level-2 grounded partition");
    Word w;
    for (const auto& p : g.parts) {
        if (p.c == colour_index('a')) w += '0';
        if (p.c == colour_index('c')) w += '1';
    }
    return w;
}

bool is_starting_point2(const LabelledDiagram& d) { return is_yamanouchi(brackets_to_word(grounded2_brackets(d, Arrow::blue))); }

GroundedPartition realise_b_free(const Word& w) {
    if (!is_binary_word(w)) throw usage_error("not a binary word: " + w);
    GroundedPartition g{2, colour_index('b'), {}};
    Part prev{0, colour_index('b')};
    for (char ch : w) {
        const int c = colour_index(ch == '0' ? 'a' : 'c');
        prev = {prev.v + diff_entry(2, c, prev.c), c};
        g.parts.push_back(prev);
    }
    return g;
}

GroundedPartition pivot2_of(const GroundedPartition& s) {
    if (s.level != 2 || s.ground != colour_index('b') || !validate(s))
        throw usage_error("not an element of P_{2,b}: " + to_string(s));
    const Word w = colour_word2(s);
    if (!is_yamanouchi(w)) throw usage_error("not a starting point: " + to_string(s));
    return realise_b_free(w);
}

// --- pivot generating functions --------------------------------------------

Series pivot_gf1(int n, int k) {
    if ((n + k) % 2) throw usage_error("level-1 pivots need n+k even");
    return yamanouchi_shifted(n, k, 2, 3 * k + (n + k) * (n + k - 1) / 2);
}

Series pivot_gf2(int n, int k) { return yamanouchi_shifted(n, k, 4, 2 * k + (n - k) * (n - k)); }

namespace {

Series weight_poly(const std::vector<int>& ws) {
    const int o = ws.empty() ? 0 : *std::max_element(ws.begin(), ws.end());
    Series s(o);
    for (int x : ws) s[x] += 1;
    return s;
}

}  // namespace

Series enumerated_pivot_gf1(int n, int k) {
    std::vector<int> ws;
    for (const auto& w : enumerate_words(n, k, true)) ws.push_back(weight(psi(w)));
    return weight_poly(ws);
}

Series enumerated_pivot_gf2(int n, int k) {
    std::vector<int> ws;
    for (const auto& w : enumerate_words(n, k, true)) ws.push_back(weight(realise_b_free(w)));
    return weight_poly(ws);
}

PivotGfReport verify_pivot_gfs(int level, int max_len) {
    if (level != 1 && level != 2) throw usage_error("pivot gfs exist at levels 1 and 2");
    PivotGfReport r{level, max_len, false, 0, {}};
    auto fail = [&](const std::string& m) {
        if (r.failures.size() < 20) r.failures.push_back(m);
    };
    for (int n = 0; n <= max_len; ++n)
        for (int k = 0; k <= n && n + k <= max_len; ++k) {
            if (level == 1 && (n + k) % 2) continue;
            ++r.cases;
            const std::string nk = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            // the objects themselves, not only their weights
            for (const auto& w : enumerate_words(n, k, true)) {
                if (level == 1) {
                    const Partition p = psi(w);
                    if (!is_pivot1(p)) fail("psi(" + w + ") is not a pivot");
                    if (fingerprint1(p) != w) fail("fingerprint of psi(" + w + ") differs");
                    if (weight(p) != (n + k) * (n + k - 1) / 2 + 2 * mmaj(w) - k) fail("weight of psi(" + w + ")");
                } else {
                    const GroundedPartition g = realise_b_free(w);
                    if (!validate(g) || colour_word2(g) != w) fail("b-free realisation of " + w);
                }
            }
            const Series e = level == 1 ? enumerated_pivot_gf1(n, k) : enumerated_pivot_gf2(n, k);
            const Series c = level == 1 ? pivot_gf1(n, k) : pivot_gf2(n, k);
            if (!same_poly(e, c)) fail("pivot gf " + nk + ": enumerated " + e.str() + " closed " + c.str());
        }
    r.pass = r.failures.empty();
    return r;
}

// --- strings --------------------------------------------------------------

const std::vector<std::string>& decomp_variants() {
    static const std::vector<std::string> v{"decomp1", "decomp1-green", "decomp2"};
    return v;
}

namespace {

struct Walk {
    std::vector<int> starts, lengths;
    std::vector<std::string> failures;
};

void note(std::vector<std::string>& f, const std::string& m) {
    if (f.size() < 20) f.push_back(m);
}

// Strings of colour `a` in a graph generated to max rank; lengths come from the
// arrow itself, so strings may leave the generated range.
template <class V, class F>
Walk walk_strings(const TypedGraph<V>& t, Arrow a, F arrow) {
    Walk w;
    const auto& g = t.g;
    const int c = static_cast<int>(a);
    const size_t nv = g.labels.size();
    std::vector<int> has_in(nv, 0), owner(nv, -1);
    for (const auto& e : g.edges)
        if (e.colour == a) has_in[e.dst]++;
    for (size_t v = 0; v < nv; ++v) {
        if (has_in[v] > 1) note(w.failures, "two incoming arrows at " + g.labels[v]);
        if (has_in[v]) continue;
        const int sid = static_cast<int>(w.starts.size());
        int u = static_cast<int>(v);
        while (u >= 0) {
            if (owner[u] >= 0) note(w.failures, "vertex on two strings: " + g.labels[u]);
            owner[u] = sid;
            u = g.next[u][c];
        }
        int len = 0;
        for (auto x = arrow(t.verts[v], a); x; x = arrow(*x, a))
            if (++len > 10000) throw std::logic_error("unbounded string at " + g.labels[v]);
        w.starts.push_back(static_cast<int>(v));
        w.lengths.push_back(len);
    }
    for (size_t v = 0; v < nv; ++v)
        if (owner[v] < 0) note(w.failures, "vertex on no string: " + g.labels[v]);
    return w;
}

Series reconstruction(const std::vector<int>& weights, const std::vector<int>& lengths, int W) {
    Series s(W);
    for (size_t i = 0; i < weights.size(); ++i)
        if (weights[i] <= W) s += q_int(lengths[i] + 1, W).shifted(weights[i]);
    return s;
}

Series rank_series(const CrystalGraph& g, int W) {
    Series s(W);
    for (int r = 0; r <= W && r < static_cast<int>(g.ranks.size()); ++r) s[r] = static_cast<int>(g.ranks[r].size());
    return s;
}

Series family_gf(int pivot_weight, int cols, int W) {
    return invert_unit(pochhammer(Monomial{1, 0, 2}, 2, cols, W)).shifted(pivot_weight);
}

struct Check {
    std::vector<StringRow> rows;
    std::vector<std::string> failures;
    bool strings_ok = true, reconstruction_ok = true;
};

Check level1(bool green, int W) {
    Check out;
    const Arrow a = green ? Arrow::green : Arrow::blue;
    auto t = partition1_graph(W);
    auto walk = walk_strings(t, a, [](const Partition& p, Arrow x) { return partition1_arrow(p, x); });
    out.failures = walk.failures;
    std::vector<int> weights;
    std::map<Partition, std::vector<Partition>> families;
    std::map<Partition, int> family_cols;
    std::set<int> is_start(walk.starts.begin(), walk.starts.end());
    for (size_t v = 0; v < t.verts.size(); ++v)
        if (is_starting_point1(t.verts[v], a) != static_cast<bool>(is_start.count(static_cast<int>(v))))
            note(out.failures, "Yamanouchi fingerprint does not detect starting point " + t.g.labels[v]);
    for (size_t i = 0; i < walk.starts.size(); ++i) {
        const Partition& s = t.verts[walk.starts[i]];
        const Word w = fingerprint1(s, a);
        const int N = zeros(w), k = count_ones(w), len = walk.lengths[i];
        weights.push_back(weight(s));
        if (static_cast<int>(w.size()) % 2 != (green ? 1 : 0)) note(out.failures, "fingerprint parity at " + to_string(s));
        // summation indices: N = 2n - k (blue) or 2n + 1 - k (green)
        const int n = green ? (N + k - 1) / 2 : (N + k) / 2;
        const int want = green ? 2 * (n - k) + 1 : 2 * (n - k);
        if (len != want || len != N - k) note(out.failures, "string length " + std::to_string(len) + " at " + to_string(s));
        auto pv = pivots_by_removal(s, a);
        if (pv.size() != 1) {
            note(out.failures, std::to_string(pv.size()) + " pivots for " + to_string(s));
            continue;
        }
        const Partition& p = pv.front();
        if (!green && psi(w) != p) note(out.failures, "psi(fingerprint) is not the pivot of " + to_string(s));
        const int cols = static_cast<int>(w.size());
        if (!family_offsets(p, s, cols)) note(out.failures, to_string(s) + " is not a column extension of its pivot");
        families[p].push_back(s);
        family_cols[p] = cols;
        out.rows.push_back({1, to_string(s), to_string(p), n, k, len, weight(s)});
    }
    for (const auto& [p, members] : families) {
        std::vector<int> ws;
        for (auto& m : members) ws.push_back(weight(m));
        Series got(W);
        for (int x : ws) got[x] += 1;
        if (got != family_gf(weight(p), family_cols[p], W))
            note(out.failures, "family gf of pivot " + to_string(p) + ": " + got.str());
        std::set<Partition> listed(members.begin(), members.end());
        for (auto& m : starting_point_family(p, family_cols[p], W))
            if (!listed.count(m)) note(out.failures, "family member " + to_string(m) + " of " + to_string(p) + " missing");
    }
    out.strings_ok = out.failures.empty();
    const Series rec = reconstruction(weights, walk.lengths, W);
    const Series prod = pochhammer(Monomial{-1, 0, 1}, 1, kInf, W);
    if (rec != rank_series(t.g, W) || rec != prod) {
        out.reconstruction_ok = false;
        note(out.failures, "reconstruction " + rec.str() + " vs product " + prod.str());
    }
    return out;
}

Check level2(int W) {
    Check out;
    auto t = grounded2_graph(W);
    auto walk = walk_strings(t, Arrow::blue, [](const LabelledDiagram& d, Arrow x) { return grounded2_arrow(d, x); });
    out.failures = walk.failures;
    std::set<int> is_start(walk.starts.begin(), walk.starts.end());
    for (size_t v = 0; v < t.verts.size(); ++v) {
        const bool yam = is_yamanouchi(colour_word2(diagram_to_grounded(t.verts[v])));
        const bool st = is_start.count(static_cast<int>(v));
        if (yam != st || is_starting_point2(t.verts[v]) != st)
            note(out.failures, "starting point test disagrees at " + t.g.labels[v]);
    }
    std::vector<int> weights;
    std::map<GroundedPartition, std::vector<int>> families;
    std::map<GroundedPartition, int> family_cols;
    for (size_t i = 0; i < walk.starts.size(); ++i) {
        const GroundedPartition s = diagram_to_grounded(t.verts[walk.starts[i]]);
        const Word w = colour_word2(s);
        const int n = zeros(w), k = count_ones(w), len = walk.lengths[i];
        weights.push_back(weight(s));
        if (len != 2 * (n - k) + 1) note(out.failures, "string length " + std::to_string(len) + " at " + to_string(s));
        GroundedPartition p;
        try {
            p = pivot2_of(s);
        } catch (const usage_error& e) {
            note(out.failures, e.what());
            continue;
        }
        families[p].push_back(weight(s));
        family_cols[p] = n + k;
        out.rows.push_back({2, to_string(s), to_string(p), n, k, len, weight(s)});
    }
    for (const auto& [p, ws] : families) {
        Series got(W);
        for (int x : ws) got[x] += 1;
        if (got != family_gf(weight(p), family_cols[p], W))
            note(out.failures, "family gf of pivot " + to_string(p) + ": " + got.str());
    }
    out.strings_ok = out.failures.empty();
    const Series rec = reconstruction(weights, walk.lengths, W);
    const Series prod = pochhammer(Monomial{-1, 0, 1}, 2, kInf, W) * invert_unit(pochhammer(Monomial{1, 0, 1}, 2, kInf, W));
    if (rec != rank_series(t.g, W) || rec != prod) {
        out.reconstruction_ok = false;
        note(out.failures, "reconstruction " + rec.str() + " vs product " + prod.str());
    }
    return out;
}

Check run(const std::string& variant, int W) {
    if (W < 0) throw usage_error("max weight must be nonnegative");
    if (variant == "decomp1") return level1(false, W);
    if (variant == "decomp1-green") return level1(true, W);
    if (variant == "decomp2") return level2(W);
    throw usage_error("unknown decomposition variant: " + variant);
}

void sort_rows(std::vector<StringRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const StringRow& a, const StringRow& b) { return a.weight < b.weight; });
}

}  // namespace

std::vector<StringRow> decomp_strings(const std::string& variant, int max_weight) {
    auto c = run(variant, max_weight);
    sort_rows(c.rows);
    return c.rows;
}

DecompReport verify_decomposition(const std::string& variant, int order, int max_weight) {
    DecompReport r;
    r.variant = variant;
    r.order = order;
    r.max_weight = max_weight;
    auto c = run(variant, max_weight);
    const auto id = verify_identity(variant, order);
    r.series_equal = id.equal;
    r.series_detail = id.detail;
    r.strings_ok = c.strings_ok;
    r.reconstruction_ok = c.reconstruction_ok;
    r.failures = std::move(c.failures);
    r.rows = std::move(c.rows);
    sort_rows(r.rows);
    return r;
}

std::string strings_csv(const std::vector<StringRow>& rows) {
    std::ostringstream os;
    os << "level,start,pivot,n,k,length,weight\n";
    auto quote = [](const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; };
    for (const auto& r : rows)
        os << r.level << ',' << quote(r.start) << ',' << quote(r.pivot) << ',' << r.n << ',' << r.k << ',' << r.length << ','
           << r.weight << '\n';
    return os.str();
}

}  // namespace gq
