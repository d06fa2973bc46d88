#include "groundedq/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gq {

namespace {

constexpr int A = 0, B = 1, C = 2;

[[noreturn]] void fail(const std::string& what) { throw std::logic_error(what); }

void require_p2(const GroundedPartition& g, int ground, const char* name) {
    if (g.level != 2 || g.ground != ground || !validate(g))
        throw usage_error(std::string(name) + ": input is not in P_{2," + colour_char(ground) + "}: " + to_string(g));
}

// Adds 2 to the last `count` entries of `seq` that satisfy `pick`.
template <class Seq, class Pick>
void bump_last(Seq& seq, int count, Pick pick, const char* where) {
    for (int idx = static_cast<int>(seq.size()) - 1; idx >= 0 && count > 0; --idx) {
        if (!pick(seq[idx])) continue;
        seq[idx].v += 2;
        --count;
    }
    if (count > 0) fail(std::string(where) + ": not enough parts to absorb a loose part");
}

// Sizes of the rows of 2's, top (longest) row first, for weakly increasing heights.
Partition rows_of(const std::vector<int>& h) {
    Partition r;
    const int top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
    for (int lvl = 1; lvl <= top; ++lvl)
        r.push_back(static_cast<int>(std::count_if(h.begin(), h.end(), [lvl](int x) { return x >= lvl; })));
    return r;
}

std::vector<int> heights(const std::vector<int>& target, const std::vector<int>& base) {
    std::vector<int> h;
    for (size_t i = 0; i < target.size(); ++i) {
        const int d = target[i] - base[i];
        if (d < 0 || d % 2) fail("inverse: part is not reachable from the minimal sequence");
        h.push_back(d / 2);
        if (i && h[i] < h[i - 1]) fail("inverse: heights of the 2-array are not weakly increasing");
    }
    return h;
}

Overpartition to_overpartition(const ColouredSeq& s) {
    // first copy of each value is barred iff it has colour c
    Overpartition r;
    for (size_t i = 0; i < s.size(); ++i) {
        const bool first = i == 0 || s[i - 1].v != s[i].v;
        r.push_back({s[i].v, first && s[i].c == C});
    }
    std::reverse(r.begin(), r.end());
    // after reversing the bar sits on the last copy; move it to the first
    for (size_t i = 0; i < r.size();) {
        size_t e = i;
        bool bar = false;
        while (e < r.size() && r[e].v == r[i].v) bar |= r[e++].over;
        for (size_t t = i; t < e; ++t) r[t].over = (t == i) && bar;
        i = e;
    }
    return r;
}

P2bTrace forward_p2b(const GroundedPartition& g, bool largest_first) {
    require_p2(g, B, "p2b_forward");
    P2bTrace t;
    t.input = g;
    t.p_min = GroundedPartition{2, B, {}};
    const auto& ps = g.parts;
    for (const auto& p : ps) {
        if ((p.v % 2 == 0) != (p.c == B)) fail("p2b_forward: parity/colour structure violated");
    }

    // Step 1: minimal grounded partition and loose parts
    for (size_t i = 0; i < ps.size();) {
        if (ps[i].c != B) {
            t.p_min.parts.push_back(ps[i++]);
            continue;
        }
        size_t e = i;
        while (e < ps.size() && ps[e].c == B) ++e;  // run of equal 2i_b
        int keep = 0;
        if (e < ps.size()) {
            const int x = t.p_min.parts.back().c, y = ps[e].c;
            keep = x != y ? 1 : 0;
        }
        for (size_t r = i; r < e; ++r) {
            if (static_cast<int>(r - i) < keep)
                t.p_min.parts.push_back(ps[r]);
            else
                t.loose.push_back(ps[r].v);
        }
        i = e;
    }
    std::sort(t.loose.rbegin(), t.loose.rend());
    if (!validate(t.p_min)) fail("p2b_forward: minimal partition is not grounded: " + to_string(t.p_min));

    // Step 2: each kept 2i adds 2 to the i odd parts just left of it
    for (const auto& p : t.p_min.parts) {
        if (p.c != B) {
            t.p1.push_back(p);
            continue;
        }
        const int i = p.v / 2;
        if (static_cast<int>(t.p1.size()) < i) fail("p2b_forward: too few odd parts left of " + std::to_string(p.v));
        for (int r = 0; r < i; ++r) t.p1[t.p1.size() - 1 - r].v += 2;
    }

    // Step 3: loose parts 2i add 2 to the last i odd parts
    t.p2 = t.p1;
    Partition order = t.loose;
    if (!largest_first) std::reverse(order.begin(), order.end());
    for (int v : order) bump_last(t.p2, v / 2, [](const Part&) { return true; }, "p2b_forward");

    // Step 4: bars
    t.result = to_overpartition(t.p2);
    return t;
}

}  // namespace

P2bTrace p2b_forward_trace(const GroundedPartition& g) { return forward_p2b(g, true); }
Overpartition p2b_forward(const GroundedPartition& g) { return forward_p2b(g, true).result; }
Overpartition p2b_forward_smallest_first(const GroundedPartition& g) { return forward_p2b(g, false).result; }

P2bInverseTrace p2b_inverse_trace(const Overpartition& lambda) {
    if (!is_overpartition(lambda)) throw usage_error("p2b_inverse: not an overpartition: " + to_string(lambda));
    for (auto& x : lambda)
        if (x.v % 2 == 0) throw usage_error("p2b_inverse: even part " + std::to_string(x.v));
    P2bInverseTrace t;
    t.input = lambda;
    t.result = GroundedPartition{2, B, {}};
    t.p_min = t.result;
    const int k = static_cast<int>(lambda.size());
    if (k == 0) return t;

    // colour word s(lambda), increasing order
    std::vector<int> vals, cols;
    for (int idx = k - 1; idx >= 0;) {
        int e = idx;
        bool bar = false;
        while (e >= 0 && lambda[e].v == lambda[idx].v) bar |= lambda[e--].over;
        int c = bar ? C : A;
        for (int r = idx; r > e; --r) {
            vals.push_back(lambda[r].v);
            cols.push_back(c);
            c = c == A ? C : A;
        }
        idx = e;
    }

    // minimal sequence with that colour word
    std::vector<int> base;
    for (int r = 0; r < k; ++r) base.push_back(r == 0 ? 1 : base.back() + (cols[r] == cols[r - 1] ? 2 : 0));
    for (int r = 0; r < k; ++r) t.p_s.push_back({base[r], cols[r]});
    t.heights = heights(vals, base);

    std::vector<int> h = t.heights;
    ColouredSeq odd = t.p_s;
    std::multimap<int, int> kept;  // odd index g (1-based) -> even value
    for (;;) {
        InversePass pass;
        pass.m = static_cast<int>(std::count_if(h.begin(), h.end(), [](int x) { return x >= 1; }));
        if (pass.m == 0) break;
        pass.s = k - pass.m + 1;
        pass.j = (odd.back().v + 1) / 2;
        if (pass.m <= pass.j) {
            t.passes.push_back(pass);
            break;
        }
        std::vector<int> hits;
        for (int i = 1; pass.s + i - 1 <= k - 1; ++i) {
            const int g = pass.s + i - 1;
            const Part& x = odd[g - 1];
            const Part& y = odd[g];
            if (x.v == 2 * i - 1 && y.v == 2 * i - 1 && x.c != y.c) hits.push_back(i);
        }
        if (hits.size() != 1)
            fail("p2b_inverse: expected a unique gap, found " + std::to_string(hits.size()) + " for " +
                 to_string(lambda));
        pass.i = hits[0];
        pass.g = pass.s + pass.i - 1;
        kept.emplace(pass.g, 2 * pass.i);
        for (int r = pass.g; r < k; ++r) odd[r].v += 2;
        for (int r = pass.s - 1; r < k; ++r) h[r] -= 1;
        t.passes.push_back(pass);
    }

    for (int r = 0; r < k; ++r) {
        t.p_min.parts.push_back(odd[r]);
        auto [lo, hi] = kept.equal_range(r + 1);
        for (auto it = lo; it != hi; ++it) t.p_min.parts.push_back({it->second, B});
    }
    for (int len : rows_of(h)) t.loose.push_back(2 * len);
    std::sort(t.loose.rbegin(), t.loose.rend());

    t.result = t.p_min;
    for (int v : t.loose) {
        auto& ps = t.result.parts;
        auto pos = std::find_if(ps.begin(), ps.end(), [v](const Part& p) { return p.v > v; });
        ps.insert(pos, Part{v, B});
    }
    if (!validate(t.result)) fail("p2b_inverse: result is not in P_{2,b}: " + to_string(t.result));
    return t;
}

GroundedPartition p2b_inverse(const Overpartition& lambda) { return p2b_inverse_trace(lambda).result; }

// --- P2a ------------------------------------------------------------------

BarSeq to_bar_notation(const GroundedPartition& g) {
    require_p2(g, A, "bar notation");
    BarSeq s;
    int pv = 0, pc = A;
    for (const auto& p : g.parts) {
        if (p.v % 2) {
            s.push_back({p.v, false});
        } else if (pv % 2) {
            s.push_back({p.v, p.c == C});
        } else {
            s.push_back({p.v, p.v == pv + 2});
        }
        pv = p.v;
        pc = p.c;
    }
    (void)pc;
    return s;
}

GroundedPartition from_bar_notation(const BarSeq& s) {
    GroundedPartition g{2, A, {}};
    int pv = 0, pc = A;
    for (const auto& x : s) {
        int c;
        if (x.v % 2) {
            if (x.over) fail("bar notation: odd part carries a bar");
            c = B;
        } else if (pv % 2) {
            c = x.over ? C : A;
        } else if (x.v == pv + 2) {
            if (!x.over) fail("bar notation: jump by 2 without a bar");
            c = pc;
        } else if (x.v == pv) {
            if (x.over) fail("bar notation: repeated even part carries a bar");
            c = pc == A ? C : A;
        } else {
            fail("bar notation: impossible step " + std::to_string(pv) + " -> " + std::to_string(x.v));
        }
        g.parts.push_back({x.v, c});
        pv = x.v;
        pc = c;
    }
    if (!validate(g)) fail("bar notation: decoded sequence is not in P_{2,a}");
    return g;
}

P2aTrace p2a_forward_trace(const GroundedPartition& g) {
    require_p2(g, A, "p2a_forward");
    P2aTrace t;
    t.input = g;
    t.barred = to_bar_notation(g);
    const auto& s = t.barred;

    // Step 1: one representative per run of equal even parts
    for (size_t i = 0; i < s.size();) {
        if (s[i].v % 2) {
            t.p_min.push_back(s[i++]);
            continue;
        }
        size_t e = i;
        while (e < s.size() && s[e].v == s[i].v) ++e;
        const bool at_end = e == s.size();
        const size_t keep = (!s[i].over && at_end) ? 0 : 1;
        for (size_t r = i; r < e; ++r) {
            if (r - i < keep)
                t.p_min.push_back(s[r]);
            else
                t.loose.push_back(s[r].v);
        }
        i = e;
    }
    std::sort(t.loose.rbegin(), t.loose.rend());
    from_bar_notation(t.p_min);  // re-decoding must succeed

    // Step 2: a kept unbarred 2i adds 2 to the i structural parts before it
    auto structural = [](const OverPart& x) { return x.v % 2 == 1 || x.over; };
    for (const auto& x : t.p_min) {
        if (structural(x)) {
            t.p1.push_back(x);
            continue;
        }
        const int i = x.v / 2;
        if (static_cast<int>(t.p1.size()) < i) fail("p2a_forward: too few parts before " + std::to_string(x.v));
        for (int r = 0; r < i; ++r) t.p1[t.p1.size() - 1 - r].v += 2;
    }

    // Step 3: loose 2i adds 2 to the last i parts
    t.p2 = t.p1;
    for (int v : t.loose) bump_last(t.p2, v / 2, [](const OverPart&) { return true; }, "p2a_forward");

    for (auto it = t.p2.rbegin(); it != t.p2.rend(); ++it) t.result.push_back(it->v);
    return t;
}

Partition p2a_forward(const GroundedPartition& g) { return p2a_forward_trace(g).result; }

P2aInverseTrace p2a_inverse_trace(const Partition& p) {
    if (!is_partition(p)) throw usage_error("p2a_inverse: not a partition: " + to_string(p));
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] % 2 == 0 && p[i] == p[i - 1]) throw usage_error("p2a_inverse: repeated even part in " + to_string(p));
    P2aInverseTrace t;
    t.input = p;
    t.result = GroundedPartition{2, A, {}};
    const int k = static_cast<int>(p.size());
    if (k == 0) return t;

    std::vector<int> vals(p.rbegin(), p.rend());
    std::vector<int> base;
    for (int r = 0; r < k; ++r) {
        if (r == 0) {
            base.push_back(vals[0] % 2 ? 1 : 2);
            continue;
        }
        const bool po = vals[r - 1] % 2, co = vals[r] % 2;
        base.push_back(base.back() + (po && co ? 0 : (po != co ? 1 : 2)));
    }
    for (int r = 0; r < k; ++r) t.p_s.push_back({base[r], base[r] % 2 == 0});
    t.heights = heights(vals, base);

    std::vector<int> h = t.heights;
    BarSeq seq = t.p_s;
    std::multimap<int, int> kept;
    for (;;) {
        InversePass pass;
        pass.m = static_cast<int>(std::count_if(h.begin(), h.end(), [](int x) { return x >= 1; }));
        if (pass.m == 0) break;
        pass.s = k - pass.m + 1;
        pass.j = (seq.back().v + 1) / 2;
        if (pass.m <= pass.j) {
            t.passes.push_back(pass);
            break;
        }
        std::vector<int> hits;
        for (int i = 1; pass.s + i - 1 <= k - 1; ++i) {
            const int g = pass.s + i - 1;
            const int x = seq[g - 1].v, y = seq[g].v;
            if (x == 2 * i - 1 && (y == 2 * i - 1 || y == 2 * i)) hits.push_back(i);
        }
        if (hits.size() != 1)
            fail("p2a_inverse: expected a unique gap, found " + std::to_string(hits.size()) + " for " + to_string(p));
        pass.i = hits[0];
        pass.g = pass.s + pass.i - 1;
        kept.emplace(pass.g, 2 * pass.i);
        for (int r = pass.g; r < k; ++r) seq[r].v += 2;
        for (int r = pass.s - 1; r < k; ++r) h[r] -= 1;
        t.passes.push_back(pass);
    }

    for (int r = 0; r < k; ++r) {
        t.p_min.push_back(seq[r]);
        auto [lo, hi] = kept.equal_range(r + 1);
        for (auto it = lo; it != hi; ++it) t.p_min.push_back({it->second, false});
    }
    for (int len : rows_of(h)) t.loose.push_back(2 * len);
    std::sort(t.loose.rbegin(), t.loose.rend());

    t.barred = t.p_min;
    for (int v : t.loose) {
        auto pos = std::find_if(t.barred.begin(), t.barred.end(), [v](const OverPart& x) { return x.v > v; });
        t.barred.insert(pos, OverPart{v, false});
    }
    t.result = from_bar_notation(t.barred);
    return t;
}

GroundedPartition p2a_inverse(const Partition& p) { return p2a_inverse_trace(p).result; }

std::string to_string(const ColouredSeq& s) {
    std::string r;
    for (size_t i = 0; i < s.size(); ++i) r += (i ? " " : "") + std::to_string(s[i].v) + "_" + colour_char(s[i].c);
    return r.empty() ? "()" : r;
}

std::string to_string_bars(const BarSeq& s) {
    std::string r = "(";
    for (size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i].v) + (s[i].over ? "\u0304" : "");
    return r + ")";
}

}  // namespace gq
