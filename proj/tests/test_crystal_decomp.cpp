#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "groundedq/crystal.hpp"
#include "groundedq/decomp.hpp"
#include "groundedq/qfunc.hpp"
#include "oracle.hpp"

using namespace gq;

namespace {

// "1c1a2b" -> "1_c 1_a 2_b", the graph's label form
std::string spaced(const std::string& compact) {
    if (compact == "0_b") return compact;
    std::string out;
    for (size_t i = 0; i < compact.size(); ++i) {
        if (std::isalpha(static_cast<unsigned char>(compact[i]))) {
            out += '_';
            out += compact[i];
            if (i + 1 < compact.size()) out += ' ';
        } else {
            out += compact[i];
        }
    }
    return out;
}

// The grounded figure to rank 5: (from, colour, to), parts in increasing order.
const std::vector<std::tuple<std::string, char, std::string>> kFigureEdges = {
    {"0_b", 'b', "1c"},           {"0_b", 'g', "1a"},          {"1a", 'b', "1c1a"},
    {"1c", 'g', "1a1c"},          {"1c1a", 'b', "1c2b"},       {"1c1a", 'g', "1a1c1a"},
    {"1a1c", 'b', "1c1a1c"},      {"1a1c", 'g', "1a2b"},       {"1a1c1a", 'b', "1c1a1c1a"},
    {"1c2b", 'b', "1c3c"},        {"1c2b", 'g', "1a1c2b"},     {"1a2b", 'b', "1c1a2b"},
    {"1a2b", 'g', "1a3a"},        {"1c1a1c", 'g', "1a1c1a1c"}, {"1c1a1c1a", 'g', "1a1c1a1c1a"},
    {"1c1a1c1a", 'b', "1c1a1c2b"}, {"1a1c2b", 'g', "1a2b2b"},  {"1a1c2b", 'b', "1a1c3c"},
    {"1c3c", 'g', "1a1c3c"},      {"1c1a2b", 'b', "1c2b2b"},   {"1c1a2b", 'g', "1c1a3a"},
    {"1a3a", 'b', "1c1a3a"},      {"1a1c1a1c", 'g', "1a1c1a2b"}, {"1a1c1a1c", 'b', "1c1a1c1a1c"},
};

// The eleven-column worked example, top row first.
const LabelledDiagram kWorked{{"abcbabcbcba", "cbabcbababc", "abcbabcbc", "cbabcbab", "abcbabc", "cbabc", "abcba",
                               "cba", "abc", "cba", "ab", "c"}};

}  // namespace

TEST(Crystal, WordArrows) {
    EXPECT_EQ(word_arrow("", Arrow::green), std::optional<Word>("00"));
    EXPECT_FALSE(word_arrow("", Arrow::blue));
    EXPECT_EQ(word_label(""), "10…");
}

TEST(Crystal, PartitionArrows) {
    EXPECT_EQ(partition1_arrow({1}, Arrow::blue), std::optional<Partition>(Partition{1, 1}));
    EXPECT_EQ(partition1_arrow({2, 2, 1}, Arrow::green), std::optional<Partition>(Partition{3, 2, 1}));
    EXPECT_EQ(partition1_arrow({2, 2, 1}, Arrow::blue), std::optional<Partition>(Partition{2, 2, 1, 1}));
    EXPECT_EQ(partition1_arrow({}, Arrow::green), std::optional<Partition>(Partition{1}));
    EXPECT_FALSE(partition1_arrow({}, Arrow::blue));
    EXPECT_TRUE(is_conjugate_distinct({2, 1, 1}));
    EXPECT_FALSE(is_conjugate_distinct({2, 2}));
}

TEST(Crystal, RankCounts) {
    EXPECT_EQ(rank_counts(generate_graph(Model::grounded2, 6)), (std::vector<int>{1, 2, 2, 4, 6, 8, 12}));
    EXPECT_EQ(rank_counts(generate_graph(Model::word1, 5)), (std::vector<int>{1, 1, 1, 2, 2, 3}));
    EXPECT_EQ(rank_counts(generate_graph(Model::pairs2, 5)).back(), 8);
    for (Model m : {Model::word1, Model::partition1, Model::pairs2, Model::grounded2}) {
        const auto g = generate_graph(m, 0);
        EXPECT_EQ(g.labels.size(), 1u) << model_name(m);
    }
    // rank counts follow the level-1/level-2 products
    const auto g1 = rank_counts(generate_graph(Model::partition1, 14));
    const auto p1 = oracle::grounded_product(1, 1, 14);
    const auto g2 = rank_counts(generate_graph(Model::grounded2, 12));
    const auto p2 = oracle::grounded_product(2, 1, 12);
    for (int r = 0; r <= 14; ++r) EXPECT_EQ(g1[r], p1[r]);
    for (int r = 0; r <= 12; ++r) EXPECT_EQ(g2[r], p2[r]);
}

TEST(Crystal, GroundedFigure) {
    const auto g = generate_graph(Model::grounded2, 5);
    std::set<std::tuple<std::string, char, std::string>> got, want;
    for (const auto& e : g.edges)
        got.insert({g.labels[e.src], e.colour == Arrow::blue ? 'b' : 'g', g.labels[e.dst]});
    for (const auto& [a, c, b] : kFigureEdges) want.insert({spaced(a), c, spaced(b)});
    EXPECT_EQ(got, want);
}

TEST(Crystal, GroundedVerticesAreTheGroundedPartitions) {
    const auto t = grounded2_graph(12);
    std::set<GroundedPartition> seen;
    for (size_t i = 0; i < t.verts.size(); ++i) {
        const auto p = diagram_to_grounded(t.verts[i]);
        EXPECT_TRUE(validate(p));
        EXPECT_EQ(weight(p), t.g.rank[i]);
        EXPECT_EQ(canonical_diagram(p), t.verts[i]);
        seen.insert(p);
    }
    EXPECT_EQ(seen.size(), enumerate(2, 1, 12).size());
}

TEST(Crystal, WeightCondition) {
    // phi - eps = <h, wt> on every vertex whose strings are fully generated
    for (Model m : {Model::partition1, Model::grounded2}) {
        const auto g = generate_graph(m, 12);
        const int level = m == Model::partition1 ? 1 : 2;
        for (size_t v = 0; v < g.labels.size(); ++v) {
            if (g.rank[v] > 2) continue;
            std::array<int, 2> phi{0, 0}, eps{0, 0};
            for (int c = 0; c < 2; ++c) {
                for (int u = static_cast<int>(v); g.next[u][c] >= 0; u = g.next[u][c]) ++phi[c];
                for (int u = static_cast<int>(v);;) {
                    int back = -1;
                    for (const auto& e : g.edges)
                        if (e.dst == u && static_cast<int>(e.colour) == c) back = e.src;
                    if (back < 0) break;
                    ++eps[c];
                    u = back;
                }
            }
            EXPECT_EQ(phi[0] - eps[0] + phi[1] - eps[1], level) << g.labels[v];
        }
    }
}

TEST(Crystal, Isomorphisms) {
    EXPECT_TRUE(verify_word_partition_iso(14).pass);
    EXPECT_TRUE(verify_isomorphism(Model::grounded2, Model::pairs2, 10).pass);
    EXPECT_THROW(verify_isomorphism(Model::word1, Model::pairs2, 3), usage_error);
    const auto d = delta_bfs(12);
    EXPECT_TRUE(d.report.pass);
    std::set<int> img(d.image.begin(), d.image.end());
    EXPECT_EQ(img.size(), d.image.size());
    const auto& gl = d.grounded.g.labels;
    const auto& pl = d.pairs.g.labels;
    auto image_of = [&](const std::string& s) {
        const auto it = std::find(gl.begin(), gl.end(), s);
        return pl[d.image[it - gl.begin()]];
    };
    EXPECT_EQ(image_of("0_b"), "()|()");
    EXPECT_EQ(image_of("1_a"), "(1)|()");
    EXPECT_EQ(image_of("1_c"), "()|(1)");
}

TEST(Crystal, S1S2WorkedExample) {
    ASSERT_TRUE(diagram_valid(kWorked));
    const auto s = split_s1_s2(kWorked);
    EXPECT_EQ(s.s1_size, 27);
    EXPECT_EQ(s.s2_size, 41);
    EXPECT_EQ(lambda2_of(s), std::optional<Partition>(Partition{7, 6, 5, 5, 4, 3, 3, 3, 2, 2, 1}));
    std::vector<int> lens;
    for (const auto& st : stripes(kWorked, s)) lens.push_back(st.size);
    EXPECT_EQ(lens, (std::vector<int>{1, 2, 3, 4, 4, 4, 5, 4}));
    EXPECT_EQ(lambda1_from_stripes(stripes(kWorked, s)), (Partition{5, 4, 4, 4, 4, 3, 2, 1}));
    const auto e = split_s1_s2(LabelledDiagram{});
    EXPECT_EQ(e.s1_size + e.s2_size, 0);
}

TEST(Crystal, Lambda2AgreesWithDelta) {
    const auto d = delta_bfs(10);
    for (size_t i = 0; i < d.grounded.verts.size(); ++i) {
        const auto l2 = lambda2_of(split_s1_s2(d.grounded.verts[i]));
        ASSERT_TRUE(l2);
        EXPECT_EQ(*l2, d.pairs.verts[d.image[i]].second) << d.grounded.g.labels[i];
    }
}

TEST(Crystal, Dot) {
    const auto g = generate_graph(Model::grounded2, 4);
    const std::string dot = to_dot(g);
    auto count = [&](const std::string& needle) {
        size_t c = 0;
        for (size_t p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++c;
        return c;
    };
    EXPECT_EQ(count("[label="), g.labels.size());
    EXPECT_EQ(count(" -> "), g.edges.size());
    EXPECT_EQ(count("color=\"blue\"") + count("color=\"green\""), g.edges.size());
    EXPECT_EQ(dot, to_dot(generate_graph(Model::grounded2, 4)));
}

TEST(Decomp, Psi) {
    EXPECT_EQ(psi("01"), (Partition{2, 1, 1}));
    EXPECT_EQ(psi("00010011"), (Partition{8, 7, 6, 6, 5, 4, 4, 3, 3, 2, 1}));
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n && n + k <= 10; ++k) {
            if ((n + k) % 2) continue;
            for (const auto& w : enumerate_words(n, k, true)) {
                const Partition p = psi(w);
                EXPECT_EQ(phi(p), w);
                EXPECT_TRUE(is_conjugate_distinct(p)) << w;
                EXPECT_TRUE(is_starting_point1(p)) << w;
                EXPECT_EQ(fingerprint1(p), w);
            }
        }
}

TEST(Decomp, UniquePivotsLevel1) {
    const auto t = partition1_graph(20);
    for (Arrow a : kArrows)
        for (const auto& p : t.verts) {
            if (!is_starting_point1(p, a)) continue;
            const auto piv = pivots_by_removal(p, a);
            ASSERT_EQ(piv.size(), 1u) << to_string(p);
            if (a == Arrow::blue) {
                EXPECT_EQ(piv[0], pivot1_of(p));
            }
        }
}

TEST(Decomp, PivotGfLevel2) {
    EXPECT_EQ(oracle::trim(oracle::from_series(pivot_gf2(4, 2))),
              oracle::trim(oracle::Poly{0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 2,
                                        0, 0, 0, 1, 0, 0, 0, 1}));
    std::vector<int> ws;
    for (const auto& w : enumerate_words(4, 2, true)) {
        const auto g = realise_b_free(w);
        EXPECT_TRUE(validate(g));
        EXPECT_EQ(colour_word2(g), w);
        ws.push_back(weight(g));
    }
    std::sort(ws.begin(), ws.end());
    EXPECT_EQ(ws, (std::vector<int>{8, 12, 16, 16, 20, 24, 24, 28, 32}));
    EXPECT_EQ(pivot2_of(parse_grounded("1_a 2_b 2_b 3_c", 2, 1)), parse_grounded("1_a 1_c", 2, 1));
}

TEST(Decomp, PivotGfsAgainstClosedForms) {
    for (int level : {1, 2}) {
        const auto r = verify_pivot_gfs(level, 8);
        EXPECT_TRUE(r.pass) << level;
        EXPECT_GT(r.cases, 0);
    }
    // closed forms against the oracle Yamanouchi polynomial in q^2 / q^4
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n && n + k <= 8; ++k) {
            oracle::Poly y = oracle::q_yamanouchi(n, k), y4;
            for (size_t j = 0; j < y.size(); ++j) {
                y4.resize(4 * j + 1, 0);
                y4[4 * j] = y[j];
            }
            EXPECT_EQ(oracle::trim(oracle::from_series(pivot_gf2(n, k))), oracle::shift(y4, 2 * k + (n - k) * (n - k)));
        }
}

TEST(Decomp, Level2StartingPoints) {
    const auto t = grounded2_graph(14);
    std::vector<bool> has_blue_in(t.verts.size(), false);
    for (const auto& e : t.g.edges)
        if (e.colour == Arrow::blue) has_blue_in[e.dst] = true;
    for (size_t i = 0; i < t.verts.size(); ++i) {
        EXPECT_EQ(is_starting_point2(t.verts[i]), !has_blue_in[i]) << t.g.labels[i];
        EXPECT_EQ(!has_blue_in[i], oracle::yamanouchi(colour_word2(diagram_to_grounded(t.verts[i]))))
            << t.g.labels[i];
    }
}

TEST(Decomp, Variants) {
    for (const auto& v : decomp_variants()) {
        const auto r = verify_decomposition(v, 24, 12);
        EXPECT_TRUE(r.pass()) << v << ": " << (r.failures.empty() ? r.series_detail : r.failures[0]);
    }
    EXPECT_THROW(decomp_strings("nope", 3), usage_error);
}

TEST(Decomp, StringLengthsAndCsv) {
    for (const auto& r : decomp_strings("decomp1", 12)) EXPECT_EQ(r.length, 2 * (r.n - r.k));
    for (const auto& r : decomp_strings("decomp2", 12)) EXPECT_EQ(r.length, 2 * (r.n - r.k) + 1);
    const std::string csv = strings_csv(decomp_strings("decomp2", 2));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "level,start,pivot,n,k,length,weight");
}
