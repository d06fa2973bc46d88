#include <set>
#include <sstream>

#include "groundedq/crystal.hpp"

namespace gq {

Model parse_model(const std::string& s) {
    if (s == "word1") return Model::word1;
    if (s == "partition1") return Model::partition1;
    if (s == "pairs2") return Model::pairs2;
    if (s == "grounded2") return Model::grounded2;
    throw usage_error("unknown model: " + s);
}

const char* model_name(Model m) {
    switch (m) {
        case Model::word1: return "word1";
        case Model::partition1: return "partition1";
        case Model::pairs2: return "pairs2";
        case Model::grounded2: return "grounded2";
    }
    return "?";
}

static void check_rank(int r) {
    if (r < 0) throw usage_error("max rank must be nonnegative");
}

TypedGraph<Word> word1_graph(int max_rank) {
    check_rank(max_rank);
    return bfs_graph(
        Model::word1, Word{}, max_rank, [](const Word& w, Arrow a) { return word_arrow(w, a); },
        [](const Word& w) { return w; }, [](const Word& w) { return word_label(w); });
}

TypedGraph<Partition> partition1_graph(int max_rank) {
    check_rank(max_rank);
    return bfs_graph(
        Model::partition1, Partition{}, max_rank, [](const Partition& p, Arrow a) { return partition1_arrow(p, a); },
        [](const Partition& p) { return to_string(p); }, [](const Partition& p) { return to_string(p); });
}

TypedGraph<PartitionPair> pairs2_graph(int max_rank) {
    check_rank(max_rank);
    return bfs_graph(
        Model::pairs2, PartitionPair{}, max_rank,
        [](const PartitionPair& p, Arrow a) { return pairs2_arrow(p, a); },
        [](const PartitionPair& p) { return pair_label(p); }, [](const PartitionPair& p) { return pair_label(p); });
}

TypedGraph<LabelledDiagram> grounded2_graph(int max_rank) {
    check_rank(max_rank);
    return bfs_graph(
        Model::grounded2, LabelledDiagram{}, max_rank,
        [](const LabelledDiagram& d, Arrow a) { return grounded2_arrow(d, a); },
        [](const LabelledDiagram& d) { return diagram_key(d); },
        [](const LabelledDiagram& d) { return to_string(diagram_to_grounded(d)); });
}

CrystalGraph generate_graph(Model m, int max_rank) {
    switch (m) {
        case Model::word1: return word1_graph(max_rank).g;
        case Model::partition1: return partition1_graph(max_rank).g;
        case Model::pairs2: return pairs2_graph(max_rank).g;
        case Model::grounded2: return grounded2_graph(max_rank).g;
    }
    throw usage_error("unknown model");
}

std::vector<int> rank_counts(const CrystalGraph& g) {
    std::vector<int> c;
    for (auto& r : g.ranks) c.push_back(static_cast<int>(r.size()));
    return c;
}

static std::string dot_escape(const std::string& s) {
    std::string r;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') r += '\\';
        r += ch;
    }
    return r;
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph " << model_name(g.model) << " {\n";
    for (size_t r = 0; r < g.ranks.size(); ++r) {
        os << "  { rank=same;";
        for (int id : g.ranks[r]) os << " n" << id << ";";
        os << " }\n";
    }
    for (size_t i = 0; i < g.labels.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(g.labels[i]) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  n" << e.src << " -> n" << e.dst << " [color=\"" << arrow_name(e.colour) << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

void note(IsoReport& rep, const std::string& msg) {
    if (rep.failures.size() < 20) rep.failures.push_back(msg);
}

}  // namespace

IsoReport verify_word_partition_iso(int max_rank) {
    IsoReport rep;
    auto W = word1_graph(max_rank);
    auto P = partition1_graph(max_rank);
    rep.rank_counts_a = rank_counts(W.g);
    rep.rank_counts_b = rank_counts(P.g);
    std::map<std::string, int> pindex;
    for (size_t i = 0; i < P.verts.size(); ++i) pindex[to_string(P.verts[i])] = static_cast<int>(i);
    std::set<int> hit;
    for (size_t v = 0; v < W.verts.size(); ++v) {
        const Word& w = W.verts[v];
        const Partition phi = word_to_partition(w);
        if (partition_to_word(phi) != w) note(rep, "inverse map fails at " + word_label(w));
        if (weight(phi) != W.g.rank[v]) note(rep, "weight != rank at " + word_label(w));
        auto it = pindex.find(to_string(phi));
        if (it == pindex.end() || P.g.rank[it->second] != W.g.rank[v]) {
            note(rep, "image of " + word_label(w) + " is not a partition1 vertex of the same rank");
            continue;
        }
        if (!hit.insert(it->second).second) note(rep, "two words map to " + to_string(phi));
        for (Arrow a : kArrows) {
            auto w2 = word_arrow(w, a);
            auto p2 = partition1_arrow(phi, a);
            if (w2.has_value() != p2.has_value()) {
                note(rep, std::string(arrow_name(a)) + " arrow exists on one side only at " + word_label(w));
                continue;
            }
            if (w2 && word_to_partition(*w2) != *p2)
                note(rep, std::string(arrow_name(a)) + " arrow does not commute at " + word_label(w));
        }
    }
    if (hit.size() != P.verts.size()) note(rep, "the map is not onto partition1");
    if (rep.rank_counts_a != rep.rank_counts_b) note(rep, "rank counts differ");
    rep.pass = rep.failures.empty();
    return rep;
}

DeltaResult delta_bfs(int max_rank) {
    DeltaResult res{IsoReport{}, grounded2_graph(max_rank), pairs2_graph(max_rank), {}};
    auto& rep = res.report;
    const auto& G = res.grounded.g;
    const auto& P = res.pairs.g;
    rep.rank_counts_a = rank_counts(G);
    rep.rank_counts_b = rank_counts(P);
    res.image.assign(G.labels.size(), -1);
    res.image[0] = 0;
    for (size_t v = 0; v < G.labels.size(); ++v) {
        const int u = res.image[v];
        if (u < 0) {
            note(rep, "vertex without image: " + G.labels[v]);
            continue;
        }
        if (G.rank[v] != P.rank[u]) note(rep, "rank mismatch at " + G.labels[v]);
        for (Arrow a : kArrows) {
            const int c = static_cast<int>(a);
            if (G.has_out[v][c] != P.has_out[u][c]) {
                note(rep, std::string(arrow_name(a)) + " arrow exists in one model only at " + G.labels[v] + " / " +
                              P.labels[u]);
                continue;
            }
            const int x = G.next[v][c], y = P.next[u][c];
            if (x < 0 || y < 0) continue;
            if (res.image[x] < 0)
                res.image[x] = y;
            else if (res.image[x] != y)
                note(rep, "path dependence at " + G.labels[x] + ": " + P.labels[res.image[x]] + " vs " + P.labels[y]);
        }
    }
    std::set<int> hit(res.image.begin(), res.image.end());
    hit.erase(-1);
    if (hit.size() != G.labels.size()) note(rep, "delta is not injective");
    if (hit.size() != P.labels.size()) note(rep, "delta is not onto pairs2");
    if (rep.rank_counts_a != rep.rank_counts_b) note(rep, "rank counts differ");
    rep.pass = rep.failures.empty();
    return res;
}

IsoReport verify_isomorphism(Model a, Model b, int max_rank) {
    auto is = [&](Model x, Model y) { return (a == x && b == y) || (a == y && b == x); };
    if (is(Model::word1, Model::partition1)) return verify_word_partition_iso(max_rank);
    if (is(Model::grounded2, Model::pairs2)) return delta_bfs(max_rank).report;
    throw usage_error(std::string("no isomorphism between ") + model_name(a) + " and " + model_name(b));
}

}  // namespace gq
