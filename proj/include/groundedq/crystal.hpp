#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groundedq/grounded.hpp"
#include "groundedq/partitions.hpp"
#include "groundedq/words.hpp"

namespace gq {

enum class Arrow { blue = 0, green = 1 };
inline constexpr std::array<Arrow, 2> kArrows = {Arrow::blue, Arrow::green};
const char* arrow_name(Arrow a);

// --- level 1, words -------------------------------------------------------
// A vertex is an even-length prefix; the tail continues 1010... by position
// parity (1 at odd positions). The initial word has the empty prefix.
Word word_normalize(Word prefix);
std::optional<Word> word_arrow(const Word& prefix, Arrow a);
std::string word_label(const Word& prefix);

// Discrepancy isomorphism to conjugate-distinct partitions.
Partition word_to_partition(const Word& prefix);
Word partition_to_word(const Partition& p);

// --- chequered partitions -------------------------------------------------
bool is_conjugate_distinct(const Partition& p);

struct Corner {
    int row = 0, col = 0;  // 1-based
    bool addable = false;
    int content() const { return col - row; }
};
// Corners of the given colour; `green_top_left` fixes the chequering.
std::vector<Corner> corners(const Partition& p, Arrow colour, bool green_top_left);
// Nearest-match bracketing: addable '(' is cancelled by a later removable ')'.
// Returns the index of the first unmatched addable corner.
std::optional<size_t> first_unmatched(const std::vector<Corner>& seq);

std::optional<Partition> partition1_arrow(const Partition& p, Arrow a);
// The corner brackets in reading order: '(' addable, ')' removable.
std::string partition1_brackets(const Partition& p, Arrow a);

using PartitionPair = std::pair<Partition, Partition>;
std::optional<PartitionPair> pairs2_arrow(const PartitionPair& v, Arrow a);
std::string pair_label(const PartitionPair& v);

// --- level 2, labelled diagrams -------------------------------------------
// rows[0] is the top (longest) row; each char is a cell label a/b/c.
struct LabelledDiagram {
    std::vector<std::string> rows;
    bool operator==(const LabelledDiagram&) const = default;
    auto operator<=>(const LabelledDiagram&) const = default;
};

bool diagram_valid(const LabelledDiagram& d);
Arrow cell_colour(const LabelledDiagram& d, int row, int col);  // 1-based
std::optional<LabelledDiagram> grounded2_arrow(const LabelledDiagram& d, Arrow a);
std::string grounded2_brackets(const LabelledDiagram& d, Arrow a);
GroundedPartition diagram_to_grounded(const LabelledDiagram& d);
// Odd column j starts at the bottom with the colour of the first part equal
// to j and alternates a/c upwards; even columns are all b.
LabelledDiagram canonical_diagram(const GroundedPartition& g);
Partition shape(const LabelledDiagram& d);
std::string diagram_key(const LabelledDiagram& d);

struct SplitS1S2 {
    // per row (top first): first column of the row's S1 cells, 0 if none
    std::vector<int> s1_start;
    int s1_size = 0, s2_size = 0;
    std::vector<int> s2_columns;  // S2 cells per column
};
// `stop_at_failure`: rows after the first row without a suitable a-cell do
// not contribute to S1.
SplitS1S2 split_s1_s2(const LabelledDiagram& d, bool stop_at_failure = true);
// nullopt when the S2 column counts are not weakly decreasing
std::optional<Partition> lambda2_of(const SplitS1S2& s);

struct Stripe {
    Arrow colour;
    int size;
};
// Same-colour components of S1 under west / south-west adjacency, by first column.
std::vector<Stripe> stripes(const LabelledDiagram& d, const SplitS1S2& s);
// Each stripe adds its cells, one at a time, at the lowest addable corner of its
// colour, green top-left.
Partition lambda1_from_stripes(const std::vector<Stripe>& st);

// --- graphs ---------------------------------------------------------------
enum class Model { word1, partition1, pairs2, grounded2 };
Model parse_model(const std::string& s);
const char* model_name(Model m);

struct Edge {
    int src = 0, dst = 0;  // vertex ids
    Arrow colour = Arrow::blue;
};

// Generated breadth-first; ids are in discovery order, ranks contiguous.
struct CrystalGraph {
    Model model = Model::word1;
    int max_rank = 0;
    std::vector<std::string> labels;
    std::vector<int> rank;
    std::vector<std::vector<int>> ranks;  // ids per rank
    std::vector<Edge> edges;              // only between generated vertices
    std::vector<std::array<bool, 2>> has_out;  // arrow exists (also at rank max_rank)
    std::vector<std::array<int, 2>> next;      // target id or -1
};

template <class V>
struct TypedGraph {
    CrystalGraph g;
    std::vector<V> verts;
};

template <class V, class ArrowF, class KeyF, class LabelF>
TypedGraph<V> bfs_graph(Model m, const V& root, int max_rank, ArrowF arrow, KeyF key, LabelF label) {
    TypedGraph<V> t;
    auto& g = t.g;
    g.model = m;
    g.max_rank = max_rank;
    std::map<std::string, int> index;
    auto add = [&](const V& v, int r) {
        auto k = key(v);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(t.verts.size());
        index.emplace(std::move(k), id);
        t.verts.push_back(v);
        g.labels.push_back(label(v));
        g.rank.push_back(r);
        g.has_out.push_back({false, false});
        g.next.push_back({-1, -1});
        if (static_cast<int>(g.ranks.size()) <= r) g.ranks.resize(r + 1);
        g.ranks[r].push_back(id);
        return id;
    };
    add(root, 0);
    for (size_t cur = 0; cur < t.verts.size(); ++cur) {
        const int r = g.rank[cur];
        for (Arrow a : kArrows) {
            auto w = arrow(t.verts[cur], a);
            if (!w) continue;
            g.has_out[cur][static_cast<int>(a)] = true;
            if (r >= max_rank) continue;
            const int id = add(*w, r + 1);
            g.next[cur][static_cast<int>(a)] = id;
            g.edges.push_back({static_cast<int>(cur), id, a});
        }
    }
    if (static_cast<int>(g.ranks.size()) < max_rank + 1) g.ranks.resize(max_rank + 1);
    return t;
}

TypedGraph<Word> word1_graph(int max_rank);
TypedGraph<Partition> partition1_graph(int max_rank);
TypedGraph<PartitionPair> pairs2_graph(int max_rank);
TypedGraph<LabelledDiagram> grounded2_graph(int max_rank);
CrystalGraph generate_graph(Model m, int max_rank);

std::vector<int> rank_counts(const CrystalGraph& g);
std::string to_dot(const CrystalGraph& g);

struct IsoReport {
    bool pass = false;
    std::vector<std::string> failures;  // first few, human readable
    std::vector<int> rank_counts_a, rank_counts_b;
};

// word1 -> partition1 through the discrepancy map.
IsoReport verify_word_partition_iso(int max_rank);

// The map delta: grounded2 -> pairs2 obtained by walking both graphs with the
// same arrows from the roots.
struct DeltaResult {
    IsoReport report;
    TypedGraph<LabelledDiagram> grounded;
    TypedGraph<PartitionPair> pairs;
    std::vector<int> image;  // grounded id -> pairs id
};
DeltaResult delta_bfs(int max_rank);

IsoReport verify_isomorphism(Model a, Model b, int max_rank);

}  // namespace gq
