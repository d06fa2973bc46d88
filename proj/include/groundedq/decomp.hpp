#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groundedq/crystal.hpp"
#include "groundedq/grounded.hpp"
#include "groundedq/partitions.hpp"
#include "groundedq/series.hpp"
#include "groundedq/words.hpp"

namespace gq {

// --- level 1 --------------------------------------------------------------
// Corner word of one colour, read bottom to top: addable -> 0, removable -> 1.
// A partition is a starting point of that colour iff the word is Yamanouchi,
// and the string length is then #0 - #1.
Word fingerprint1(const Partition& p, Arrow a = Arrow::blue);
bool is_starting_point1(const Partition& p, Arrow a = Arrow::blue);

// Staircase of length |w|-1 plus diagonals; w even-length Yamanouchi.
Partition psi(const Word& w);
// Inverse of psi on pivots.
Word phi(const Partition& pivot);

// True if no two-cell removal from a column keeps the corner word.
bool is_pivot1(const Partition& p, Arrow a = Arrow::blue);
// Every pivot reachable from a starting point by repeated two-cell column
// removals that keep the corner word. There should be exactly one.
std::vector<Partition> pivots_by_removal(const Partition& s, Arrow a = Arrow::blue);
// Blue pivot via the fingerprint: psi(fingerprint1(s)).
Partition pivot1_of(const Partition& s);
// Column additions b_i that take the pivot to s, if s is in the pivot's family
// (even, weakly decreasing, only in the first `cols` columns).
std::optional<std::vector<int>> family_offsets(const Partition& pivot, const Partition& s, int cols);

// Pivot plus every admissible column addition, up to max_weight.
std::vector<Partition> starting_point_family(const Partition& pivot, int cols, int max_weight);

// --- level 2 --------------------------------------------------------------
// a -> 0, c -> 1 over the a/c parts, b-parts skipped.
Word colour_word2(const GroundedPartition& g);
bool is_starting_point2(const LabelledDiagram& d);
// The unique b-free element of P_{2,b} with the given a/c word.
GroundedPartition realise_b_free(const Word& w);
GroundedPartition pivot2_of(const GroundedPartition& s);

// --- pivot generating functions --------------------------------------------
// q^{3k + C(n+k,2)} Y_{q^2}(n,k), n+k even.
Series pivot_gf1(int n, int k);
// q^{2k + (n-k)^2} Y_{q^4}(n,k).
Series pivot_gf2(int n, int k);
// The same sums taken over Y(n,k) through psi / realise_b_free.
Series enumerated_pivot_gf1(int n, int k);
Series enumerated_pivot_gf2(int n, int k);

// --- strings --------------------------------------------------------------
struct StringRow {
    int level = 1;
    std::string start, pivot;
    int n = 0, k = 0;  // summation indices of the decomposition formula
    int length = 0;
    int weight = 0;    // of the starting point
};

const std::vector<std::string>& decomp_variants();

struct DecompReport {
    std::string variant;
    int order = 0, max_weight = 0;
    bool series_equal = false;
    std::string series_detail;
    bool strings_ok = false;  // partition, lengths, pivots, families
    bool reconstruction_ok = false;
    std::vector<std::string> failures;
    std::vector<StringRow> rows;  // strings whose start has weight <= max_weight
    bool pass() const { return series_equal && strings_ok && reconstruction_ok; }
};

// Strings only (no series check); rows sorted by start weight then BFS order.
std::vector<StringRow> decomp_strings(const std::string& variant, int max_weight);
DecompReport verify_decomposition(const std::string& variant, int order, int max_weight);

struct PivotGfReport {
    int level = 1;
    int max_len = 0;
    bool pass = false;
    int cases = 0;
    std::vector<std::string> failures;
};
// Enumerated pivot gfs against the closed forms for all n >= k with n+k <= max_len
// (n+k even at level 1).
PivotGfReport verify_pivot_gfs(int level, int max_len);

std::string strings_csv(const std::vector<StringRow>& rows);

}  // namespace gq
