#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gq {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct OverPart {
    int v = 0;
    bool over = false;
    bool operator==(const OverPart&) const = default;
};
// Weakly decreasing; only the first (leftmost) copy of a value may be barred.
using Overpartition = std::vector<OverPart>;

int weight(const Partition& p);
int weight(const Overpartition& p);
bool is_partition(const Partition& p);
bool is_distinct(const Partition& p);
bool is_overpartition(const Overpartition& p);
Partition values(const Overpartition& p);

Partition conjugate(const Partition& p);

// p = staircase(n) + rest, added columnwise. The staircase is (n, ..., 1), or
// (2n-1, ..., 3, 1) when `odd` is set (then p needs gaps >= 2).
std::pair<int, Partition> staircase_split(const Partition& p, bool odd);
Partition staircase_join(int n, const Partition& rest, bool odd);

// Lexicographically decreasing part lists.
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_distinct(int n);
// Partitions of n with exactly k parts, all parts odd. Bars are then placed in
// order of the number of bars, then by bit mask with the smallest value as bit 0.
std::vector<Overpartition> enumerate_odd_overpartitions(int n, int k);
// Partitions of n with exactly k odd parts and pairwise distinct even parts.
std::vector<Partition> enumerate_distinct_even(int n, int k);

std::string to_string(const Partition& p);      // "(6,4,3,1)"
std::string to_string(const Overpartition& p);  // bars as a combining macron
// Accepts "1',1,3'" or comma/space separated values with a trailing ' or
// combining macron for a bar; brackets are ignored.
Overpartition parse_overpartition(const std::string& s);
Partition parse_partition(const std::string& s);

}  // namespace gq
