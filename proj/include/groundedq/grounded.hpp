#pragma once

#include <functional>
#include <string>
#include <vector>

#include "groundedq/series.hpp"

namespace gq {

// Colours are 0-based indices shown as a, b, c, d.
char colour_char(int c);
int colour_index(char ch);  // throws usage_error for anything but a..d

struct Part {
    int v = 0;
    int c = 0;
    bool operator==(const Part&) const = default;
    auto operator<=>(const Part&) const = default;
};

// Parts in weakly increasing order; the ground 0_{ground} is implicit.
struct GroundedPartition {
    int level = 2;
    int ground = 1;
    std::vector<Part> parts;
    bool operator==(const GroundedPartition&) const = default;
    auto operator<=>(const GroundedPartition&) const = default;
};

// |n - new - old| for 0-based colour indices.
int diff_entry(int n, int new_colour, int old_colour);

bool validate(const GroundedPartition& g);

// Every grounded partition of weight <= max_weight, ordered by weight.
std::vector<GroundedPartition> enumerate(int n, int ground, int max_weight);
// Depth-first walk without storing, for counting.
void for_each_grounded(int n, int ground, int max_weight, const std::function<void(const GroundedPartition&)>& f);

GroundedPartition swap_colours(const GroundedPartition& g);

struct GroundedStats {
    int weight = 0;
    int odd_count = 0;
    std::string colour_word;
};
GroundedStats stats(const GroundedPartition& g);
int weight(const GroundedPartition& g);

Series enumeration_gf(int n, int ground, int order);
// sum t^{odd} q^{weight}
BiSeries enumeration_odd_gf(int n, int ground, Orders o);

// "1_a 2_b 3_a"; the empty partition prints as its ground, e.g. "0_b".
std::string to_string(const GroundedPartition& g);
// Compact form used by fixtures: "1a2b3a".
std::string to_compact(const GroundedPartition& g);
// Reads either form ("1_a 2_b", "1a2b", "0_b"). Validation is separate.
GroundedPartition parse_grounded(const std::string& s, int level, int ground);

}  // namespace gq
