#pragma once

#include <string>
#include <vector>

#include "groundedq/grounded.hpp"
#include "groundedq/partitions.hpp"

namespace gq {

// Sequences inside the bijections are kept in increasing order, as grounded
// partitions are displayed.
using ColouredSeq = std::vector<Part>;
// Values with bar flags, increasing order (the P2a bar notation).
using BarSeq = std::vector<OverPart>;

struct P2bTrace {
    GroundedPartition input;
    GroundedPartition p_min;
    Partition loose;  // decreasing
    ColouredSeq p1;   // after the kept even parts are absorbed
    ColouredSeq p2;   // after the loose parts are absorbed
    Overpartition result;
};

struct InversePass {
    int m = 0;  // length of the top row of 2's
    int s = 0;  // 1-based start of that row
    int j = 0;  // largest part is 2j-1 (P2b) or j = ceil(largest/2) (P2a)
    int g = 0;  // gap found, 0 when the pass stops
    int i = 0;
};

struct P2bInverseTrace {
    Overpartition input;
    ColouredSeq p_s;          // minimal sequence with the colour word s(lambda)
    std::vector<int> heights; // (lambda - p_s) / 2
    std::vector<InversePass> passes;
    GroundedPartition p_min;
    Partition loose;
    GroundedPartition result;
};

P2bTrace p2b_forward_trace(const GroundedPartition& g);
Overpartition p2b_forward(const GroundedPartition& g);
P2bInverseTrace p2b_inverse_trace(const Overpartition& lambda);
GroundedPartition p2b_inverse(const Overpartition& lambda);

struct P2aTrace {
    GroundedPartition input;
    BarSeq barred;  // input in bar notation
    BarSeq p_min;
    Partition loose;
    BarSeq p1;
    BarSeq p2;
    Partition result;  // decreasing
};

struct P2aInverseTrace {
    Partition input;
    BarSeq p_s;
    std::vector<int> heights;
    std::vector<InversePass> passes;
    BarSeq p_min;
    Partition loose;
    BarSeq barred;
    GroundedPartition result;
};

// Bar notation of an element of P_{2,a} and back.
BarSeq to_bar_notation(const GroundedPartition& g);
GroundedPartition from_bar_notation(const BarSeq& s);

P2aTrace p2a_forward_trace(const GroundedPartition& g);
Partition p2a_forward(const GroundedPartition& g);
P2aInverseTrace p2a_inverse_trace(const Partition& p);
GroundedPartition p2a_inverse(const Partition& p);

// Alternative Step 3 ordering of the P2b forward map (smallest loose part
// first), used to check that the order of absorption does not matter.
Overpartition p2b_forward_smallest_first(const GroundedPartition& g);

std::string to_string(const ColouredSeq& s);
std::string to_string_bars(const BarSeq& s);

}  // namespace gq
