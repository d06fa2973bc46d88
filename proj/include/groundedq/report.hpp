#pragma once

#include <string>
#include <vector>

namespace gq {

// One comparison between something the source displays and what the code
// computes. `kind` is "consistent", "anomaly" (a display that disagrees with
// the computation), or "interpretation" (a reading we had to choose).
struct DisplayCheck {
    std::string id;
    std::string kind;
    std::string claim;
    std::string displayed;
    std::string computed;
    std::string note;
};

// Every display check, in a fixed order. Anomalies are findings, not
// failures: the computation is the ground truth.
std::vector<DisplayCheck> display_checks();

// Listed weight-6 elements of the level-3 examples, as printed.
const std::vector<std::string>& listed_p3b_weight6();
const std::vector<std::string>& listed_p3a_weight6();
// The level-2 figure lists, weights 0..6, as printed (compact form).
const std::vector<std::string>& listed_p2b_figure();
const std::vector<std::string>& listed_p2a_figure();

}  // namespace gq
