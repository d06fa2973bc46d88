#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groundedq/series.hpp"

namespace gq {

// Sum sides that are used on their own (by the grounded and bijection tests).
//   p2b:  sum t^n q^{n^2} (-1;q^2)_n / ((tq;q^2)_n (q^2;q^2)_n)
//   p2a:  sum q^{n(n+1)} (-tq;q^2)_n / ((q^2;q^2)_n (tq;q^2)_{n+1})
//   rr1, rr2:  sum q^{n^2} / (q)_n,  sum q^{n(n+1)} / (q)_n
//   staircase-distinct:  sum q^{C(n+1,2)} / (q)_n
BiSeries sum_side(const std::string& name, Orders o);

struct IdentityReport {
    std::string name;
    bool equal = false;
    // (q exponent, t exponent) of the first differing coefficient
    std::optional<std::pair<int, int>> first_mismatch;
    std::string detail;
};

const std::vector<std::string>& identity_names();
bool is_bivariate_identity(const std::string& name);

// `order` is the q-order; bivariate entries also use it as the t-order.
// The word-statistic entries (mmaj-L, mmaj-Y, macmahon) check a whole family
// and ignore the order.
IdentityReport verify_identity(const std::string& name, int order);

}  // namespace gq
