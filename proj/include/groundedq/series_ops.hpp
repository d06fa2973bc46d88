#pragma once

// In-place multiplication and division by a single factor (1 - m). These keep
// the long products and sums cheap; everything else goes through BiSeries.

#include "groundedq/series.hpp"

namespace gq::detail {

void mul_one_minus(BiSeries& s, const Monomial& m);
void div_one_minus(BiSeries& s, const Monomial& m);
bool beyond(const Monomial& m, Orders o);

}  // namespace gq::detail
