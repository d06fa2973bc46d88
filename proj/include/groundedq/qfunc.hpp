#pragma once

#include "groundedq/series.hpp"

namespace gq {

inline constexpr int kInf = -1;

// prod_{j<count} (1 - m q^{step j}); count == kInf for the infinite product.
BiSeries pochhammer(const Monomial& m, int step, int count, Orders o);
// Univariate shortcut; m must not involve t.
Series pochhammer(const Monomial& m, int step, int count, int order);

Series q_int(int n, int order);    // [n]_q = 1 + q + ... + q^{n-1}
Series q_factorial(int n);         // exact polynomial
Series q_binomial(int n, int k);   // exact polynomial of degree k(n-k)
Series q_yamanouchi(int n, int k); // exact polynomial of degree k(n-1), n >= k

// Product side for grounded partitions of level n with ground colour index i.
Series grounded_product_gf(int n, int i, int order);

inline constexpr int kMaxLevel = 3;

// Sum side of Heine's q-Gauss formula in base q^step:
//   sum_n (a)_n (b)_n / ((q^step)_n (c)_n) z^n,  z = c/(ab),
// or its b -> infinity limit sum_n (a)_n / ((q^step)_n (c)_n) (-c/a)^n q^{step C(n,2)}
// when b is empty.
BiSeries heine_sum(const Monomial& a, const std::optional<Monomial>& b, const Monomial& c, int step,
                  Orders o);

}  // namespace gq
