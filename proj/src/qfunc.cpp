#include "groundedq/qfunc.hpp"

#include "groundedq/series_ops.hpp"

namespace gq {

namespace detail {

void mul_one_minus(BiSeries& s, const Monomial& m) {
    const Orders o = s.orders();
    if (m.t_exp > o.t || m.q_exp > o.q) return;
    if (m.degree() == 0) {
        // (1 - (±1)) is 0 or 2
        for (int i = 0; i <= o.t; ++i)
            for (int j = 0; j <= o.q; ++j) s.at(i, j) *= (1 - m.sign);
        return;
    }
    for (int i = o.t; i >= m.t_exp; --i)
        for (int j = o.q; j >= m.q_exp; --j) {
            const Int& src = s.at(i - m.t_exp, j - m.q_exp);
            if (src == 0) continue;
            if (m.sign > 0)
                s.at(i, j) -= src;
            else
                s.at(i, j) += src;
        }
}

void div_one_minus(BiSeries& s, const Monomial& m) {
    const Orders o = s.orders();
    if (m.degree() == 0) throw std::domain_error("division by a non-unit factor 1 - (±1)");
    if (m.t_exp > o.t || m.q_exp > o.q) return;
    // s / (1 - m) = s + m s + m^2 s + ..., done in one ascending sweep.
    for (int i = m.t_exp; i <= o.t; ++i)
        for (int j = m.q_exp; j <= o.q; ++j) {
            const Int& src = s.at(i - m.t_exp, j - m.q_exp);
            if (src == 0) continue;
            if (m.sign > 0)
                s.at(i, j) += src;
            else
                s.at(i, j) -= src;
        }
}

bool beyond(const Monomial& m, Orders o) { return m.t_exp > o.t || m.q_exp > o.q; }

}  // namespace detail

using detail::beyond;

static void check_poch_args(const Monomial& m, int step, int count) {
    if (step < 1) throw usage_error("pochhammer step must be positive");
    if (count < kInf) throw usage_error("pochhammer count must be nonnegative or infinite");
    if (count == kInf && m.degree() == 0)
        throw std::domain_error("infinite pochhammer product with a degree-0 parameter does not truncate");
}

BiSeries pochhammer(const Monomial& m, int step, int count, Orders o) {
    check_poch_args(m, step, count);
    BiSeries r = BiSeries::one(o);
    for (int j = 0; count == kInf || j < count; ++j) {
        Monomial f{m.sign, m.t_exp, m.q_exp + step * j};
        if (beyond(f, o)) {
            if (count == kInf) break;
            continue;
        }
        detail::mul_one_minus(r, f);
    }
    return r;
}

Series pochhammer(const Monomial& m, int step, int count, int order) {
    if (m.t_exp != 0) throw usage_error("univariate pochhammer with a t-dependent parameter");
    return pochhammer(m, step, count, Orders{0, order}).t_coeff(0);
}

Series q_int(int n, int order) {
    if (n < 0) throw usage_error("q_int needs n >= 0");
    Series r(order);
    for (int j = 0; j < n && j <= order; ++j) r[j] = 1;
    return r;
}

Series q_factorial(int n) {
    if (n < 0) throw usage_error("q_factorial needs n >= 0");
    const int deg = n * (n - 1) / 2;
    Series r = Series::one(deg);
    for (int i = 2; i <= n; ++i) r *= q_int(i, deg);
    return r;
}

Series q_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw usage_error("q_binomial needs n >= k >= 0");
    const int deg = n * (n - 1) / 2;
    Series den = q_factorial(k).resized(deg) * q_factorial(n - k).resized(deg);
    return divide_exact(q_factorial(n), den);
}

Series q_yamanouchi(int n, int k) {
    if (k < 0 || n < k) throw usage_error("q_yamanouchi needs n >= k >= 0");
    Series bin = q_binomial(n + k, n);
    const int deg = bin.order() + (n - k);
    Series num = q_int(n - k + 1, deg) * bin.resized(deg);
    Series res = divide_exact(num, q_int(n + 1, deg));
    return res.resized(k * (n - 1) < 0 ? 0 : k * (n - 1));
}

Series grounded_product_gf(int n, int i, int order) {
    if (n < 1 || n > kMaxLevel) throw usage_error("level must be in 1.." + std::to_string(kMaxLevel));
    if (i < 0 || i > n) throw usage_error("ground index out of range for the level");
    const Orders o{0, order};
    const int s = n + 2;
    BiSeries r = pochhammer({1, 0, i + 1}, s, kInf, o) * pochhammer({1, 0, n - i + 1}, s, kInf, o) *
                 pochhammer({1, 0, s}, s, kInf, o);
    // divide by (q;q^2)_inf (q;q)_inf
    for (int j = 1; j <= order; j += 2) detail::div_one_minus(r, {1, 0, j});
    for (int j = 1; j <= order; ++j) detail::div_one_minus(r, {1, 0, j});
    return r.t_coeff(0);
}

BiSeries heine_sum(const Monomial& a, const std::optional<Monomial>& b, const Monomial& c, int step,
                  Orders o) {
    if (step < 1) throw usage_error("heine_sum step must be positive");
    if (c.degree() == 0) throw std::domain_error("heine_sum: c has zero total degree, (c)_n is not invertible");
    // Per-term prefactor monomial that multiplies term n-1 into term n (apart from
    // the Pochhammer ratios), plus the extra q^{step (n-1)} of the limit form.
    Monomial z;
    if (b) {
        auto ab = a * *b;
        auto q = c.over(ab);
        if (!q) throw std::domain_error("heine_sum: c/(ab) is not a monomial");
        z = *q;
    } else {
        auto q = c.over(a);
        if (!q) throw std::domain_error("heine_sum: c/a is not a monomial");
        z = *q;
        z.sign = -z.sign;  // (-c/a)
    }
    if (z.degree() < 1) throw std::domain_error("heine_sum: summand degree does not increase, sum does not truncate");

    BiSeries total = BiSeries::one(o);
    BiSeries term = BiSeries::one(o);
    Monomial prefix{1, 0, 0};  // z^n (times q^{step C(n,2)} in the limit form)
    for (int n = 1;; ++n) {
        prefix = prefix * z;
        if (!b) prefix.q_exp += step * (n - 1);
        if (beyond(prefix, o)) break;
        const int e = step * (n - 1);
        detail::mul_one_minus(term, {a.sign, a.t_exp, a.q_exp + e});
        if (b) detail::mul_one_minus(term, {b->sign, b->t_exp, b->q_exp + e});
        detail::div_one_minus(term, {1, 0, step * n});
        detail::div_one_minus(term, {c.sign, c.t_exp, c.q_exp + e});
        total += term.times(prefix);
    }
    return total;
}

}  // namespace gq
