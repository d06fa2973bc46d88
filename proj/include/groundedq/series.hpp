#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gq {

using Int = boost::multiprecision::cpp_int;

// Bad parameters from the caller. The CLI maps this to exit code 2.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Truncated power series in q with exact integer coefficients 0..order.
class Series {
public:
    explicit Series(int order = 0);
    Series(int order, std::vector<Int> coeffs);

    static Series one(int order);
    static Series monomial(int order, const Int& c, int exp);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int i) const { return c_[i]; }
    Int& operator[](int i) { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series operator-() const;

    bool operator==(const Series& o) const = default;

    // Truncate or zero-pad. Padding is only meaningful for exact polynomials.
    Series resized(int order) const;
    // q -> q^s. The result keeps `order`, so it is exact for truncated series.
    Series dilate(int s) const;
    // Multiply by c*q^e.
    Series shifted(int e, const Int& c = 1) const;

    int degree() const;  // -1 for the zero series
    bool is_zero() const { return degree() < 0; }
    Int sum() const;
    bool palindromic() const;  // as a polynomial up to its degree

    std::string str() const;

private:
    std::vector<Int> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);

// s^{-1} for s with constant term +1 or -1.
Series invert_unit(const Series& s);

// Exact polynomial quotient num/den; throws std::logic_error on a remainder.
Series divide_exact(const Series& num, const Series& den);

// ±t^a q^b, the only parameter shape the q-functions need.
struct Monomial {
    int sign = 1;
    int t_exp = 0;
    int q_exp = 0;
    int degree() const { return t_exp + q_exp; }
    Monomial operator*(const Monomial& o) const { return {sign * o.sign, t_exp + o.t_exp, q_exp + o.q_exp}; }
    // Exact quotient; nullopt when an exponent would go negative.
    std::optional<Monomial> over(const Monomial& o) const;
    std::string str() const;
};

struct Orders {
    int t = 0;
    int q = 0;
    bool operator==(const Orders&) const = default;
};

// Bivariate series in t and q, truncated independently in each variable.
// Stored row-major: coefficient of t^i q^j is at(i, j).
class BiSeries {
public:
    explicit BiSeries(Orders o = {});
    static BiSeries one(Orders o);
    static BiSeries monomial(Orders o, const Monomial& m);
    static BiSeries from_series(const Series& s, int order_t);

    Orders orders() const { return o_; }
    const Int& at(int i, int j) const { return c_[i * (o_.q + 1) + j]; }
    Int& at(int i, int j) { return c_[i * (o_.q + 1) + j]; }

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries& operator*=(const BiSeries& o);
    BiSeries operator-() const;
    bool operator==(const BiSeries& o) const = default;

    BiSeries times(const Monomial& m) const;
    // q -> q^s
    BiSeries dilate_q(int s) const;
    // coefficient of t^i as a q-series
    Series t_coeff(int i) const;
    // Sum over all tracked t-powers. Exact when no monomial of q-degree <= order
    // has t-degree above order_t, which holds for part-counting series
    // whenever order_t >= order_q.
    Series at_t1() const;
    bool is_zero() const;
    std::vector<std::vector<Int>> rows() const;

private:
    void check(const BiSeries& o) const;
    Orders o_;
    std::vector<Int> c_;
};

BiSeries operator+(BiSeries a, const BiSeries& b);
BiSeries operator-(BiSeries a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries invert_unit(const BiSeries& s);

// First differing (q, t) exponent pair, ordered by q then t.
std::optional<std::pair<int, int>> first_mismatch(const BiSeries& a, const BiSeries& b);
std::optional<int> first_mismatch(const Series& a, const Series& b);

}  // namespace gq
