#include "groundedq/series.hpp"

#include <sstream>

namespace gq {

Series::Series(int order) {
    if (order < 0) throw usage_error("series order must be nonnegative");
    c_.assign(order + 1, Int(0));
}

Series::Series(int order, std::vector<Int> coeffs) : Series(order) {
    for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

Series Series::one(int order) {
    Series s(order);
    s.c_[0] = 1;
    return s;
}

Series Series::monomial(int order, const Int& c, int exp) {
    Series s(order);
    if (exp >= 0 && exp <= order) s.c_[exp] = c;
    return s;
}

static void same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw usage_error("series orders differ: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
}

Series& Series::operator+=(const Series& o) {
    same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    same_order(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series& Series::operator*=(const Series& o) {
    *this = *this * o;
    return *this;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }

Series operator*(const Series& a, const Series& b) {
    same_order(a, b);
    const int n = a.order();
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series Series::resized(int order) const {
    Series r(order);
    for (int i = 0; i <= order && i <= this->order(); ++i) r[i] = c_[i];
    return r;
}

Series Series::dilate(int s) const {
    if (s < 1) throw usage_error("dilation factor must be positive");
    Series r(order());
    for (int i = 0; i * s <= order(); ++i) r[i * s] = c_[i];
    return r;
}

Series Series::shifted(int e, const Int& c) const {
    Series r(order());
    for (int i = 0; i + e <= order(); ++i) {
        if (i + e >= 0) r[i + e] = c_[i] * c;
    }
    return r;
}

int Series::degree() const {
    for (int i = order(); i >= 0; --i)
        if (c_[i] != 0) return i;
    return -1;
}

Int Series::sum() const {
    Int s = 0;
    for (auto& x : c_) s += x;
    return s;
}

bool Series::palindromic() const {
    int d = degree();
    for (int i = 0; i <= d; ++i)
        if (c_[i] != c_[d - i]) return false;
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

Series invert_unit(const Series& s) {
    const Int& c0 = s[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("invert_unit: constant term is not a unit");
    const int n = s.order();
    Series r(n);
    r[0] = c0;  // 1/c0 == c0 for c0 = ±1
    for (int k = 1; k <= n; ++k) {
        Int acc = 0;
        for (int j = 1; j <= k; ++j) {
            if (s[j] != 0) acc += s[j] * r[k - j];
        }
        r[k] = -acc * c0;
    }
    return r;
}

Series divide_exact(const Series& num, const Series& den) {
    const int dn = num.degree(), dd = den.degree();
    if (dd < 0) throw std::domain_error("divide_exact: division by zero");
    if (dn < 0) return Series(0);
    if (dn < dd) throw std::logic_error("divide_exact: remainder is nonzero");
    const int dq = dn - dd;
    Series quot = num.resized(dq) * invert_unit(den.resized(dq));
    Series check = quot.resized(dn) * den.resized(dn);
    if (check != num.resized(dn)) throw std::logic_error("divide_exact: remainder is nonzero");
    return quot;
}

std::optional<Monomial> Monomial::over(const Monomial& o) const {
    if (t_exp < o.t_exp || q_exp < o.q_exp) return std::nullopt;
    return Monomial{sign * o.sign, t_exp - o.t_exp, q_exp - o.q_exp};
}

std::string Monomial::str() const {
    std::ostringstream os;
    os << (sign < 0 ? "-" : "");
    if (t_exp == 0 && q_exp == 0) os << "1";
    if (t_exp) os << "t" << (t_exp > 1 ? "^" + std::to_string(t_exp) : "");
    if (q_exp) os << "q" << (q_exp > 1 ? "^" + std::to_string(q_exp) : "");
    return os.str();
}

// --- BiSeries -------------------------------------------------------------

BiSeries::BiSeries(Orders o) : o_(o) {
    if (o.t < 0 || o.q < 0) throw usage_error("series order must be nonnegative");
    c_.assign(static_cast<size_t>(o.t + 1) * (o.q + 1), Int(0));
}

BiSeries BiSeries::one(Orders o) {
    BiSeries s(o);
    s.at(0, 0) = 1;
    return s;
}

BiSeries BiSeries::monomial(Orders o, const Monomial& m) {
    BiSeries s(o);
    if (m.t_exp <= o.t && m.q_exp <= o.q) s.at(m.t_exp, m.q_exp) = m.sign;
    return s;
}

BiSeries BiSeries::from_series(const Series& s, int order_t) {
    BiSeries r({order_t, s.order()});
    for (int j = 0; j <= s.order(); ++j) r.at(0, j) = s[j];
    return r;
}

void BiSeries::check(const BiSeries& o) const {
    if (!(o_ == o.o_)) throw usage_error("bivariate series orders differ");
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

BiSeries& BiSeries::operator*=(const BiSeries& o) {
    *this = *this * o;
    return *this;
}

BiSeries BiSeries::operator-() const {
    BiSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (!(a.orders() == b.orders())) throw usage_error("bivariate series orders differ");
    const Orders o = a.orders();
    BiSeries r(o);
    for (int i1 = 0; i1 <= o.t; ++i1)
        for (int j1 = 0; j1 <= o.q; ++j1) {
            const Int& x = a.at(i1, j1);
            if (x == 0) continue;
            for (int i2 = 0; i1 + i2 <= o.t; ++i2)
                for (int j2 = 0; j1 + j2 <= o.q; ++j2) {
                    const Int& y = b.at(i2, j2);
                    if (y != 0) r.at(i1 + i2, j1 + j2) += x * y;
                }
        }
    return r;
}

BiSeries BiSeries::times(const Monomial& m) const {
    BiSeries r(o_);
    for (int i = 0; i + m.t_exp <= o_.t; ++i)
        for (int j = 0; j + m.q_exp <= o_.q; ++j) r.at(i + m.t_exp, j + m.q_exp) = at(i, j) * m.sign;
    return r;
}

BiSeries BiSeries::dilate_q(int s) const {
    if (s < 1) throw usage_error("dilation factor must be positive");
    BiSeries r(o_);
    for (int i = 0; i <= o_.t; ++i)
        for (int j = 0; j * s <= o_.q; ++j) r.at(i, j * s) = at(i, j);
    return r;
}

Series BiSeries::t_coeff(int i) const {
    Series r(o_.q);
    if (i < 0 || i > o_.t) return r;
    for (int j = 0; j <= o_.q; ++j) r[j] = at(i, j);
    return r;
}

Series BiSeries::at_t1() const {
    Series r(o_.q);
    for (int i = 0; i <= o_.t; ++i)
        for (int j = 0; j <= o_.q; ++j) r[j] += at(i, j);
    return r;
}

bool BiSeries::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<Int>> BiSeries::rows() const {
    std::vector<std::vector<Int>> out(o_.t + 1);
    for (int i = 0; i <= o_.t; ++i)
        for (int j = 0; j <= o_.q; ++j) out[i].push_back(at(i, j));
    return out;
}

BiSeries invert_unit(const BiSeries& s) {
    const Int& c0 = s.at(0, 0);
    if (c0 != 1 && c0 != -1) throw std::domain_error("invert_unit: constant term is not a unit");
    const Orders o = s.orders();
    BiSeries r(o);
    // Solve s*r = 1 in graded order: r(i,j) depends only on smaller (i',j').
    for (int i = 0; i <= o.t; ++i)
        for (int j = 0; j <= o.q; ++j) {
            if (i == 0 && j == 0) {
                r.at(0, 0) = c0;
                continue;
            }
            Int acc = 0;
            for (int a = 0; a <= i; ++a)
                for (int b = 0; b <= j; ++b) {
                    if (a == 0 && b == 0) continue;
                    const Int& x = s.at(a, b);
                    if (x != 0) acc += x * r.at(i - a, j - b);
                }
            r.at(i, j) = -acc * c0;
        }
    return r;
}

std::optional<std::pair<int, int>> first_mismatch(const BiSeries& a, const BiSeries& b) {
    if (!(a.orders() == b.orders())) throw usage_error("bivariate series orders differ");
    const Orders o = a.orders();
    for (int j = 0; j <= o.q; ++j)
        for (int i = 0; i <= o.t; ++i)
            if (a.at(i, j) != b.at(i, j)) return std::make_pair(j, i);
    return std::nullopt;
}

std::optional<int> first_mismatch(const Series& a, const Series& b) {
    same_order(a, b);
    for (int j = 0; j <= a.order(); ++j)
        if (a[j] != b[j]) return j;
    return std::nullopt;
}

}  // namespace gq
