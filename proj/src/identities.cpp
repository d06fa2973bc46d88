#include "groundedq/identities.hpp"

#include <functional>
#include <map>

#include "groundedq/qfunc.hpp"
#include "groundedq/series_ops.hpp"
#include "groundedq/words.hpp"

namespace gq {

using detail::beyond;
using detail::div_one_minus;
using detail::mul_one_minus;

namespace {

BiSeries poch(int sign, int t, int q, int step, int count, Orders o) {
    return pochhammer(Monomial{sign, t, q}, step, count, o);
}

// 1 / (m; q^step)_count
BiSeries poch_inv(int sign, int t, int q, int step, int count, Orders o) {
    BiSeries r = BiSeries::one(o);
    for (int j = 0; count == kInf || j < count; ++j) {
        Monomial f{sign, t, q + step * j};
        if (beyond(f, o)) {
            if (count == kInf) break;
            continue;
        }
        div_one_minus(r, f);
    }
    return r;
}

BiSeries lift(const Series& s, Orders o) {
    BiSeries r(o);
    for (int j = 0; j <= o.q && j <= s.order(); ++j) r.at(0, j) = s[j];
    return r;
}

BiSeries sum_p2b(Orders o, bool with_t) {
    // term_n = t^n q^{n^2} (-1;q^2)_n / ((tq;q^2)_n (q^2;q^2)_n)
    const int tt = with_t ? 1 : 0;
    BiSeries total = BiSeries::one(o), term = BiSeries::one(o);
    for (int n = 1;; ++n) {
        Monomial pre{1, tt * n, n * n};
        if (beyond(pre, o)) break;
        mul_one_minus(term, {-1, 0, 2 * (n - 1)});
        div_one_minus(term, {1, tt, 2 * n - 1});
        div_one_minus(term, {1, 0, 2 * n});
        total += term.times(pre);
    }
    return total;
}

BiSeries sum_p2a(Orders o, bool with_t) {
    // term_n = q^{n(n+1)} (-tq;q^2)_n / ((q^2;q^2)_n (tq;q^2)_{n+1})
    const int tt = with_t ? 1 : 0;
    BiSeries term = BiSeries::one(o);
    div_one_minus(term, {1, tt, 1});
    BiSeries total = term;
    for (int n = 1;; ++n) {
        Monomial pre{1, 0, n * (n + 1)};
        if (beyond(pre, o)) break;
        mul_one_minus(term, {-1, tt, 2 * n - 1});
        div_one_minus(term, {1, 0, 2 * n});
        div_one_minus(term, {1, tt, 2 * n + 1});
        total += term.times(pre);
    }
    return total;
}

// sum_n q^{e(n)} / (q)_n for an increasing exponent e
BiSeries sum_over_qn(Orders o, const std::function<int(int)>& e) {
    BiSeries total(o), term = BiSeries::one(o);
    for (int n = 0;; ++n) {
        if (n > 0) div_one_minus(term, {1, 0, n});
        Monomial pre{1, 0, e(n)};
        if (beyond(pre, o)) break;
        total += term.times(pre);
    }
    return total;
}

BiSeries dilated_yamanouchi(int n, int k, int s, Orders o) {
    return lift(q_yamanouchi(n, k).resized(o.q).dilate(s), o);
}

BiSeries decomp_sum(const std::string& variant, Orders o) {
    BiSeries total(o);
    const int N = o.q;
    if (variant == "decomp1" || variant == "decomp1-green") {
        const bool green = variant == "decomp1-green";
        for (int n = 0;; ++n) {
            const int base = green ? (2 * n + 1) * n : n * (2 * n - 1);
            if (base > N) break;
            const int m = green ? 2 * n + 1 : 2 * n;
            BiSeries inv = poch_inv(1, 0, 2, 2, m, o);
            for (int k = 0; k <= n; ++k) {
                const int e = base + 3 * k;
                if (e > N) break;
                const int len1 = green ? 2 * (n - k) + 2 : 2 * (n - k) + 1;
                BiSeries t = dilated_yamanouchi(m - k, k, 2, o) * inv * lift(q_int(len1, N), o);
                total += t.times({1, 0, e});
            }
        }
    } else {  // decomp2
        for (int d = 0; d * d <= N; ++d) {  // d = n - k
            for (int k = 0;; ++k) {
                const int n = d + k;
                const int e = 2 * k + d * d;
                if (e > N) break;
                BiSeries t = dilated_yamanouchi(n, k, 4, o) * poch_inv(1, 0, 2, 2, n + k, o) *
                             lift(q_int(2 * d + 2, N), o);
                total += t.times({1, 0, e});
            }
        }
    }
    return total;
}

IdentityReport compare(const std::string& name, const BiSeries& lhs, const BiSeries& rhs) {
    IdentityReport r;
    r.name = name;
    r.first_mismatch = first_mismatch(lhs, rhs);
    r.equal = !r.first_mismatch;
    if (r.first_mismatch) {
        auto [q, t] = *r.first_mismatch;
        r.detail = "coefficient of t^" + std::to_string(t) + " q^" + std::to_string(q) + ": lhs " +
                   lhs.at(t, q).str() + ", rhs " + rhs.at(t, q).str();
    }
    return r;
}

IdentityReport family(const std::string& name, const std::vector<std::pair<int, int>>& cases,
                      const std::function<std::pair<Series, Series>(int, int)>& sides) {
    IdentityReport r;
    r.name = name;
    r.equal = true;
    for (auto [n, k] : cases) {
        auto [a, b] = sides(n, k);
        const int ord = std::max(a.order(), b.order());
        a = a.resized(ord);
        b = b.resized(ord);
        if (auto m = first_mismatch(a, b)) {
            r.equal = false;
            r.first_mismatch = std::make_pair(*m, 0);
            r.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " at q^" + std::to_string(*m);
            return r;
        }
    }
    r.detail = std::to_string(cases.size()) + " cases";
    return r;
}

}  // namespace

BiSeries sum_side(const std::string& name, Orders o) {
    if (name == "p2b") return sum_p2b(o, true);
    if (name == "p2a") return sum_p2a(o, true);
    if (name == "rr1") return sum_over_qn(o, [](int n) { return n * n; });
    if (name == "rr2") return sum_over_qn(o, [](int n) { return n * (n + 1); });
    if (name == "staircase-distinct") return sum_over_qn(o, [](int n) { return n * (n + 1) / 2; });
    throw usage_error("unknown sum side: " + name);
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "p2b",       "p2a",           "p2b-t1",       "p2a-t1",      "p2a-alt",        "rr1",
        "rr2",       "staircase",     "heine-limit-p2b", "heine-limit-p2a", "heine-gauss", "decomp1",
        "decomp1-green", "decomp2",   "mmaj-L",       "mmaj-Y",      "macmahon"};
    return names;
}

bool is_bivariate_identity(const std::string& name) {
    return name == "p2b" || name == "p2a" || name.rfind("heine-", 0) == 0;
}

IdentityReport verify_identity(const std::string& name, int order) {
    if (order < 0) throw usage_error("order must be nonnegative");
    const Orders bi{order, order}, uni{0, order};

    if (name == "p2b")
        return compare(name, sum_p2b(bi, true), poch(-1, 1, 1, 2, kInf, bi) * poch_inv(1, 1, 1, 2, kInf, bi));
    if (name == "p2a")
        return compare(name, sum_p2a(bi, true), poch(-1, 0, 2, 2, kInf, bi) * poch_inv(1, 1, 1, 2, kInf, bi));
    if (name == "p2b-t1")
        return compare(name, sum_p2b(uni, false), poch(-1, 0, 1, 2, kInf, uni) * poch_inv(1, 0, 1, 2, kInf, uni));
    if (name == "p2a-t1")
        return compare(name, sum_p2a(uni, false), poch(-1, 0, 2, 2, kInf, uni) * poch_inv(1, 0, 1, 2, kInf, uni));
    if (name == "p2a-alt")
        return compare(name, poch(-1, 0, 2, 2, kInf, uni) * poch_inv(1, 0, 1, 2, kInf, uni),
                       poch(1, 0, 4, 4, kInf, uni) * poch_inv(1, 0, 1, 1, kInf, uni));
    if (name == "rr1")
        return compare(name, sum_side("rr1", uni), poch_inv(1, 0, 1, 5, kInf, uni) * poch_inv(1, 0, 4, 5, kInf, uni));
    if (name == "rr2")
        return compare(name, sum_side("rr2", uni), poch_inv(1, 0, 2, 5, kInf, uni) * poch_inv(1, 0, 3, 5, kInf, uni));
    if (name == "staircase")
        return compare(name, poch(-1, 0, 1, 1, kInf, uni), sum_side("staircase-distinct", uni));
    if (name == "heine-limit-p2b")
        return compare(name, heine_sum({-1, 0, 0}, std::nullopt, {1, 1, 1}, 2, bi),
                       poch(-1, 1, 1, 2, kInf, bi) * poch_inv(1, 1, 1, 2, kInf, bi));
    if (name == "heine-limit-p2a")
        return compare(name, heine_sum({-1, 1, 1}, std::nullopt, {1, 1, 3}, 2, bi),
                       poch(-1, 0, 2, 2, kInf, bi) * poch_inv(1, 1, 3, 2, kInf, bi));
    if (name == "heine-gauss") {
        BiSeries rhs = poch(-1, 1, 2, 2, kInf, bi);
        rhs = rhs * rhs * poch_inv(1, 1, 3, 2, kInf, bi) * poch_inv(1, 1, 1, 2, kInf, bi);
        return compare(name, heine_sum({-1, 0, 1}, Monomial{-1, 0, 1}, {1, 1, 3}, 2, bi), rhs);
    }
    if (name == "decomp1" || name == "decomp1-green")
        return compare(name, poch(-1, 0, 1, 1, kInf, uni), decomp_sum(name, uni));
    if (name == "decomp2")
        return compare(name, poch(-1, 0, 1, 2, kInf, uni) * poch_inv(1, 0, 1, 2, kInf, uni), decomp_sum(name, uni));

    if (name == "mmaj-L" || name == "mmaj-Y") {
        const bool yam = name == "mmaj-Y";
        std::vector<std::pair<int, int>> cases;
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; n + k <= 12; ++k)
                if (!yam || k <= n) cases.emplace_back(n, k);
        return family(name, cases, [yam](int n, int k) {
            Series lhs = mmaj_gf(n, k, yam);
            Series rhs = yam ? q_yamanouchi(n, k) : q_binomial(n + k, k);
            const int shift = yam ? 2 * k : k;
            rhs = rhs.resized(rhs.order() + shift).shifted(shift);
            return std::make_pair(lhs, rhs);
        });
    }
    if (name == "macmahon") {
        std::vector<std::pair<int, int>> cases;
        for (int n = 0; n <= 7; ++n) cases.emplace_back(n, n);
        return family(name, cases, [](int n, int) {
            Series b = q_binomial(2 * n, n);
            return std::make_pair(maj_gf(n, n, true), divide_exact(b, q_int(n + 1, b.order())));
        });
    }
    throw usage_error("unknown identity: " + name);
}

}  // namespace gq
