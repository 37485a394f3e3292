#include "ale/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace ale {

namespace {

Polynomial x_pow_minus_one(int m) {
    std::vector<Rational> c(m + 1, Rational(0));
    c[0] = Rational(-1);
    c[m] = Rational(1);
    return Polynomial(std::move(c));
}

} // namespace

const Polynomial& cyclotomic_polynomial(int m) {
    static std::map<int, Polynomial> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw Error("cyclotomic order must be positive");
    Polynomial phi = x_pow_minus_one(m);
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        // Recursion bottoms out because divisors are strictly smaller.
        const Polynomial& phid = [&]() -> const Polynomial& {
            auto jt = cache.find(d);
            if (jt != cache.end()) return jt->second;
            // Compute ancestors by direct recursion: release/re-acquire is not
            // needed since operations below only touch `cache`.
            Polynomial sub = x_pow_minus_one(d);
            for (int e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                sub = divmod(sub, cache.at(e)).first;
            }
            return cache.emplace(d, std::move(sub)).first->second;
        }();
        phi = divmod(phi, phid).first;
    }
    return cache.emplace(m, std::move(phi)).first->second;
}

Cyclotomic::Cyclotomic(int order, Polynomial rep) : order_(order), rep_(std::move(rep)) {
    if (order < 1) throw Error("cyclotomic order must be positive");
    const Polynomial& phi = cyclotomic_polynomial(order_);
    if (rep_.degree() >= phi.degree()) rep_ = divmod(rep_, phi).second;
}

Cyclotomic Cyclotomic::root(int order, long power) {
    long p = power % order;
    if (p < 0) p += order;
    return Cyclotomic(order, Polynomial::monomial(Rational(1), static_cast<int>(p)));
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw MixedFieldError("cyclotomic orders " + std::to_string(order_) + " and " + std::to_string(o.order_));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return Cyclotomic(a.order_, a.rep_ + b.rep_);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return Cyclotomic(a.order_, a.rep_ - b.rep_);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return Cyclotomic(a.order_, a.rep_ * b.rep_);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return a * b.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("cyclotomic element");
    const Polynomial& phi = cyclotomic_polynomial(order_);
    auto [g, s, t] = poly_ext_gcd(rep_, phi);
    (void)t;
    if (g.degree() != 0) throw Error("cyclotomic representative not invertible (gcd with Phi not 1)");
    // g is monic of degree 0, hence exactly 1, so s * rep = 1 mod Phi.
    return Cyclotomic(order_, s);
}

Cyclotomic inv_root_minus_one(int order, long t) {
    long tt = t % order;
    if (tt < 0) tt += order;
    if (tt == 0) throw DivisionByZero("1/(zeta^0 - 1)");
    const int n = order / std::gcd(order, static_cast<int>(tt)); // order of zeta^t
    Cyclotomic acc = Cyclotomic::zero(order);
    for (long j = 1; j < n; ++j)
        acc += Cyclotomic::root(order, tt * j) * Cyclotomic::from_rational(order, Rational(j));
    return acc * Cyclotomic::from_rational(order, Rational(1) / Rational(n));
}

} // namespace ale
