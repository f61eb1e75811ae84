#include "nadyn/poly.hpp"

#include "nadyn/error.hpp"

#include <algorithm>
#include <sstream>

namespace nadyn {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(std::size_t k, const Scalar& c) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    for (auto& c : c_) c.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar Poly::operator()(const Scalar& t) const {
    Scalar acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Scalar> v(c_);
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const Scalar& s) const {
    std::vector<Scalar> v(c_);
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
}

Poly Poly::pow(unsigned n) const {
    Poly result = constant(1), base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Poly Poly::shifted(const Scalar& a) const {
    std::vector<Scalar> v(c_);
    const std::size_t n = v.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = n - 1; i > k; --i) v[i - 1] += a * v[i];
    return Poly(std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Poly(std::move(v));
}

PValue Poly::coefficient_norm(const Prime& p) const {
    PValue best = PValue::zero();
    for (const auto& c : c_) best = std::max(best, norm(c, p));
    return best;
}

std::string Poly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
    std::vector<Scalar> r(a.coeffs());
    const long db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
    const Scalar& lb = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        const Scalar f = r[static_cast<std::size_t>(i)] / lb;
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * (Scalar(1) / x.leading());
}

}  // namespace nadyn
