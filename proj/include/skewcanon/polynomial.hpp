#ifndef SKEWCANON_POLYNOMIAL_HPP
#define SKEWCANON_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "skewcanon/errors.hpp"
#include "skewcanon/matrix.hpp"
#include "skewcanon/scalar.hpp"

namespace skewcanon {

/// Univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has an empty coefficient list; anything else keeps a nonzero
/// leading coefficient.
template <typename S>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({ScalarTraits<S>::one()}); }
    /// the monomial t
    static Polynomial t() { return Polynomial({ScalarTraits<S>::zero(), ScalarTraits<S>::one()}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coefficients() const { return c_; }

    S coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return ScalarTraits<S>::zero();
        return c_[static_cast<std::size_t>(k)];
    }

    S leading() const {
        if (c_.empty()) throw ValidationError("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == ScalarTraits<S>::one(); }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        Polynomial r = *this;
        S lead = c_.back();
        for (S& x : r.c_) x = x / lead;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarTraits<S>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarTraits<S>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, ScalarTraits<S>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const S& s, const Polynomial& a) {
        Polynomial r = a;
        for (S& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// quotient and remainder of exact division by a nonzero divisor
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw ValidationError("polynomial division by zero");
        Polynomial rem = *this;
        std::vector<S> q(degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree() + 1) : 0,
                         ScalarTraits<S>::zero());
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            S f = rem.leading() / d.leading();
            int shift = rem.degree() - d.degree();
            q[static_cast<std::size_t>(shift)] = f;
            std::vector<S> sub(static_cast<std::size_t>(shift), ScalarTraits<S>::zero());
            sub.push_back(f);
            rem = rem - Polynomial(std::move(sub)) * d;
        }
        return {Polynomial(std::move(q)), rem};
    }

    bool divides_exactly(const Polynomial& divisor) const {
        return divmod(divisor).second.is_zero();
    }

    Polynomial pow(int e) const {
        Polynomial r = one();
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<S> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = ScalarTraits<S>::from_int(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(r));
    }

    S eval(const S& x) const {
        S acc = ScalarTraits<S>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    template <typename T, typename F>
    Polynomial<T> map(F&& f) const {
        std::vector<T> r;
        r.reserve(c_.size());
        for (const S& x : c_) r.push_back(f(x));
        return Polynomial<T>(std::move(r));
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const S& a = c_[static_cast<std::size_t>(k)];
            if (ScalarTraits<S>::is_zero(a)) continue;
            if (!out.empty()) out += " + ";
            if (k == 0) {
                out += ScalarTraits<S>::str(a);
            } else {
                if (!(a == ScalarTraits<S>::one())) out += ScalarTraits<S>::str(a) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && ScalarTraits<S>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

/// monic gcd by Euclid's algorithm; exact fields only
template <typename S>
Polynomial<S> poly_gcd(Polynomial<S> a, Polynomial<S> b) {
    static_assert(ScalarTraits<S>::is_exact, "poly_gcd requires exact arithmetic");
    while (!b.is_zero()) {
        Polynomial<S> r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

template <typename S>
Polynomial<S> poly_lcm(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<S>();
    Polynomial<S> g = poly_gcd(a, b);
    return (a * b).divmod(g).first.monic();
}

/// Horner evaluation of p at a square matrix
template <typename S>
Matrix<S> evaluate_matrix_polynomial(const Matrix<S>& J, const Polynomial<S>& p) {
    if (J.rows() != J.cols()) throw ValidationError("matrix polynomial needs a square matrix");
    const int n = J.rows();
    Matrix<S> acc(n, n);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * J;
        for (int i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

} // namespace skewcanon

#endif
