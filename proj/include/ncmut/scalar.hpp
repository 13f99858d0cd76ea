#ifndef NCMUT_SCALAR_HPP
#define NCMUT_SCALAR_HPP

#include <cmath>
#include <stdexcept>
#include <variant>

#include "ncmut/golden.hpp"

namespace ncmut {

enum class scalar_mode { exact, floating };

// Runtime-tagged number: exact golden rational or double. Arithmetic never
// mixes modes; mixing throws. Immutable after construction.
class scalar {
public:
    scalar() : v_(0.0) {}
    scalar(golden_rational g) : v_(g) {}
    scalar(golden_int g) : v_(golden_rational{g}) {}
    scalar(double d) : v_(d) {}

    scalar_mode mode() const {
        return std::holds_alternative<golden_rational>(v_) ? scalar_mode::exact
                                                           : scalar_mode::floating;
    }
    bool is_exact() const { return mode() == scalar_mode::exact; }

    const golden_rational& exact_value() const {
        if (!is_exact()) throw std::logic_error("scalar is not in exact mode");
        return std::get<golden_rational>(v_);
    }
    double float_value() const {
        if (is_exact()) throw std::logic_error("scalar is not in float mode");
        return std::get<double>(v_);
    }
    double embed() const {
        return is_exact() ? exact_value().embed() : std::get<double>(v_);
    }

    friend bool operator==(const scalar&, const scalar&) = default;

private:
    std::variant<golden_rational, double> v_;
};

namespace detail {
inline void require_same_mode(const scalar& x, const scalar& y) {
    if (x.mode() != y.mode())
        throw std::invalid_argument("scalar arithmetic cannot mix exact and float modes");
}
}  // namespace detail

inline scalar operator+(const scalar& x, const scalar& y) {
    detail::require_same_mode(x, y);
    if (x.is_exact()) return scalar{x.exact_value() + y.exact_value()};
    return scalar{x.float_value() + y.float_value()};
}

inline scalar operator-(const scalar& x, const scalar& y) {
    detail::require_same_mode(x, y);
    if (x.is_exact()) return scalar{x.exact_value() - y.exact_value()};
    return scalar{x.float_value() - y.float_value()};
}

inline scalar operator*(const scalar& x, const scalar& y) {
    detail::require_same_mode(x, y);
    if (x.is_exact()) return scalar{x.exact_value() * y.exact_value()};
    return scalar{x.float_value() * y.float_value()};
}

inline scalar operator/(const scalar& x, const scalar& y) {
    detail::require_same_mode(x, y);
    if (x.is_exact()) return scalar{x.exact_value() / y.exact_value()};
    return scalar{x.float_value() / y.float_value()};
}

inline scalar operator-(const scalar& x) {
    if (x.is_exact()) return scalar{-x.exact_value()};
    return scalar{-x.float_value()};
}

// Exact mode: decidable sign in the ring. Float mode: values within tol of
// zero count as zero.
inline int scalar_sign(const scalar& x, double tol = 1e-9) {
    if (x.is_exact()) return golden_sign(x.exact_value());
    double d = x.float_value();
    if (std::abs(d) <= tol) return 0;
    return d > 0 ? 1 : -1;
}

inline int scalar_sign(golden_int x) { return golden_sign(x); }
inline int scalar_sign(const golden_rational& x) { return golden_sign(x); }

// Real powering. Irrational exponents leave the ring, so the result is
// always a float scalar regardless of argument modes.
inline scalar golden_pow_real(const scalar& base, const scalar& expo) {
    double b = base.embed();
    if (!(b > 0)) throw std::domain_error("golden_pow_real requires a positive base");
    double e = expo.embed();
    if (e == 1.0) return scalar{b};
    return scalar{std::pow(b, e)};
}

}  // namespace ncmut

#endif
