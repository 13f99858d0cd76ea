#ifndef NCMUT_GOLDEN_HPP
#define NCMUT_GOLDEN_HPP

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncmut {

// a = (3+sqrt(5))/2, largest root of a^2 = 3a - 1.
inline constexpr double golden_a = 2.6180339887498948482;

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("golden arithmetic overflow (add)");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("golden arithmetic overflow (sub)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("golden arithmetic overflow (mul)");
    return r;
}

inline std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

inline std::uint64_t magnitude(std::int64_t x) {
    return x < 0 ? 0ull - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

}  // namespace detail

// Element p + q*a of the ring Z[a]. Products reduce via a^2 = 3a - 1.
struct golden_int {
    std::int64_t p = 0;
    std::int64_t q = 0;

    constexpr golden_int() = default;
    constexpr golden_int(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {}

    double embed() const { return static_cast<double>(p) + static_cast<double>(q) * golden_a; }
    bool is_zero() const { return p == 0 && q == 0; }

    friend bool operator==(const golden_int&, const golden_int&) = default;
};

inline golden_int operator+(golden_int x, golden_int y) {
    return {detail::checked_add(x.p, y.p), detail::checked_add(x.q, y.q)};
}

inline golden_int operator-(golden_int x, golden_int y) {
    return {detail::checked_sub(x.p, y.p), detail::checked_sub(x.q, y.q)};
}

inline golden_int operator-(golden_int x) {
    return {detail::checked_neg(x.p), detail::checked_neg(x.q)};
}

inline golden_int golden_mul(golden_int x, golden_int y) {
    using detail::checked_add;
    using detail::checked_mul;
    using detail::checked_sub;
    std::int64_t p = checked_sub(checked_mul(x.p, y.p), checked_mul(x.q, y.q));
    std::int64_t q = checked_add(checked_add(checked_mul(x.p, y.q), checked_mul(x.q, y.p)),
                                 checked_mul(3, checked_mul(x.q, y.q)));
    return {p, q};
}

inline golden_int operator*(golden_int x, golden_int y) { return golden_mul(x, y); }

// Galois conjugate: a maps to 3 - a, so p + q*a maps to (p + 3q) - q*a.
inline golden_int golden_conj(golden_int x) {
    return {detail::checked_add(x.p, detail::checked_mul(3, x.q)), detail::checked_neg(x.q)};
}

// Field norm x * conj(x) = p^2 + 3pq + q^2 (an ordinary integer, possibly negative).
inline std::int64_t golden_norm(golden_int x) {
    using detail::checked_add;
    using detail::checked_mul;
    return checked_add(checked_add(checked_mul(x.p, x.p), checked_mul(3, checked_mul(x.p, x.q))),
                       checked_mul(x.q, x.q));
}

// Exact sign of p + q*a. Doubling gives 2p + 3q + q*sqrt(5); compare the
// integer part against q*sqrt(5) by squaring, which stays exact in 128 bits
// as long as |2p + 3q| and |q| are below 2^62.
inline int golden_sign(golden_int x) {
    __int128 u = static_cast<__int128>(2) * x.p + static_cast<__int128>(3) * x.q;
    __int128 v = x.q;
    if (v == 0) return u > 0 ? 1 : (u < 0 ? -1 : 0);
    const __int128 cap = static_cast<__int128>(1) << 62;
    __int128 au = u < 0 ? -u : u;
    __int128 av = v < 0 ? -v : v;
    if (au > cap || av > cap) throw std::overflow_error("golden sign overflow");
    __int128 u2 = u * u;
    __int128 v5 = 5 * v * v;
    if (v > 0) {
        if (u >= 0) return 1;
        return v5 > u2 ? 1 : -1;  // u^2 == 5 v^2 impossible: sqrt(5) irrational
    }
    if (u <= 0) return -1;
    return v5 > u2 ? -1 : 1;
}

// Total order induced by the real embedding; decidable exactly.
inline int golden_cmp(golden_int x, golden_int y) { return golden_sign(x - y); }
inline bool operator<(golden_int x, golden_int y) { return golden_cmp(x, y) < 0; }

inline std::string to_string(golden_int x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld%+lld*a", static_cast<long long>(x.p),
                  static_cast<long long>(x.q));
    return buf;
}

// Grammar: "p+q*a" or "p-q*a" (both coefficients mandatory decimal integers),
// or a bare integer "p". No whitespace.
inline golden_int parse_golden(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("bad golden literal: '" + std::string(s) + "'"); };
    const char* b = s.data();
    const char* e = s.data() + s.size();
    std::int64_t p = 0, q = 0;
    if (b != e && *b == '+') ++b;
    auto r1 = std::from_chars(b, e, p);
    if (r1.ec != std::errc{}) fail();
    b = r1.ptr;
    if (b == e) return {p, 0};
    if (*b != '+' && *b != '-') fail();
    auto r2 = std::from_chars(*b == '+' ? b + 1 : b, e, q);
    if (r2.ec != std::errc{}) fail();
    b = r2.ptr;
    if (e - b != 2 || b[0] != '*' || b[1] != 'a') fail();
    return {p, q};
}

// Fraction (A + B*a)/C in lowest terms with C > 0. The canonical form makes
// equality structural, which keys and caches rely on.
struct golden_rational {
    golden_int num;
    std::int64_t den = 1;

    golden_rational() = default;
    golden_rational(golden_int n, std::int64_t d) : num(n), den(d) { normalize(); }
    golden_rational(golden_int n) : num(n) {}
    golden_rational(std::int64_t n) : num{n, 0} {}

    void normalize() {
        if (den == 0) throw std::domain_error("golden rational with zero denominator");
        std::uint64_t g = std::gcd(std::gcd(detail::magnitude(num.p), detail::magnitude(num.q)),
                                   detail::magnitude(den));
        if (g > 1) {
            num.p /= static_cast<std::int64_t>(g);
            num.q /= static_cast<std::int64_t>(g);
            den /= static_cast<std::int64_t>(g);
        }
        if (den < 0) {
            num = -num;
            den = detail::checked_neg(den);
        }
    }

    double embed() const { return num.embed() / static_cast<double>(den); }
    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const golden_rational&, const golden_rational&) = default;
};

inline golden_rational operator+(const golden_rational& x, const golden_rational& y) {
    golden_int n{detail::checked_add(detail::checked_mul(x.num.p, y.den), detail::checked_mul(y.num.p, x.den)),
                 detail::checked_add(detail::checked_mul(x.num.q, y.den), detail::checked_mul(y.num.q, x.den))};
    return {n, detail::checked_mul(x.den, y.den)};
}

inline golden_rational operator-(const golden_rational& x) { return golden_rational{-x.num, x.den}; }

inline golden_rational operator-(const golden_rational& x, const golden_rational& y) { return x + (-y); }

inline golden_rational operator*(const golden_rational& x, const golden_rational& y) {
    return {golden_mul(x.num, y.num), detail::checked_mul(x.den, y.den)};
}

inline golden_rational golden_inverse(const golden_rational& x) {
    if (x.is_zero()) throw std::domain_error("golden rational division by zero");
    golden_int c = golden_conj(x.num);
    std::int64_t n = golden_norm(x.num);  // num * conj(num)
    golden_int scaled{detail::checked_mul(c.p, x.den), detail::checked_mul(c.q, x.den)};
    return {scaled, n};
}

inline golden_rational operator/(const golden_rational& x, const golden_rational& y) {
    return x * golden_inverse(y);
}

inline int golden_sign(const golden_rational& x) { return golden_sign(x.num); }

inline std::string to_string(const golden_rational& x) {
    if (x.den == 1) return to_string(x.num);
    return "(" + to_string(x.num) + ")/" + std::to_string(x.den);
}

}  // namespace ncmut

#endif
