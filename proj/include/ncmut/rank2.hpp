#ifndef NCMUT_RANK2_HPP
#define NCMUT_RANK2_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncmut/golden.hpp"

namespace ncmut {

// Exchange weights. Either derived from the dihedral parameter m (a =
// 4cos^2(pi/m), b = 1) or given explicitly for the integer-exponent cases.
struct rank2_params {
    double a = 0;
    double b = 1;
    int m = 0;  // 0 when raw exponents were supplied

    static rank2_params from_m(int m) {
        if (m < 3) throw std::invalid_argument("rank2: m must be at least 3");
        rank2_params p;
        p.m = m;
        p.a = 4.0 * std::pow(std::cos(M_PI / m), 2.0);
        p.b = 1.0;
        if (m > 4 && !(p.a > 2.0)) throw std::logic_error("rank2: m > 4 must give a > 2");
        return p;
    }

    static rank2_params from_exponents(double a, double b) {
        if (!(a > 0) || !(b > 0)) throw std::invalid_argument("rank2: exponents must be positive");
        rank2_params p;
        p.a = a;
        p.b = b;
        return p;
    }

    double weight(int i) const { return i % 2 == 0 ? a : b; }
};

namespace detail {
// pow with an exact shortcut at exponent 1 so that sequences built through
// weight-1 steps reproduce bit-identical doubles along both code paths.
inline double pw(double x, double w) { return w == 1.0 ? x : std::pow(x, w); }
}  // namespace detail

// Window of the recurrence x_{i-1} x_{i+1} = x_i^{w(i)} + 1 around the
// initial pair (x_1, x_2). All terms strictly positive.
struct exchange_sequence {
    rank2_params params;
    double x1 = 0, x2 = 0;
    int lo = 1, hi = 2;
    std::vector<double> v;

    double at(int i) const {
        if (i < lo || i > hi) throw std::out_of_range("exchange_sequence: index " + std::to_string(i) + " outside window");
        return v[static_cast<std::size_t>(i - lo)];
    }
};

inline exchange_sequence generate_x(const rank2_params& params, double x1, double x2, int lo, int hi) {
    if (!(x1 > 0) || !(x2 > 0)) throw std::invalid_argument("generate_x: initial values must be positive");
    if (!(lo <= 1 && 2 <= hi)) throw std::invalid_argument("generate_x: window must satisfy lo <= 1 <= 2 <= hi");
    exchange_sequence s;
    s.params = params;
    s.x1 = x1;
    s.x2 = x2;
    s.lo = lo;
    s.hi = hi;
    s.v.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
    auto put = [&](int i, double val) {
        if (!std::isfinite(val) || !(val > 0))
            throw std::domain_error("generate_x: sequence degenerated at index " + std::to_string(i));
        s.v[static_cast<std::size_t>(i - lo)] = val;
    };
    put(1, x1);
    put(2, x2);
    for (int i = 2; i < hi; ++i)
        put(i + 1, (detail::pw(s.at(i), params.weight(i)) + 1.0) / s.at(i - 1));
    for (int i = 1; i > lo; --i)
        put(i - 1, (detail::pw(s.at(i), params.weight(i)) + 1.0) / s.at(i + 1));
    return s;
}

inline bool check_period(const exchange_sequence& seq, int period, double tol) {
    if (period < 1) throw std::invalid_argument("check_period: period must be positive");
    if (seq.hi - seq.lo + 1 < 2 * period)
        throw std::invalid_argument("check_period: window too small, need at least two periods");
    for (int i = seq.lo; i + period <= seq.hi; ++i) {
        double rel = std::abs(seq.at(i + period) - seq.at(i)) / seq.at(i);
        if (!(rel <= tol)) return false;
    }
    return true;
}

// y_i = x_{2i} for every even index the window covers.
inline std::map<int, double> y_subsequence(const exchange_sequence& seq) {
    std::map<int, double> y;
    int ilo = seq.lo % 2 == 0 ? seq.lo / 2 : (seq.lo + 1) / 2;
    for (int i = ilo; 2 * i <= seq.hi; ++i) y[i] = seq.at(2 * i);
    return y;
}

struct y_recursion_result {
    std::vector<std::pair<int, double>> residuals;  // (interior index, residual)
    bool all_within_tol = true;
};

// Residuals of y_{i-1} y_i y_{i+1} = y_{i-1} + y_{i+1} + y_i^{a-1} for every
// interior index, normalized by the triple product.
inline y_recursion_result verify_y_recursion(const std::map<int, double>& y, double a, double tol) {
    if (y.size() < 3) throw std::invalid_argument("verify_y_recursion: need at least 3 consecutive terms");
    y_recursion_result out;
    for (auto it = std::next(y.begin()); std::next(it) != y.end(); ++it) {
        auto prev = std::prev(it);
        auto next = std::next(it);
        if (prev->first + 1 != it->first || it->first + 1 != next->first)
            throw std::invalid_argument("verify_y_recursion: indices must be consecutive");
        double yl = prev->second, ym = it->second, yr = next->second;
        double lhs = yl * ym * yr;
        double r = std::abs(lhs - yl - yr - std::pow(ym, a - 1.0)) / lhs;
        if (!(r <= tol)) out.all_within_tol = false;
        out.residuals.emplace_back(it->first, r);
    }
    return out;
}

// g_0 = 0, g_1 = 1, g_{i+1} = (a-2) g_i - g_{i-1}, with a - 2 = 2cos(2pi/m).
// Closed form: g_i = (w^i - conj(w)^i)/(w - conj(w)) = sin(2 pi i / m) / sin(2 pi / m)
// where w = exp(2 pi sqrt(-1) / m).
struct g_sequence_t {
    int m = 0;
    std::vector<double> v;
    std::complex<double> omega;  // exp(2 pi i / m), used only by closed_form

    double at(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= v.size())
            throw std::out_of_range("g_sequence: index out of range");
        return v[static_cast<std::size_t>(i)];
    }
    double closed_form(int i) const {
        return std::imag(std::polar(1.0, 2.0 * M_PI * i / m)) / std::imag(omega);
    }
};

inline g_sequence_t g_sequence(int m, int L) {
    if (m < 3) throw std::invalid_argument("g_sequence: m must be at least 3");
    if (L < 2) throw std::invalid_argument("g_sequence: need L >= 2");
    g_sequence_t g;
    g.m = m;
    g.omega = std::polar(1.0, 2.0 * M_PI / m);
    g.v.resize(static_cast<std::size_t>(L) + 1);
    g.v[0] = 0.0;
    g.v[1] = 1.0;
    double am2 = 2.0 * std::cos(2.0 * M_PI / m);
    for (int i = 1; i < L; ++i)
        g.v[static_cast<std::size_t>(i) + 1] = am2 * g.v[static_cast<std::size_t>(i)] - g.v[static_cast<std::size_t>(i) - 1];
    return g;
}

// Exact variant for m = 5, where a - 2 lies in the golden ring.
inline std::vector<golden_int> g_sequence_golden(int L) {
    if (L < 2) throw std::invalid_argument("g_sequence_golden: need L >= 2");
    std::vector<golden_int> g(static_cast<std::size_t>(L) + 1);
    g[0] = {0, 0};
    g[1] = {1, 0};
    const golden_int am2{-2, 1};
    for (int i = 1; i < L; ++i)
        g[static_cast<std::size_t>(i) + 1] = golden_mul(am2, g[static_cast<std::size_t>(i)]) - g[static_cast<std::size_t>(i) - 1];
    return g;
}

// The approximating sequence on its index set I:
//   m even: I = {-2, ..., m/2};  m odd: I = {-(m+1)/2, ..., (m+5)/2}.
struct approx_sequence_t {
    int m = 0;
    std::vector<int> index_set;
    std::map<int, double> y;
    double x3 = 0;

    double at(int i) const {
        auto it = y.find(i);
        if (it == y.end()) throw std::out_of_range("approx_sequence: index " + std::to_string(i) + " not in I");
        return it->second;
    }
    bool contains(int i) const { return y.count(i) != 0; }
};

inline approx_sequence_t approx_sequence(int m, double x1, double x2) {
    if (m <= 4) throw std::invalid_argument("approx_sequence: m must exceed 4");
    if (!(x1 > 0) || !(x2 > 0)) throw std::invalid_argument("approx_sequence: initial values must be positive");
    const double a = rank2_params::from_m(m).a;
    approx_sequence_t ap;
    ap.m = m;
    auto& Y = ap.y;
    auto set = [&](int i, double val) {
        if (!std::isfinite(val) || !(val > 0))
            throw std::domain_error("approx_sequence: degenerate value at Y_" + std::to_string(i));
        Y[i] = val;
    };
    auto dividend = [&](int i, double d) {
        if (!std::isfinite(d) || !(d > 0))
            throw std::domain_error("approx_sequence: degenerate denominator at Y_" + std::to_string(i));
        return d;
    };
    set(1, x2);
    ap.x3 = (std::pow(x2, a) + 1.0) / x1;  // = Y_1 Y_2 - 1
    set(2, (ap.x3 + 1.0) / x2);
    set(0, Y[2] / dividend(0, Y[1] * Y[2] - 1.0));
    set(-1, std::pow(Y[0], a - 1.0) / dividend(-1, Y[0] * Y[1] - 1.0));
    set(-2, std::pow(Y[-1], a - 2.0) / dividend(-2, Y[0]));
    set(3, std::pow(Y[2], a - 1.0) / dividend(3, Y[1] * Y[2] - 1.0));
    if (m % 2 == 0) {
        for (int i = 3; i + 1 <= m / 2; ++i)
            set(i + 1, std::pow(Y[i], a - 2.0) / dividend(i + 1, Y[i - 1]));
        for (int i = -2; i <= m / 2; ++i) ap.index_set.push_back(i);
    } else {
        for (int i = 3; i <= (m - 1) / 2; ++i)
            set(i + 1, std::pow(Y[i], a - 2.0) / dividend(i + 1, Y[i - 1]));
        int h = (m + 1) / 2;
        set(h + 1, (std::pow(Y[h], a - 1.0) + Y[h - 1]) / dividend(h + 1, Y[h] * Y[h - 1]));
        set(h + 2, Y[h] / dividend(h + 2, Y[h + 1] * Y[h] - 1.0));
        for (int i = -2; i >= -(m - 3) / 2; --i)
            set(i - 1, std::pow(Y[i], a - 2.0) / dividend(i - 1, Y[i + 1]));
        int lowest = -(m + 1) / 2;
        set(lowest, (std::pow(Y[lowest + 1], a - 1.0) + Y[lowest + 2]) /
                        dividend(lowest, Y[lowest + 1] * Y[lowest + 2]));
        for (int i = lowest; i <= (m + 5) / 2; ++i) ap.index_set.push_back(i);
    }
    return ap;
}

// Checks Y_{i+2} = Y_2^{g_i + g_{i+1}} x_3^{-g_i} and
// Y_{-i} = Y_2^{g_i + g_{i+1}} x_3^{-g_{i+1}} on their stated ranges.
inline bool verify_exponent_formula(const approx_sequence_t& ap, const g_sequence_t& g, double x3, double tol) {
    const int m = ap.m;
    if (static_cast<int>(g.v.size()) < (m - 1) / 2 + 2)
        throw std::invalid_argument("verify_exponent_formula: g sequence too short");
    double Y2 = ap.at(2);
    auto ok = [&](double lhs, double rhs) { return std::abs(lhs - rhs) / std::abs(rhs) <= tol; };
    for (int i = 0; 2 * i <= m - 3; ++i) {
        if (!ap.contains(i + 2)) continue;
        double rhs = std::pow(Y2, g.at(i) + g.at(i + 1)) * std::pow(x3, -g.at(i));
        if (!ok(ap.at(i + 2), rhs)) return false;
    }
    for (int i = 0; 2 * i <= m - 1; ++i) {
        if (!ap.contains(-i)) continue;
        double rhs = std::pow(Y2, g.at(i) + g.at(i + 1)) * std::pow(x3, -g.at(i + 1));
        if (!ok(ap.at(-i), rhs)) return false;
    }
    return true;
}

struct error_row {
    int i = 0;       // subsequence index
    int n = 0;       // position in the full sequence, n = 2i
    double y = 0;    // exact recurrence value x_{2i}
    double Y = 0;    // approximation
    double relerr = 0;
};

struct error_report_t {
    std::vector<error_row> rows;

    double max_relerr() const {
        double m = 0;
        for (const auto& r : rows) m = std::max(m, r.relerr);
        return m;
    }
};

inline error_report_t error_report(const exchange_sequence& seq, const approx_sequence_t& ap) {
    error_report_t rep;
    for (int i : ap.index_set) {
        error_row r;
        r.i = i;
        r.n = 2 * i;
        r.y = seq.at(2 * i);
        r.Y = ap.at(i);
        r.relerr = std::abs(r.Y - r.y) / r.y;
        rep.rows.push_back(r);
    }
    return rep;
}

struct scaling_probe_row {
    double t = 0;
    double max_relerr = 0;
    double ratio = 0;  // max_relerr / (t^2 x1 x2)
};

struct scaling_probe_t {
    std::vector<scaling_probe_row> rows;
    bool truncated = false;  // underflow or degeneration cut the probe short
};

inline scaling_probe_t error_scaling_probe(int m, double x1, double x2, int steps) {
    if (!(x1 > 0 && x1 < 1 && x2 > 0 && x2 < 1))
        throw std::invalid_argument("error_scaling_probe: initial values must lie in (0,1)");
    if (steps < 3) throw std::invalid_argument("error_scaling_probe: need at least 3 steps");
    scaling_probe_t probe;
    for (int s = 0; s < steps; ++s) {
        double t = std::ldexp(1.0, -s);
        scaling_probe_row row;
        row.t = t;
        try {
            approx_sequence_t ap = approx_sequence(m, t * x1, t * x2);
            int lo = 2 * ap.index_set.front(), hi = 2 * ap.index_set.back();
            exchange_sequence seq = generate_x(rank2_params::from_m(m), t * x1, t * x2, lo, hi);
            row.max_relerr = error_report(seq, ap).max_relerr();
        } catch (const std::domain_error&) {
            probe.truncated = true;
            break;
        }
        row.ratio = row.max_relerr / (t * t * x1 * x2);
        probe.rows.push_back(row);
    }
    return probe;
}

namespace detail {
inline std::string fmt_val(double x, bool full_precision) {
    char buf[40];
    std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.6f", x);
    return buf;
}
}  // namespace detail

// Four-column table layout: Y and relerr cells are blank at odd n and at
// even n whose half-index lies outside I.
inline void write_sequence_csv(std::ostream& os, const exchange_sequence& seq,
                               const approx_sequence_t* ap, bool full_precision) {
    os << (ap ? "n,x_n,Y,relerr\n" : "n,x_n\n");
    for (int n = seq.lo; n <= seq.hi; ++n) {
        os << n << ',' << detail::fmt_val(seq.at(n), full_precision);
        if (ap) {
            if (n % 2 == 0 && ap->contains(n / 2)) {
                double y = seq.at(n);
                double Y = ap->at(n / 2);
                os << ',' << detail::fmt_val(Y, full_precision) << ','
                   << detail::fmt_val(std::abs(Y - y) / y, full_precision);
            } else {
                os << ",,";
            }
        }
        os << '\n';
    }
}

inline void write_approx_csv(std::ostream& os, const approx_sequence_t& ap, bool full_precision) {
    os << "i,n,Y\n";
    for (int i : ap.index_set)
        os << i << ',' << 2 * i << ',' << detail::fmt_val(ap.at(i), full_precision) << '\n';
}

inline void write_g_csv(std::ostream& os, const g_sequence_t& g, bool full_precision) {
    os << "i,g_i\n";
    for (std::size_t i = 0; i < g.v.size(); ++i)
        os << i << ',' << detail::fmt_val(g.v[i], full_precision) << '\n';
}

}  // namespace ncmut

#endif
