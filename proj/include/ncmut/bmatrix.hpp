#ifndef NCMUT_BMATRIX_HPP
#define NCMUT_BMATRIX_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncmut/golden.hpp"

namespace ncmut {

// Entry-type traits used by the matrix layer. Exact entries live in the
// golden ring with rational symmetrizer coefficients; float entries use
// plain doubles with strict sign tests.
template <class S>
struct scalar_ops;

template <>
struct scalar_ops<golden_int> {
    static constexpr bool exact = true;
    using ratio_type = golden_rational;
    static golden_int zero() { return {0, 0}; }
    static int sign(const golden_int& x) { return golden_sign(x); }
    static golden_int neg(const golden_int& x) { return -x; }
    static golden_int add(const golden_int& x, const golden_int& y) { return x + y; }
    static golden_int mul(const golden_int& x, const golden_int& y) { return golden_mul(x, y); }
    static ratio_type one() { return golden_rational(golden_int{1, 0}); }
    // -x/y as an exact ring ratio
    static ratio_type neg_ratio(const golden_int& x, const golden_int& y) {
        return golden_rational(-x) / golden_rational(y);
    }
    static ratio_type scale(const ratio_type& d, const ratio_type& r) { return d * r; }
    // d_i b_ij + d_j b_ji = 0, exactly
    static bool balanced(const ratio_type& di, const golden_int& bij, const ratio_type& dj, const golden_int& bji) {
        return (di * golden_rational(bij) + dj * golden_rational(bji)).is_zero();
    }
    static double embed(const golden_int& x) { return x.embed(); }
};

template <>
struct scalar_ops<double> {
    static constexpr bool exact = false;
    using ratio_type = double;
    static double zero() { return 0.0; }
    static int sign(double x) { return (x > 0) - (x < 0); }
    static double neg(double x) { return -x; }
    static double add(double x, double y) { return x + y; }
    static double mul(double x, double y) { return x * y; }
    static ratio_type one() { return 1.0; }
    static ratio_type neg_ratio(double x, double y) { return -x / y; }
    static ratio_type scale(double d, double r) { return d * r; }
    static bool balanced(double di, double bij, double dj, double bji) {
        double lhs = di * bij, rhs = -dj * bji;
        double scale = std::max(std::abs(lhs), std::abs(rhs));
        return scale == 0.0 || std::abs(lhs - rhs) <= 1e-9 * scale;
    }
    static double embed(double x) { return x; }
};

// Plain row-major square array, unvalidated.
template <class S>
struct square_matrix {
    int n = 0;
    std::vector<S> e;

    square_matrix() = default;
    explicit square_matrix(int n_) : n(n_), e(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), scalar_ops<S>::zero()) {
        if (n_ < 1) throw std::invalid_argument("square_matrix: order must be positive");
    }
    static square_matrix from_rows(const std::vector<std::vector<S>>& rows) {
        square_matrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.n)
                throw std::invalid_argument("square_matrix: ragged rows");
            for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }
    S& at(int i, int j) { return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    const S& at(int i, int j) const { return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    bool operator==(const square_matrix&) const = default;
};

template <class S>
struct symmetrizer_result {
    bool ok = false;
    std::vector<typename scalar_ops<S>::ratio_type> d;  // positive diagonal witness
    int bad_i = -1, bad_j = -1;                         // 0-based violating pair when !ok
    std::string reason;
};

// Fix d = 1 on one vertex per connected component of the nonzero pattern,
// propagate d_j = -d_i b_ij / b_ji along edges, verify every pair.
template <class S>
symmetrizer_result<S> find_symmetrizer(const square_matrix<S>& m) {
    using ops = scalar_ops<S>;
    symmetrizer_result<S> res;
    const int n = m.n;
    auto fail = [&](int i, int j, std::string why) {
        res.ok = false;
        res.bad_i = i;
        res.bad_j = j;
        res.reason = std::move(why) + " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        return res;
    };
    for (int i = 0; i < n; ++i)
        if (ops::sign(m.at(i, i)) != 0) return fail(i, i, "nonzero diagonal entry");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int sij = ops::sign(m.at(i, j)), sji = ops::sign(m.at(j, i));
            if ((sij == 0) != (sji == 0)) return fail(i, j, "zero pattern not symmetric");
            if (sij != 0 && sij == sji) return fail(i, j, "opposite entries share a sign");
        }
    res.d.assign(static_cast<std::size_t>(n), ops::one());
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        queue.assign(1, root);
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            for (int j = 0; j < n; ++j) {
                if (j == i || ops::sign(m.at(i, j)) == 0) continue;
                if (!seen[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = 1;
                    res.d[static_cast<std::size_t>(j)] =
                        ops::scale(res.d[static_cast<std::size_t>(i)], ops::neg_ratio(m.at(i, j), m.at(j, i)));
                    queue.push_back(j);
                }
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (ops::sign(m.at(i, j)) == 0) continue;
            if (!ops::balanced(res.d[static_cast<std::size_t>(i)], m.at(i, j), res.d[static_cast<std::size_t>(j)], m.at(j, i)))
                return fail(i, j, "no consistent symmetrizer");
        }
    res.ok = true;
    return res;
}

// Skew-symmetrizable matrix: construction validates and caches the witness D.
template <class S>
class bmatrix {
public:
    using ratio_type = typename scalar_ops<S>::ratio_type;

    explicit bmatrix(square_matrix<S> m) : m_(std::move(m)) {
        auto r = find_symmetrizer(m_);
        if (!r.ok) throw std::invalid_argument("bmatrix: not skew-symmetrizable: " + r.reason);
        d_ = std::move(r.d);
    }
    static bmatrix from_rows(const std::vector<std::vector<S>>& rows) {
        return bmatrix(square_matrix<S>::from_rows(rows));
    }

    int size() const { return m_.n; }
    const S& at(int i, int j) const { return m_.at(i, j); }  // 0-based
    const square_matrix<S>& raw() const { return m_; }
    const std::vector<ratio_type>& symmetrizer() const { return d_; }
    bool operator==(const bmatrix& o) const { return m_ == o.m_; }

private:
    square_matrix<S> m_;
    std::vector<ratio_type> d_;
};

// Mutation at direction k (1-based). Away from row/column k the update adds
// |b_ik| b_kj exactly when b_ik and b_kj carry the same strict sign, which
// keeps exact entries inside the ring.
template <class S>
bmatrix<S> mutate(const bmatrix<S>& B, int k) {
    using ops = scalar_ops<S>;
    const int n = B.size();
    if (k < 1 || k > n) throw std::out_of_range("mutate: k must be in 1.." + std::to_string(n));
    const int kk = k - 1;
    square_matrix<S> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == kk || j == kk) {
                out.at(i, j) = ops::neg(B.at(i, j));
            } else {
                S v = B.at(i, j);
                int si = ops::sign(B.at(i, kk));
                int sj = ops::sign(B.at(kk, j));
                if (si != 0 && si == sj) {
                    S prod = ops::mul(B.at(i, kk), B.at(kk, j));
                    if (si < 0) prod = ops::neg(prod);
                    v = ops::add(v, prod);
                }
                out.at(i, j) = v;
            }
        }
    return bmatrix<S>(std::move(out));
}

}  // namespace ncmut

#endif
