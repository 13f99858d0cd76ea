#ifndef NCMUT_CANONICAL_HPP
#define NCMUT_CANONICAL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncmut/bmatrix.hpp"
#include "ncmut/golden.hpp"

namespace ncmut {

namespace detail {
inline std::array<std::int64_t, 2> key_cell(const golden_int& x) { return {x.p, x.q}; }
// Float entries are quantized to 9 decimals; the bound keeps the scaled
// value inside int64 range.
inline std::array<std::int64_t, 2> key_cell(double x) {
    if (!std::isfinite(x) || std::abs(x) > 4e9)
        throw std::overflow_error("canonical_key: float entry out of quantization range");
    return {std::llround(x * 1e9), 0};
}
}  // namespace detail

// Lexicographically minimal row-major rendering of P B P^T over all
// permutations P. Exact cells order by ring value, float cells by their
// quantized integer.
struct canonical_key {
    bool exact = true;
    int n = 0;
    std::vector<std::array<std::int64_t, 2>> cells;  // row-major

    int compare(const canonical_key& o) const {
        if (exact != o.exact) return exact ? -1 : 1;
        if (n != o.n) return n < o.n ? -1 : 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int c;
            if (exact)
                c = golden_cmp(golden_int{cells[i][0], cells[i][1]}, golden_int{o.cells[i][0], o.cells[i][1]});
            else
                c = cells[i][0] < o.cells[i][0] ? -1 : cells[i][0] > o.cells[i][0] ? 1 : 0;
            if (c != 0) return c;
        }
        return 0;
    }
    bool operator<(const canonical_key& o) const { return compare(o) < 0; }
    bool operator==(const canonical_key& o) const { return exact == o.exact && n == o.n && cells == o.cells; }
    bool operator!=(const canonical_key& o) const { return !(*this == o); }
};

template <class S>
struct canonical_form_t {
    canonical_key key;
    bmatrix<S> rep;  // the permuted matrix realizing the key
};

template <class S>
canonical_form_t<S> canonical_form(const bmatrix<S>& B) {
    const int n = B.size();
    if (n > 8) throw std::invalid_argument("canonical_key: brute force over permutations supports n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm;
    canonical_key best;
    bool first = true;
    do {
        canonical_key cand;
        cand.exact = scalar_ops<S>::exact;
        cand.n = n;
        cand.cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                cand.cells.push_back(detail::key_cell(B.at(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)])));
        if (first || cand < best) {
            best = std::move(cand);
            best_perm = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    square_matrix<S> pm(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            pm.at(r, c) = B.at(best_perm[static_cast<std::size_t>(r)], best_perm[static_cast<std::size_t>(c)]);
    return {std::move(best), bmatrix<S>(std::move(pm))};
}

template <class S>
canonical_key canonical_key_of(const bmatrix<S>& B) {
    return canonical_form(B).key;
}

}  // namespace ncmut

#endif
