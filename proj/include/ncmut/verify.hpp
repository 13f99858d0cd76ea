#ifndef NCMUT_VERIFY_HPP
#define NCMUT_VERIFY_HPP

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncmut/bmatrix.hpp"
#include "ncmut/canonical.hpp"
#include "ncmut/matrix_io.hpp"
#include "ncmut/mutation_class.hpp"
#include "ncmut/rank2.hpp"
#include "ncmut/reference_data.hpp"

namespace ncmut {

struct check_options {
    std::string fixture_path = "data/h3_class_fixture.json";
    double tol = 1e-9;  // tolerance for identity checks among computed doubles
};

struct check_result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace checks {

inline bmatrix<golden_int> h3_seed() {
    const golden_int z{0, 0}, one{1, 0}, neg{-1, 0}, a{0, 1};
    return bmatrix<golden_int>::from_rows({{z, a, z}, {neg, z, one}, {z, neg, z}});
}

inline bmatrix<golden_int> h4_seed() {
    const golden_int z{0, 0}, one{1, 0}, neg{-1, 0}, a{0, 1};
    return bmatrix<golden_int>::from_rows(
        {{z, a, z, z}, {neg, z, one, z}, {z, neg, z, one}, {z, z, neg, z}});
}

inline bmatrix<golden_int> rank2_golden_seed() {
    const golden_int z{0, 0}, neg{-1, 0}, a{0, 1};
    return bmatrix<golden_int>::from_rows({{z, a}, {neg, z}});
}

inline std::string fmt(double v, const char* spec = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Reference table reproduction at 1e-5 absolute, runtime < 1 s.
inline check_result check_reference_table(const check_options&) {
    check_result r{1, "reference table reproduction", false, ""};
    auto t0 = std::chrono::steady_clock::now();
    auto seq = generate_x(rank2_params::from_m(5), refdata::m5_x1, refdata::m5_x2, -6, 10);
    auto ap = approx_sequence(5, refdata::m5_x1, refdata::m5_x2);
    std::vector<std::string> bad;
    auto cell = [&](const char* label, int n, double computed, double expected) {
        double diff = std::abs(computed - expected);
        if (!(diff <= 1e-5))
            bad.push_back(std::string(label) + "[n=" + std::to_string(n) + "] computed " +
                          fmt(computed, "%.8f") + " vs table " + fmt(expected, "%.6f") +
                          " (diff " + fmt(diff, "%.2e") + ")");
    };
    for (const auto& row : refdata::m5_table) {
        cell("x", row.n, seq.at(row.n), row.x);
        if (row.has_y) {
            double Y = ap.at(row.n / 2);
            cell("Y", row.n, Y, row.y);
            cell("relerr", row.n, std::abs(Y - seq.at(row.n)) / seq.at(row.n), row.relerr);
        }
    }
    double secs = seconds_since(t0);
    if (!(secs < 1.0)) bad.push_back("runtime " + fmt(secs) + "s exceeds 1s");
    r.pass = bad.empty();
    if (r.pass) {
        r.detail = "all 35 table cells within 1e-5 absolute; runtime " + fmt(secs) + "s";
    } else {
        std::string d = std::to_string(bad.size()) + " of 35 cells off: ";
        for (std::size_t i = 0; i < bad.size(); ++i) d += (i ? "; " : "") + bad[i];
        r.detail = d;
    }
    return r;
}

// H3 class: 16 representatives matching the fixture, 24 edges, 3-regular.
inline check_result check_h3_class(const check_options& opt) {
    check_result r{2, "H3 mutation class", false, ""};
    auto t0 = std::chrono::steady_clock::now();
    auto cls = enumerate_class(h3_seed());
    std::vector<bmatrix<golden_int>> listed;
    try {
        listed = load_fixture(opt.fixture_path);
    } catch (const std::exception& e) {
        r.detail = std::string("fixture missing or unreadable: ") + e.what();
        return r;
    }
    auto st = class_graph_stats(cls);
    bool sizes = cls.size() == 16;
    bool match = verify_listed_class(cls, listed);
    bool graph = st.edges == 24 && st.degree_histogram.size() == 1 && st.degree_histogram.count(3) == 1;
    double secs = seconds_since(t0);
    bool fast = secs < 1.0;
    r.pass = sizes && match && graph && fast;
    r.detail = "size " + std::to_string(cls.size()) + " (want 16), fixture keys " +
               (match ? "match" : "MISMATCH") + ", " + std::to_string(st.edges) +
               " edges (want 24), " + (graph ? "3-regular" : "NOT 3-regular") + ", runtime " +
               fmt(secs) + "s";
    return r;
}

// H4 class size 82, runtime < 10 s.
inline check_result check_h4_class(const check_options&) {
    check_result r{3, "H4 mutation class", false, ""};
    auto t0 = std::chrono::steady_clock::now();
    auto cls = enumerate_class(h4_seed());
    double secs = seconds_since(t0);
    r.pass = cls.size() == 82 && secs < 10.0;
    r.detail = "class size " + std::to_string(cls.size()) + " (want 82), runtime " + fmt(secs) + "s";
    return r;
}

// Rank-2 golden seed has a two-element class.
inline check_result check_rank2_class(const check_options&) {
    check_result r{4, "rank-2 golden class", false, ""};
    auto cls = enumerate_class(rank2_golden_seed());
    r.pass = cls.size() == 2;
    r.detail = "class size " + std::to_string(cls.size()) + " (want 2)";
    return r;
}

// abc = 8 family: symmetrizer exists and every mutation negates the matrix;
// breaking abc = a'b'c' must make find_symmetrizer fail.
inline check_result check_triple_family(const check_options&) {
    check_result r{5, "symmetrizable triple family", false, ""};
    std::mt19937 rng(50817);
    std::uniform_real_distribution<double> logu(-1.3862943611198906, 1.3862943611198906);  // ln(1/4)..ln(4)
    auto build = [](double a, double b, double c, double ap, double bp, double cp) {
        return square_matrix<double>::from_rows(
            {{0.0, a, -cp}, {-ap, 0.0, b}, {c, -bp, 0.0}});
    };
    int trials = 0, negated = 0, witnessed = 0, rejected = 0;
    std::string first_bad;
    for (int t = 0; t < 20; ++t) {
        double a = std::exp(logu(rng)), c = std::exp(logu(rng));
        double b = 8.0 / (a * c);
        auto raw = build(a, b, c, b * c / 2, c * a / 2, a * b / 2);
        ++trials;
        if (find_symmetrizer(raw).ok) ++witnessed;
        bmatrix<double> B(raw);
        bool neg_ok = true;
        for (int k = 1; k <= 3 && neg_ok; ++k) {
            auto M = mutate(B, k);
            for (int i = 0; i < 3 && neg_ok; ++i)
                for (int j = 0; j < 3 && neg_ok; ++j)
                    if (!(std::abs(M.at(i, j) + B.at(i, j)) <= 1e-12 * std::max(1.0, std::abs(B.at(i, j))))) {
                        neg_ok = false;
                        if (first_bad.empty())
                            first_bad = "mu_" + std::to_string(k) + " != -B at (a,b,c)=(" + fmt(a) +
                                        "," + fmt(b) + "," + fmt(c) + ")";
                    }
        }
        if (neg_ok) ++negated;
        // perturb a' so that abc != a'b'c'
        auto bad = build(a, b, c, b * c / 2 * 1.37, c * a / 2, a * b / 2);
        if (!find_symmetrizer(bad).ok) ++rejected;
    }
    r.pass = witnessed == trials && negated == trials && rejected == trials;
    r.detail = std::to_string(trials) + " triples: symmetrizer " + std::to_string(witnessed) +
               "/" + std::to_string(trials) + ", mu_k(B)=-B " + std::to_string(negated) + "/" +
               std::to_string(trials) + ", perturbed rejected " + std::to_string(rejected) + "/" +
               std::to_string(trials) + (first_bad.empty() ? "" : "; " + first_bad);
    return r;
}

// Involution mu_k(mu_k(B)) = B and symmetrizer preservation.
inline check_result check_involution(const check_options& opt) {
    check_result r{6, "involution and symmetrizer preservation", false, ""};
    std::vector<bmatrix<golden_int>> exact = {h3_seed(), h4_seed(), rank2_golden_seed()};
    try {
        for (auto& m : load_fixture(opt.fixture_path)) exact.push_back(m);
    } catch (const std::exception& e) {
        r.detail = std::string("fixture missing or unreadable: ") + e.what();
        return r;
    }
    int exact_checked = 0;
    for (const auto& B : exact) {
        ++exact_checked;
        for (int k = 1; k <= B.size(); ++k) {
            auto M = mutate(B, k);
            if (!(mutate(M, k) == B)) {
                r.detail = "exact involution failed at matrix " + std::to_string(exact_checked) +
                           ", k=" + std::to_string(k);
                return r;
            }
            const auto& d = B.symmetrizer();
            for (int i = 0; i < B.size(); ++i)
                for (int j = i + 1; j < B.size(); ++j)
                    if (!scalar_ops<golden_int>::balanced(d[static_cast<std::size_t>(i)], M.at(i, j),
                                                          d[static_cast<std::size_t>(j)], M.at(j, i))) {
                        r.detail = "exact symmetrizer not preserved at matrix " +
                                   std::to_string(exact_checked) + ", k=" + std::to_string(k);
                        return r;
                    }
        }
    }
    std::mt19937 rng(60817);
    std::uniform_real_distribution<double> du(0.5, 2.0), su(-2.0, 2.0);
    int random_checked = 0;
    for (int t = 0; t < 100; ++t) {
        int n = 2 + t % 3;
        std::vector<double> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = du(rng);
        square_matrix<double> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double s = su(rng);
                m.at(i, j) = s / d[static_cast<std::size_t>(i)];
                m.at(j, i) = -s / d[static_cast<std::size_t>(j)];
            }
        bmatrix<double> B(m);
        for (int k = 1; k <= n; ++k) {
            auto M = mutate(B, k);
            auto MM = mutate(M, k);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (!(std::abs(MM.at(i, j) - B.at(i, j)) <= 1e-12 * std::max(1.0, std::abs(B.at(i, j))))) {
                        r.detail = "float involution failed, trial " + std::to_string(t) +
                                   ", k=" + std::to_string(k);
                        return r;
                    }
                }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    double lhs = d[static_cast<std::size_t>(i)] * M.at(i, j);
                    double rhs = -d[static_cast<std::size_t>(j)] * M.at(j, i);
                    if (!(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::max(std::abs(lhs), std::abs(rhs))))) {
                        r.detail = "float symmetrizer not preserved, trial " + std::to_string(t) +
                                   ", k=" + std::to_string(k);
                        return r;
                    }
                }
        }
        ++random_checked;
    }
    r.pass = true;
    r.detail = std::to_string(exact_checked) + " exact matrices and " +
               std::to_string(random_checked) + " random float matrices pass at 1e-12";
    return r;
}

// y-recursion residuals on generated data.
inline check_result check_y_recursion(const check_options& opt) {
    check_result r{7, "y-recursion residuals", false, ""};
    std::mt19937 rng(70817);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    double worst = 0;
    int pairs = 0;
    for (int m : {5, 7, 8, 9, 11, 12}) {
        auto params = rank2_params::from_m(m);
        for (int t = 0; t < 20; ++t) {
            auto seq = generate_x(params, u(rng), u(rng), -8, 12);
            auto res = verify_y_recursion(y_subsequence(seq), params.a, opt.tol);
            for (const auto& [i, rr] : res.residuals) worst = std::max(worst, rr);
            if (!res.all_within_tol) {
                r.detail = "residual above " + fmt(opt.tol, "%.3g") + " at m=" + std::to_string(m) +
                           ", trial " + std::to_string(t) + " (max " + fmt(worst, "%.3e") + ")";
                return r;
            }
            ++pairs;
        }
    }
    r.pass = true;
    r.detail = std::to_string(pairs) + " random pairs over m in {5,7,8,9,11,12}; max residual " +
               fmt(worst, "%.3e") + " <= " + fmt(opt.tol, "%.3g");
    return r;
}

// Closed form vs recurrence for g, plus the stated period m (odd) or m/2 (even).
inline check_result check_g_sequence(const check_options& opt) {
    check_result r{8, "g-sequence closed form and period", false, ""};
    std::string fails;
    double worst_cf = 0;
    for (int m = 5; m <= 12; ++m) {
        auto g = g_sequence(m, 200);
        double cf_dev = 0;
        for (int i = 0; i <= 200; ++i)
            cf_dev = std::max(cf_dev, std::abs(g.at(i) - g.closed_form(i)));
        worst_cf = std::max(worst_cf, cf_dev);
        if (!(cf_dev <= opt.tol)) {
            fails += (fails.empty() ? "" : "; ");
            fails += "m=" + std::to_string(m) + ": closed form deviates by " + fmt(cf_dev, "%.3e");
            continue;
        }
        int p = m % 2 == 1 ? m : m / 2;
        int bad_i = -1;
        double dev = 0;
        for (int i = 0; i + p <= 200; ++i) {
            double d = std::abs(g.at(i + p) - g.at(i));
            if (d > opt.tol && bad_i < 0) {
                bad_i = i;
                dev = d;
            }
        }
        if (bad_i >= 0) {
            fails += (fails.empty() ? "" : "; ");
            fails += "m=" + std::to_string(m) + ": |g_" + std::to_string(bad_i + p) + " - g_" +
                     std::to_string(bad_i) + "| = " + fmt(dev, "%.6g") + " with stated period " +
                     std::to_string(p);
        }
    }
    r.pass = fails.empty();
    r.detail = r.pass ? "closed form within " + fmt(opt.tol, "%.3g") +
                            " and stated periods hold for m in {5..12} (max deviation " +
                            fmt(worst_cf, "%.3e") + ")"
                      : fails;
    return r;
}

// Period-closure equalities of the approximating sequence.
inline check_result check_period_closure(const check_options& opt) {
    check_result r{9, "period closure identities", false, ""};
    std::mt19937 rng(90817);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    double worst = 0;
    int pairs = 0;
    for (int m = 5; m <= 12; ++m) {
        for (int t = 0; t < 20; ++t) {
            auto ap = approx_sequence(m, u(rng), u(rng));
            double d1, d2;
            if (m % 2 == 0) {
                d1 = std::abs(ap.at(-2) - ap.at((m - 2) / 2)) / std::abs(ap.at((m - 2) / 2));
                d2 = std::abs(ap.at(-1) - ap.at(m / 2)) / std::abs(ap.at(m / 2));
            } else {
                d1 = std::abs(ap.at(-(m + 1) / 2) - ap.at((m + 3) / 2)) / std::abs(ap.at((m + 3) / 2));
                d2 = std::abs(ap.at(-(m - 1) / 2) - ap.at((m + 5) / 2)) / std::abs(ap.at((m + 5) / 2));
            }
            worst = std::max(worst, std::max(d1, d2));
            if (!(d1 <= opt.tol && d2 <= opt.tol)) {
                r.detail = "closure off at m=" + std::to_string(m) + ", trial " + std::to_string(t) +
                           ": deviations " + fmt(d1, "%.3e") + ", " + fmt(d2, "%.3e");
                return r;
            }
            ++pairs;
        }
    }
    r.pass = true;
    r.detail = std::to_string(pairs) + " random pairs over m in {5..12}; max relative deviation " +
               fmt(worst, "%.3e") + " <= " + fmt(opt.tol, "%.3g");
    return r;
}

// Error-scaling ratios stay within a factor-2 band of the initial ratio.
inline check_result check_error_scaling(const check_options&) {
    check_result r{10, "error scaling ratio", false, ""};
    std::string detail;
    bool ok = true;
    for (int m : {5, 7}) {
        auto probe = error_scaling_probe(m, refdata::m5_x1, refdata::m5_x2, 4);
        detail += (detail.empty() ? "" : "; ");
        detail += "m=" + std::to_string(m) + " ratios";
        if (probe.truncated || probe.rows.size() != 4) {
            ok = false;
            detail += " truncated";
            continue;
        }
        double r0 = probe.rows.front().ratio;
        for (const auto& row : probe.rows) {
            detail += " " + fmt(row.ratio, "%.4g");
            if (!(row.ratio <= 2.0 * r0)) ok = false;
        }
        detail += " (bound " + fmt(2.0 * r0, "%.4g") + ")";
    }
    r.pass = ok;
    r.detail = detail;
    return r;
}

// Integer-weight cases are exactly periodic with periods 5, 6, 8.
inline check_result check_integer_periodicity(const check_options& opt) {
    check_result r{11, "integer-weight periodicity", false, ""};
    std::mt19937 rng(110817);
    std::uniform_real_distribution<double> logu(-2.302585092994046, 2.302585092994046);  // ln(0.1)..ln(10)
    const int cases[3][3] = {{1, 1, 5}, {2, 1, 6}, {3, 1, 8}};
    int pairs = 0;
    for (const auto& c : cases) {
        auto params = rank2_params::from_exponents(c[0], c[1]);
        int p = c[2];
        for (int t = 0; t < 20; ++t) {
            auto seq = generate_x(params, std::exp(logu(rng)), std::exp(logu(rng)), -2 * p, 2 * p + 2);
            if (!check_period(seq, p, opt.tol)) {
                r.detail = "period " + std::to_string(p) + " violated for weights (" +
                           std::to_string(c[0]) + "," + std::to_string(c[1]) + "), trial " +
                           std::to_string(t);
                return r;
            }
            ++pairs;
        }
    }
    r.pass = true;
    r.detail = std::to_string(pairs) + " random pairs: periods 5, 6, 8 hold at tol " +
               fmt(opt.tol, "%.3g");
    return r;
}

// Fourteen-step almost-periodicity for the reference inputs.
inline check_result check_almost_periodicity(const check_options&) {
    check_result r{12, "almost-periodicity window", false, ""};
    auto seq = generate_x(rank2_params::from_m(5), refdata::m5_x1, refdata::m5_x2, -6, 24);
    double worst = 0;
    for (int i = -6; i <= 10; ++i)
        worst = std::max(worst, std::abs(seq.at(i + 14) - seq.at(i)) / seq.at(i));
    r.pass = worst <= 0.05;
    r.detail = "max |x_{i+14} - x_i| / x_i = " + fmt(worst, "%.6g") + " over i in [-6,10] (bound 0.05)";
    return r;
}

}  // namespace checks

inline check_result run_check(int id, const check_options& opt) {
    switch (id) {
        case 1: return checks::check_reference_table(opt);
        case 2: return checks::check_h3_class(opt);
        case 3: return checks::check_h4_class(opt);
        case 4: return checks::check_rank2_class(opt);
        case 5: return checks::check_triple_family(opt);
        case 6: return checks::check_involution(opt);
        case 7: return checks::check_y_recursion(opt);
        case 8: return checks::check_g_sequence(opt);
        case 9: return checks::check_period_closure(opt);
        case 10: return checks::check_error_scaling(opt);
        case 11: return checks::check_integer_periodicity(opt);
        case 12: return checks::check_almost_periodicity(opt);
        default: throw std::invalid_argument("unknown criterion id: " + std::to_string(id));
    }
}

inline std::vector<check_result> run_all_checks(const check_options& opt) {
    std::vector<check_result> out;
    for (int id = 1; id <= 12; ++id) out.push_back(run_check(id, opt));
    return out;
}

inline std::string format_check_line(const check_result& r) {
    char head[64];
    std::snprintf(head, sizeof head, "criterion %2d: %s", r.id, r.pass ? "PASS" : "FAIL");
    return std::string(head) + " [" + r.name + "] " + r.detail;
}

}  // namespace ncmut

#endif
