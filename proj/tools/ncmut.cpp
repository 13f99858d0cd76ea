// ncmut: rank-2 exchange sequences and skew-symmetrizable matrix mutation.
//
// Subcommands: seq, approx, gseq, class, mutate, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numeric degeneration or enumeration limit.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "ncmut/ncmut.hpp"

namespace {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// No partial files: write to a sibling temp path, then rename into place.
void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move " + tmp + " into place at " + path);
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

std::string text_header(const std::string& config, const char* comment = "#") {
    std::string h = std::string(comment) + " config: " + config + "\n";
    h += std::string(comment) + " generated: " + timestamp_utc() + "\n";
    return h;
}

struct seq_opts {
    int m = 0;
    double a = 0, b = 1;
    bool has_m = false, has_a = false;
    double x1 = 0, x2 = 0;
    int lo = 1, hi = 12;
    bool with_approx = false;
};

int run_seq(const seq_opts& o, const std::string& out, bool full_precision, bool no_header) {
    ncmut::rank2_params params;
    std::string config = "seq";
    if (o.has_m && o.has_a) throw std::invalid_argument("seq: give either --m or --a/--b, not both");
    if (o.has_m) {
        params = ncmut::rank2_params::from_m(o.m);
        config += " --m " + std::to_string(o.m);
    } else if (o.has_a) {
        params = ncmut::rank2_params::from_exponents(o.a, o.b);
        config += " --a " + fmt_num(o.a) + " --b " + fmt_num(o.b);
    } else {
        throw std::invalid_argument("seq: one of --m or --a is required");
    }
    config += " --x1 " + fmt_num(o.x1) + " --x2 " + fmt_num(o.x2) + " --lo " +
              std::to_string(o.lo) + " --hi " + std::to_string(o.hi);
    if (o.with_approx) config += " --with-approx";
    if (full_precision) config += " --full-precision";
    auto seq = ncmut::generate_x(params, o.x1, o.x2, o.lo, o.hi);
    std::ostringstream body;
    if (o.with_approx) {
        if (!o.has_m) throw std::invalid_argument("seq: --with-approx requires --m");
        auto ap = ncmut::approx_sequence(o.m, o.x1, o.x2);
        ncmut::write_sequence_csv(body, seq, &ap, full_precision);
    } else {
        ncmut::write_sequence_csv(body, seq, nullptr, full_precision);
    }
    emit(out, (no_header ? "" : text_header(config)) + body.str());
    return 0;
}

int run_approx(int m, double x1, double x2, const std::string& out, bool full_precision, bool no_header) {
    std::string config = "approx --m " + std::to_string(m) + " --x1 " + fmt_num(x1) + " --x2 " +
                         fmt_num(x2);
    if (full_precision) config += " --full-precision";
    auto ap = ncmut::approx_sequence(m, x1, x2);
    std::ostringstream body;
    ncmut::write_approx_csv(body, ap, full_precision);
    emit(out, (no_header ? "" : text_header(config)) + body.str());
    return 0;
}

int run_gseq(int m, int L, bool exact, const std::string& out, bool full_precision, bool no_header) {
    std::string config = "gseq --m " + std::to_string(m) + " --L " + std::to_string(L);
    if (exact) config += " --exact";
    if (full_precision) config += " --full-precision";
    std::ostringstream body;
    if (exact) {
        if (m != 5) throw std::invalid_argument("gseq: --exact is available only for m = 5");
        auto g = ncmut::g_sequence_golden(L);
        body << "i,g_i\n";
        for (std::size_t i = 0; i < g.size(); ++i) body << i << ',' << ncmut::to_string(g[i]) << '\n';
    } else {
        auto g = ncmut::g_sequence(m, L);
        ncmut::write_g_csv(body, g, full_precision);
    }
    emit(out, (no_header ? "" : text_header(config)) + body.str());
    return 0;
}

int run_class(const std::string& in, std::size_t limit, const std::string& out,
              const std::string& dot, bool no_header) {
    std::string config = "class --in " + in + " --limit " + std::to_string(limit);
    auto any = ncmut::load_matrix(in);
    return std::visit(
        [&](const auto& seed) {
            auto cls = ncmut::enumerate_class(seed, limit);
            auto st = ncmut::class_graph_stats(cls);
            std::cout << "size=" << st.nodes << " edges=" << st.edges << "\n";
            if (!out.empty()) {
                auto j = ncmut::class_to_json(cls);
                j["config"] = config;
                if (!no_header) j["generated"] = timestamp_utc();
                emit(out, j.dump(2) + "\n");
            }
            if (!dot.empty()) {
                std::ostringstream body;
                ncmut::write_dot(body, cls);
                emit(dot, (no_header ? "" : text_header(config, "//")) + body.str());
            }
            return 0;
        },
        any);
}

int run_mutate(const std::string& in, int k, const std::string& out, bool no_header) {
    std::string config = "mutate --in " + in + " --k " + std::to_string(k);
    auto any = ncmut::load_matrix(in);
    return std::visit(
        [&](const auto& B) {
            auto j = ncmut::matrix_to_json(ncmut::mutate(B, k));
            j["config"] = config;
            if (!no_header) j["generated"] = timestamp_utc();
            emit(out, j.dump(2) + "\n");
            return 0;
        },
        any);
}

int run_verify(const std::string& fixture, double tol) {
    ncmut::check_options opt;
    opt.fixture_path = fixture;
    opt.tol = tol;
    int failed = 0;
    for (const auto& r : ncmut::run_all_checks(opt)) {
        std::cout << ncmut::format_check_line(r) << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << "verify: " << (12 - failed) << "/12 checks passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-2 exchange sequences and skew-symmetrizable matrix mutation"};
    app.require_subcommand(1);

    std::string out_path, dot_path, in_path;
    bool full_precision = false, no_header = false;

    seq_opts so;
    auto* seq = app.add_subcommand("seq", "emit the exchange sequence table as CSV");
    auto* optm = seq->add_option("--m", so.m, "dihedral parameter (weights a = 4cos^2(pi/m), b = 1)");
    auto* opta = seq->add_option("--a", so.a, "explicit even-step exponent");
    seq->add_option("--b", so.b, "explicit odd-step exponent (default 1)");
    seq->add_option("--x1", so.x1, "initial value x_1")->required();
    seq->add_option("--x2", so.x2, "initial value x_2")->required();
    seq->add_option("--lo", so.lo, "window lower index (default 1)");
    seq->add_option("--hi", so.hi, "window upper index (default 12)");
    seq->add_flag("--with-approx", so.with_approx, "add Y and relerr columns (requires --m)");
    seq->add_option("--out", out_path, "write to file (atomic) instead of stdout");
    seq->add_flag("--full-precision", full_precision, "17 significant digits instead of 6 decimals");
    seq->add_flag("--no-header", no_header, "omit config and timestamp header lines");

    int am = 5;
    double ax1 = 0, ax2 = 0;
    auto* approx = app.add_subcommand("approx", "emit the approximating sequence as CSV");
    approx->add_option("--m", am, "dihedral parameter, m > 4")->required();
    approx->add_option("--x1", ax1, "initial value x_1")->required();
    approx->add_option("--x2", ax2, "initial value x_2")->required();
    approx->add_option("--out", out_path, "write to file (atomic) instead of stdout");
    approx->add_flag("--full-precision", full_precision, "17 significant digits instead of 6 decimals");
    approx->add_flag("--no-header", no_header, "omit config and timestamp header lines");

    int gm = 5, gL = 20;
    bool gexact = false;
    auto* gseq = app.add_subcommand("gseq", "emit the g-sequence as CSV");
    gseq->add_option("--m", gm, "dihedral parameter")->required();
    gseq->add_option("--L", gL, "last index (default 20)");
    gseq->add_flag("--exact", gexact, "exact ring output (m = 5 only)");
    gseq->add_option("--out", out_path, "write to file (atomic) instead of stdout");
    gseq->add_flag("--full-precision", full_precision, "17 significant digits instead of 6 decimals");
    gseq->add_flag("--no-header", no_header, "omit config and timestamp header lines");

    std::size_t limit = 1000000;
    auto* cls = app.add_subcommand("class", "enumerate the mutation class of a matrix file");
    cls->add_option("--in", in_path, "matrix JSON file")->required();
    cls->add_option("--limit", limit, "node cap (default 1000000)");
    cls->add_option("--out", out_path, "write class JSON to file");
    cls->add_option("--dot", dot_path, "write mutation graph in DOT format");
    cls->add_flag("--no-header", no_header, "omit timestamp fields");

    int mk = 0;
    auto* mut = app.add_subcommand("mutate", "apply one mutation to a matrix file");
    mut->add_option("--in", in_path, "matrix JSON file")->required();
    mut->add_option("--k", mk, "mutation direction, 1-based")->required();
    mut->add_option("--out", out_path, "write result JSON to file instead of stdout");
    mut->add_flag("--no-header", no_header, "omit timestamp fields");

    std::string fixture = "data/h3_class_fixture.json";
    double tol = 1e-9;
    auto* ver = app.add_subcommand("verify", "run the acceptance checks");
    ver->add_option("--fixture", fixture, "H3 class fixture path");
    ver->add_option("--tol", tol, "tolerance for identity checks (default 1e-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(seq)) {
            so.has_m = optm->count() > 0;
            so.has_a = opta->count() > 0;
            return run_seq(so, out_path, full_precision, no_header);
        }
        if (app.got_subcommand(approx)) return run_approx(am, ax1, ax2, out_path, full_precision, no_header);
        if (app.got_subcommand(gseq)) return run_gseq(gm, gL, gexact, out_path, full_precision, no_header);
        if (app.got_subcommand(cls)) return run_class(in_path, limit, out_path, dot_path, no_header);
        if (app.got_subcommand(mut)) return run_mutate(in_path, mk, out_path, no_header);
        if (app.got_subcommand(ver)) return run_verify(fixture, tol);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ncmut::limit_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
