#ifndef NCMUT_MATRIX_IO_HPP
#define NCMUT_MATRIX_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ncmut/bmatrix.hpp"
#include "ncmut/mutation_class.hpp"

namespace ncmut {

using any_bmatrix = std::variant<bmatrix<golden_int>, bmatrix<double>>;

namespace detail {

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
}

inline int matrix_order(const nlohmann::json& j, const std::string& what) {
    if (!j.is_object()) throw std::invalid_argument(what + ": expected a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument(what + ": missing integer field \"n\"");
    int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument(what + ": \"n\" must be positive");
    return n;
}

inline std::string matrix_mode(const nlohmann::json& j, const std::string& what) {
    if (!j.contains("mode") || !j.at("mode").is_string())
        throw std::invalid_argument(what + ": missing string field \"mode\"");
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "exact" && mode != "float")
        throw std::invalid_argument(what + ": \"mode\" must be \"exact\" or \"float\"");
    return mode;
}

template <class S, class Cell>
square_matrix<S> entries_from_json(const nlohmann::json& rows, int n, const std::string& what, Cell cell) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument(what + ": entries must be an array of " + std::to_string(n) + " rows");
    square_matrix<S> m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument(what + ": row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) m.at(i, j) = cell(row.at(static_cast<std::size_t>(j)), i, j);
    }
    return m;
}

inline golden_int exact_cell(const nlohmann::json& v, int i, int j, const std::string& what) {
    if (!v.is_string())
        throw std::invalid_argument(what + ": exact entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must be a string");
    return parse_golden(v.get<std::string>());
}

inline double float_cell(const nlohmann::json& v, int i, int j, const std::string& what) {
    if (!v.is_number())
        throw std::invalid_argument(what + ": float entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must be a number");
    return v.get<double>();
}

}  // namespace detail

inline any_bmatrix matrix_from_json(const nlohmann::json& j, const std::string& what = "matrix") {
    int n = detail::matrix_order(j, what);
    std::string mode = detail::matrix_mode(j, what);
    if (!j.contains("entries")) throw std::invalid_argument(what + ": missing field \"entries\"");
    if (mode == "exact") {
        auto m = detail::entries_from_json<golden_int>(
            j.at("entries"), n, what,
            [&](const nlohmann::json& v, int i, int jj) { return detail::exact_cell(v, i, jj, what); });
        return bmatrix<golden_int>(std::move(m));
    }
    auto m = detail::entries_from_json<double>(
        j.at("entries"), n, what,
        [&](const nlohmann::json& v, int i, int jj) { return detail::float_cell(v, i, jj, what); });
    return bmatrix<double>(std::move(m));
}

inline any_bmatrix load_matrix(const std::string& path) {
    return matrix_from_json(detail::read_json_file(path), path);
}

inline nlohmann::json entries_to_json(const bmatrix<golden_int>& B) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < B.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < B.size(); ++j) row.push_back(to_string(B.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json entries_to_json(const bmatrix<double>& B) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < B.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < B.size(); ++j) row.push_back(B.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
nlohmann::json matrix_to_json(const bmatrix<S>& B) {
    return nlohmann::json{{"n", B.size()},
                          {"mode", scalar_ops<S>::exact ? "exact" : "float"},
                          {"entries", entries_to_json(B)}};
}

inline nlohmann::json matrix_to_json(const any_bmatrix& B) {
    return std::visit([](const auto& m) { return matrix_to_json(m); }, B);
}

// Fixture file: {"n": int, "mode": "exact", "matrices": [entries, ...]}.
inline std::vector<bmatrix<golden_int>> load_fixture(const std::string& path) {
    nlohmann::json j = detail::read_json_file(path);
    int n = detail::matrix_order(j, path);
    if (detail::matrix_mode(j, path) != "exact")
        throw std::invalid_argument(path + ": fixture must be in exact mode");
    if (!j.contains("matrices") || !j.at("matrices").is_array())
        throw std::invalid_argument(path + ": missing array field \"matrices\"");
    std::vector<bmatrix<golden_int>> out;
    int idx = 0;
    for (const auto& rows : j.at("matrices")) {
        ++idx;
        auto m = detail::entries_from_json<golden_int>(
            rows, n, path + " matrix " + std::to_string(idx),
            [&](const nlohmann::json& v, int i, int jj) {
                return detail::exact_cell(v, i, jj, path + " matrix " + std::to_string(idx));
            });
        out.emplace_back(std::move(m));
    }
    return out;
}

// Class export: representatives in discovery order plus 1-based edge list.
template <class S>
nlohmann::json class_to_json(const mutation_class<S>& cls) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : cls.representatives) reps.push_back(entries_to_json(r));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : cls.edges) edges.push_back(nlohmann::json::array({i + 1, j + 1}));
    int n = cls.origin.size();
    return nlohmann::json{{"n", n},
                          {"mode", scalar_ops<S>::exact ? "exact" : "float"},
                          {"size", cls.keys.size()},
                          {"representatives", std::move(reps)},
                          {"edges", std::move(edges)}};
}

}  // namespace ncmut

#endif
