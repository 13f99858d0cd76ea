#ifndef NCMUT_MUTATION_CLASS_HPP
#define NCMUT_MUTATION_CLASS_HPP

#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncmut/bmatrix.hpp"
#include "ncmut/canonical.hpp"

namespace ncmut {

struct limit_exceeded : std::runtime_error {
    std::size_t limit;
    explicit limit_exceeded(std::size_t l)
        : std::runtime_error("mutation-infinite up to limit " + std::to_string(l)), limit(l) {}
};

// Mutation class up to simultaneous row/column permutation, with the
// collapsed undirected mutation graph over discovery indices.
template <class S>
struct mutation_class {
    std::vector<bmatrix<S>> representatives;  // canonical representatives, discovery order
    std::vector<canonical_key> keys;          // parallel to representatives
    std::set<std::pair<int, int>> edges;      // 0-based (i, j) with i < j
    bmatrix<S> origin;

    explicit mutation_class(bmatrix<S> seed) : origin(std::move(seed)) {}
    std::size_t size() const { return keys.size(); }
};

// BFS over canonical forms. New keys found while expanding a node are
// inserted in sorted key order, so two runs on the same seed produce
// identical discovery orderings and edge sets.
template <class S>
mutation_class<S> enumerate_class(const bmatrix<S>& seed, std::size_t limit = 1000000) {
    if (limit < 1) throw std::invalid_argument("enumerate_class: limit must be positive");
    mutation_class<S> cls(seed);
    std::map<canonical_key, int> index;
    auto c0 = canonical_form(seed);
    index.emplace(c0.key, 0);
    cls.keys.push_back(std::move(c0.key));
    cls.representatives.push_back(std::move(c0.rep));
    std::deque<int> fifo{0};
    while (!fifo.empty()) {
        int cur = fifo.front();
        fifo.pop_front();
        const int n = cls.representatives[static_cast<std::size_t>(cur)].size();
        std::map<canonical_key, bmatrix<S>> fresh;
        std::vector<int> neighbors;
        for (int k = 1; k <= n; ++k) {
            auto cf = canonical_form(mutate(cls.representatives[static_cast<std::size_t>(cur)], k));
            auto it = index.find(cf.key);
            if (it != index.end())
                neighbors.push_back(it->second);
            else
                fresh.emplace(std::move(cf.key), std::move(cf.rep));
        }
        for (auto& [key, rep] : fresh) {
            if (cls.keys.size() >= limit) throw limit_exceeded(limit);
            int id = static_cast<int>(cls.keys.size());
            index.emplace(key, id);
            cls.keys.push_back(key);
            cls.representatives.push_back(std::move(rep));
            fifo.push_back(id);
            neighbors.push_back(id);
        }
        for (int nb : neighbors)
            if (nb != cur) cls.edges.emplace(std::min(cur, nb), std::max(cur, nb));
    }
    return cls;
}

struct graph_stats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::map<int, int> degree_histogram;  // degree -> count
};

template <class S>
graph_stats class_graph_stats(const mutation_class<S>& cls) {
    graph_stats st;
    st.nodes = cls.keys.size();
    st.edges = cls.edges.size();
    std::vector<int> deg(st.nodes, 0);
    for (const auto& [i, j] : cls.edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    for (int d : deg) ++st.degree_histogram[d];
    return st;
}

struct probe_result {
    bool finite = false;
    std::size_t size = 0;  // class size when finite
    std::size_t limit = 0;
};

template <class S>
probe_result mutation_finite_probe(const bmatrix<S>& B, std::size_t limit = 1000000) {
    try {
        auto cls = enumerate_class(B, limit);
        return {true, cls.size(), limit};
    } catch (const limit_exceeded&) {
        return {false, 0, limit};
    }
}

// Key-set equality against an externally supplied list of matrices.
template <class S>
bool verify_listed_class(const mutation_class<S>& cls, const std::vector<bmatrix<S>>& listed) {
    if (cls.keys.size() != listed.size()) return false;
    std::set<canonical_key> have(cls.keys.begin(), cls.keys.end());
    std::set<canonical_key> want;
    for (const auto& m : listed) want.insert(canonical_key_of(m));
    return have == want;
}

// Undirected DOT graph, nodes labeled by 1-based discovery index.
template <class S>
void write_dot(std::ostream& os, const mutation_class<S>& cls, const std::string& name = "mutation_class") {
    os << "graph " << name << " {\n";
    for (std::size_t i = 0; i < cls.keys.size(); ++i) os << "  " << i + 1 << ";\n";
    for (const auto& [i, j] : cls.edges) os << "  " << i + 1 << " -- " << j + 1 << ";\n";
    os << "}\n";
}

}  // namespace ncmut

#endif
