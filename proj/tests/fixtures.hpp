#pragma once

// Graph builders shared across the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "degpath/graph.hpp"

namespace fixtures {

inline degpath::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return degpath::Graph::from_edges(n, e);
}

inline degpath::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return degpath::Graph::from_edges(n, e);
}

inline degpath::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return degpath::Graph::from_edges(n, e);
}

inline degpath::Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer pentagon
        e.emplace_back(i, i + 5);            // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return degpath::Graph::from_edges(10, e);
}

/// Erdős–Rényi-style graph, deterministic in (seed, n, density).
inline degpath::Graph random_graph(std::uint64_t seed, int n, double density) {
    std::mt19937_64 mt(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(mt) < density) e.emplace_back(i, j);
    return degpath::Graph::from_edges(n, e);
}

}  // namespace fixtures
