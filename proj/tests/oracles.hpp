#pragma once

// Independent reference computations used to check the engine.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "meshkit/translation_quiver.hpp"

namespace oracle {

// Nonzero d with 0 <= d_i <= bound and q(d) = sum d_i^2 - sum_edges d_s d_t = 1.
std::set<std::vector<int>> positive_roots(int n, const std::vector<std::pair<int, int>>& edges, int bound);

// Dimension vectors of the interval modules of a linear quiver with n vertices.
std::set<std::vector<int>> interval_dims(int n);

// (shortest, longest) directed path length for every reachable pair, by
// exhaustive walk up to max_len arrows.
std::map<std::pair<int, int>, std::pair<int, int>> path_lengths(const meshkit::TranslationQuiver& q, int max_len);

// Number of directed paths x ~> y of any length (walk up to max_len arrows).
long count_paths(const meshkit::TranslationQuiver& q, int x, int y, int max_len);

}  // namespace oracle
