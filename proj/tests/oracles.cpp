#include "oracles.hpp"

#include <functional>

namespace oracle {

std::set<std::vector<int>> positive_roots(int n, const std::vector<std::pair<int, int>>& edges, int bound) {
  std::set<std::vector<int>> out;
  std::vector<int> d(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      long q = 0;
      bool nonzero = false;
      for (int v : d) q += static_cast<long>(v) * v, nonzero = nonzero || v;
      for (auto [s, t] : edges) q -= static_cast<long>(d[s]) * d[t];
      if (nonzero && q == 1) out.insert(d);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      d[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::set<std::vector<int>> interval_dims(int n) {
  std::set<std::vector<int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      std::vector<int> d(n, 0);
      for (int i = a; i <= b; ++i) d[i] = 1;
      out.insert(d);
    }
  return out;
}

std::map<std::pair<int, int>, std::pair<int, int>> path_lengths(const meshkit::TranslationQuiver& q, int max_len) {
  std::map<std::pair<int, int>, std::pair<int, int>> out;
  std::function<void(int, int, int)> walk = [&](int s, int v, int len) {
    auto [it, fresh] = out.try_emplace({s, v}, len, len);
    if (!fresh) {
      it->second.first = std::min(it->second.first, len);
      it->second.second = std::max(it->second.second, len);
    }
    if (len == max_len) return;
    for (int w : q.successors(v)) walk(s, w, len + 1);
  };
  for (int s = 0; s < q.size(); ++s) walk(s, s, 0);
  return out;
}

long count_paths(const meshkit::TranslationQuiver& q, int x, int y, int max_len) {
  long n = 0;
  std::function<void(int, int)> walk = [&](int v, int len) {
    if (v == y) ++n;
    if (len == max_len) return;
    for (int w : q.successors(v)) walk(w, len + 1);
  };
  walk(x, 0);
  return n;
}

}  // namespace oracle
