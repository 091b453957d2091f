#include "imc/accessibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "imc/error.hpp"

namespace imc {

AccessibilityGraph::AccessibilityGraph(StateSpace space, std::vector<bool> adjacency)
    : space_(std::move(space)), adj_(std::move(adjacency)) {
  if (adj_.size() != space_.size() * space_.size()) {
    throw DimensionMismatch("adjacency matrix does not match state count");
  }
}

std::vector<StateIndex> AccessibilityGraph::successors(StateIndex x) const {
  std::vector<StateIndex> out;
  for (StateIndex y = 0; y < size(); ++y) {
    if (edge(x, y)) out.push_back(y);
  }
  return out;
}

AccessibilityGraph build_upper_graph(const UpperTransitionOperator& t) {
  const std::size_t n = t.size();
  std::vector<bool> adj(n * n, false);
  for (StateIndex x = 0; x < n; ++x) {
    for (StateIndex y = 0; y < n; ++y) adj[x * n + y] = upper_mass_positive(t.row(x), y, n);
  }
  return AccessibilityGraph(t.space(), std::move(adj));
}

bool ClassDecomposition::is_maximal(const StateSet& set) const {
  StateSet sorted = set;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(maximal.begin(), maximal.end(),
                     [&](std::size_t c) { return classes[c] == sorted; });
}

namespace {

// Iterative Tarjan; returns the component id of every vertex.
std::vector<std::size_t> strongly_connected(const AccessibilityGraph& g, std::size_t& count) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<StateIndex> stack;
  std::vector<std::pair<StateIndex, StateIndex>> call;  // (vertex, next successor to try)
  std::size_t next_index = 0;
  count = 0;

  for (StateIndex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, w] = call.back();
      if (w < n) {
        const StateIndex u = w++;
        if (!g.edge(v, u)) continue;
        if (index[u] == kUnset) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = true;
          call.emplace_back(u, 0);
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      const StateIndex done = v;
      call.pop_back();
      if (!call.empty()) {
        const StateIndex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        StateIndex u;
        do {
          u = stack.back();
          stack.pop_back();
          on_stack[u] = false;
          comp[u] = count;
        } while (u != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

ClassDecomposition decompose(const AccessibilityGraph& g) {
  const std::size_t n = g.size();
  std::size_t count = 0;
  const auto comp = strongly_connected(g, count);

  // Renumber components by their smallest member.
  std::vector<std::size_t> renumber(count, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (StateIndex x = 0; x < n; ++x) {
    if (renumber[comp[x]] == static_cast<std::size_t>(-1)) renumber[comp[x]] = next++;
  }

  ClassDecomposition d;
  d.classes.resize(count);
  d.class_of.resize(n);
  for (StateIndex x = 0; x < n; ++x) {
    d.class_of[x] = renumber[comp[x]];
    d.classes[d.class_of[x]].push_back(x);
  }

  // Class-level successor sets, then reflexive-transitive closure by DFS.
  std::vector<std::vector<std::size_t>> succ(count);
  std::vector<bool> has_out(count, false);
  for (StateIndex x = 0; x < n; ++x) {
    for (StateIndex y = 0; y < n; ++y) {
      const std::size_t cx = d.class_of[x];
      const std::size_t cy = d.class_of[y];
      if (cx != cy && g.edge(x, y)) {
        succ[cx].push_back(cy);
        has_out[cx] = true;
      }
    }
  }
  d.reaches.assign(count * count, false);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> todo{c};
    d.reaches[c * count + c] = true;
    while (!todo.empty()) {
      const std::size_t u = todo.back();
      todo.pop_back();
      for (std::size_t v : succ[u]) {
        if (!d.reaches[c * count + v]) {
          d.reaches[c * count + v] = true;
          todo.push_back(v);
        }
      }
    }
  }
  for (std::size_t c = 0; c < count; ++c) {
    if (!has_out[c]) d.maximal.push_back(c);
  }
  if (d.maximal.size() == 1) d.top = d.maximal.front();
  return d;
}

bool path_of_length_exists(const AccessibilityGraph& g, StateIndex x, StateIndex y, std::size_t k) {
  const std::size_t n = g.size();
  std::vector<bool> frontier(n, false);
  frontier[x] = true;
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<bool> next(n, false);
    for (StateIndex u = 0; u < n; ++u) {
      if (!frontier[u]) continue;
      for (StateIndex v = 0; v < n; ++v) {
        if (g.edge(u, v)) next[v] = true;
      }
    }
    frontier = std::move(next);
  }
  return frontier[y];
}

std::size_t class_period(const AccessibilityGraph& g, const StateSet& cls) {
  if (cls.empty()) return 0;
  const std::size_t n = g.size();
  std::vector<bool> member(n, false);
  for (StateIndex x : cls) member[x] = true;

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, kUnseen);
  std::vector<StateIndex> queue{cls.front()};
  level[cls.front()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const StateIndex u = queue[head];
    for (StateIndex v = 0; v < n; ++v) {
      if (member[v] && g.edge(u, v) && level[v] == kUnseen) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }

  std::size_t period = 0;
  for (StateIndex u : cls) {
    for (StateIndex v : cls) {
      if (!g.edge(u, v) || level[u] == kUnseen || level[v] == kUnseen) continue;
      const auto diff = static_cast<long long>(level[u]) + 1 - static_cast<long long>(level[v]);
      period = std::gcd(period, static_cast<std::size_t>(diff < 0 ? -diff : diff));
    }
  }
  return period;
}

bool regular_by_boolean_powers(const AccessibilityGraph& g, const StateSet& top) {
  const std::size_t n = g.size();
  std::vector<bool> base(n * n);
  for (StateIndex x = 0; x < n; ++x) {
    for (StateIndex y = 0; y < n; ++y) base[x * n + y] = g.edge(x, y);
  }
  auto multiply = [&](const std::vector<bool>& p) {
    std::vector<bool> out(n * n, false);
    for (StateIndex x = 0; x < n; ++x) {
      for (StateIndex m = 0; m < n; ++m) {
        if (!p[x * n + m]) continue;
        for (StateIndex y = 0; y < n; ++y) {
          if (base[m * n + y]) out[x * n + y] = true;
        }
      }
    }
    return out;
  };
  auto covers_top = [&](const std::vector<bool>& p) {
    for (StateIndex x = 0; x < n; ++x) {
      for (StateIndex r : top) {
        if (!p[x * n + r]) return false;
      }
    }
    return true;
  };

  // The power sequence is eventually periodic; (n-1)^2 + 1 bounds the
  // transient for primitive classes, the cap guards the general case.
  const std::size_t cap = 4 * ((n - 1) * (n - 1) + 1) + 4096;
  std::map<std::vector<bool>, std::size_t> seen;
  std::vector<std::vector<bool>> powers;
  std::vector<bool> p = base;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (auto it = seen.find(p); it != seen.end()) {
      for (std::size_t j = it->second; j < k; ++j) {
        if (!covers_top(powers[j - 1])) return false;
      }
      return true;
    }
    seen.emplace(p, k);
    powers.push_back(p);
    p = multiply(p);
  }
  throw InternalCheckFailed("Boolean power sequence did not repeat within " +
                            std::to_string(cap) + " steps");
}

bool is_tcr(const UpperTransitionOperator& t) {
  const auto g = build_upper_graph(t);
  const auto d = decompose(g);
  const StateSet* top = d.top_class();
  return top != nullptr && class_period(g, *top) == 1;
}

StateSet absorbing_closure(const UpperTransitionOperator& t) {
  const auto d = decompose(build_upper_graph(t));
  const StateSet* top = d.top_class();
  if (top == nullptr) return {};
  const std::size_t n = t.size();
  std::vector<bool> in_b(n, false);
  for (StateIndex r : *top) in_b[r] = true;
  for (;;) {
    std::vector<bool> next = in_b;
    bool grew = false;
    for (StateIndex x = 0; x < n; ++x) {
      if (!in_b[x] && lower_mass_positive(t.row(x), in_b)) {
        next[x] = true;
        grew = true;
      }
    }
    if (!grew) break;
    in_b = std::move(next);
  }
  StateSet b;
  for (StateIndex x = 0; x < n; ++x) {
    if (in_b[x]) b.push_back(x);
  }
  return b;
}

bool is_tca(const UpperTransitionOperator& t) { return absorbing_closure(t).size() == t.size(); }

StateSet non_absorbing_set(const UpperTransitionOperator& t) {
  const StateSet b = absorbing_closure(t);
  if (b.empty()) return {};
  StateSet a;
  for (StateIndex x = 0; x < t.size(); ++x) {
    if (!std::binary_search(b.begin(), b.end(), x)) a.push_back(x);
  }
  return a;
}

}  // namespace imc
