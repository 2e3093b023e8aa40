#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace lspace::detail {

  struct SccResult {
    // component[v] is the component index of node v; components are numbered
    // in reverse topological order (sinks of the condensation first).
    std::vector<std::size_t> component;
    std::size_t              count = 0;
    // cyclic[c] holds when component c contains a cycle (two or more nodes,
    // or one node with a self-loop).
    std::vector<bool> cyclic;
  };

  // Iterative Tarjan over an adjacency list.
  inline SccResult tarjan_scc(std::vector<std::vector<std::size_t>> const& adj) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::size_t const     n         = adj.size();

    SccResult                res;
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool>        on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    res.component.assign(n, unvisited);
    std::size_t next_index = 0;

    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != unvisited) {
        continue;
      }
      frames.emplace_back(root, 0);
      while (!frames.empty()) {
        auto& [v, child] = frames.back();
        if (child == 0 && index[v] == unvisited) {
          index[v] = low[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        if (child < adj[v].size()) {
          std::size_t const w = adj[v][child++];
          if (index[w] == unvisited) {
            frames.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w]     = false;
            res.component[w] = res.count;
          } while (w != v);
          ++res.count;
        }
        std::size_t const done = v;
        frames.pop_back();
        if (!frames.empty()) {
          std::size_t const parent = frames.back().first;
          low[parent]              = std::min(low[parent], low[done]);
        }
      }
    }

    std::vector<std::size_t> sizes(res.count, 0);
    for (std::size_t v = 0; v < n; ++v) {
      ++sizes[res.component[v]];
    }
    res.cyclic.assign(res.count, false);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t const c = res.component[v];
      if (sizes[c] > 1) {
        res.cyclic[c] = true;
      }
      for (std::size_t w : adj[v]) {
        if (w == v) {
          res.cyclic[c] = true;
        }
      }
    }
    return res;
  }

}  // namespace lspace::detail
