// Copyright 2026 The pcrtv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCRTV_SRC_MAXFLOW_HPP
#define PCRTV_SRC_MAXFLOW_HPP

#include <queue>
#include <vector>

namespace pcrtv::detail {

// Dinic max-flow. Arcs are stored in pairs, arc k and k ^ 1 are mutual
// reverses, and cap holds the residual capacity.
template <class Cap>
class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), next_(n) {}

  void add_edge(int u, int v, const Cap& cap, const Cap& rev_cap) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, rev_cap});
  }

  Cap max_flow(int s, int t) {
    Cap flow = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (true) {
        Cap pushed = dfs(s, t, infinite_, true);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  // Nodes from which t is reachable in the residual graph.
  std::vector<bool> reaches(int t) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<int> q;
    seen[t] = true;
    q.push(t);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj_[v]) {
        int u = arcs_[a].to;
        if (!seen[u] && arcs_[a ^ 1].cap > 0) {
          seen[u] = true;
          q.push(u);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    Cap cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj_[v])
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  // `unbounded` marks the source call, whose limit is infinite.
  Cap dfs(int v, int t, const Cap& limit, bool unbounded) {
    if (v == t) return limit;
    for (int& k = next_[v]; k < static_cast<int>(adj_[v].size()); ++k) {
      int a = adj_[v][k];
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      Cap bound = (unbounded || arc.cap < limit) ? arc.cap : limit;
      Cap pushed = dfs(arc.to, t, bound, false);
      if (pushed > 0) {
        arc.cap -= pushed;
        arcs_[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> next_;
  Cap infinite_ = 0;
};

}  // namespace pcrtv::detail

#endif  // PCRTV_SRC_MAXFLOW_HPP
