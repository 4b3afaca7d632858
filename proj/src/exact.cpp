#include <algorithm>
#include <bit>
#include <unordered_map>

#include "gd/error.hpp"
#include "gd/lab.hpp"

namespace gd {

namespace {

using Mask = std::uint64_t;

// Search state over the edges of one graph, indexed 0..m-1.
class Search {
 public:
  Search(const Graph& g, bool cycles) : cycles_(cycles), n_(g.n()) {
    edges_ = g.edges();
    inc_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      inc_[edges_[i].u].push_back(i);
      inc_[edges_[i].v].push_back(i);
    }
  }

  Mask full() const { return edges_.empty() ? 0 : (~Mask{0} >> (64 - edges_.size())); }

  int lower_bound(Mask mask) const {
    // Per component: paths need max(1, odd/2, ceil(m/(n-1))); cycles need
    // max(ceil(m/n), maxdeg/2).
    std::vector<int> comp(n_, -1);
    int total = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0 || degree(mask, s) == 0) continue;
      std::vector<int> stack{s};
      comp[s] = s;
      int nv = 0, odd = 0, half_edges = 0, maxdeg = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int d = degree(mask, x);
        ++nv;
        odd += d & 1;
        half_edges += d;
        maxdeg = std::max(maxdeg, d);
        for (int e : inc_[x]) {
          if (!(mask >> e & 1)) continue;
          int y = other(e, x);
          if (comp[y] < 0) {
            comp[y] = s;
            stack.push_back(y);
          }
        }
      }
      int m = half_edges / 2;
      if (cycles_)
        total += std::max((m + nv - 1) / nv, maxdeg / 2);
      else
        total += std::max({1, odd / 2, (m + nv - 2) / (nv - 1)});
    }
    return total;
  }

  // True when mask splits into at most budget elements; the chosen elements are left in stack_.
  bool solve(Mask mask, int budget) {
    if (mask == 0) return true;
    if (budget <= 0 || lower_bound(mask) > budget) return false;
    auto it = fail_.find(mask);
    if (it != fail_.end() && it->second >= budget) return false;
    bool ok = false;
    if (!cycles_) {
      // An odd vertex ends some path, so it can serve as the pivot.
      for (int s = 0; s < n_; ++s)
        if (degree(mask, s) % 2) {
          ok = from_odd(mask, budget, s);
          if (!ok) {
            int& slot = fail_[mask];
            slot = std::max(slot, budget);
          }
          return ok;
        }
    }
    int e = std::countr_zero(mask);
    // Enumerate elements through e: extend from e's endpoints.
    Mask used = Mask{1} << e;
    std::vector<int> left{edges_[e].u}, right{edges_[e].v};
    std::vector<char> on(n_, 0);
    on[edges_[e].u] = on[edges_[e].v] = 1;
    auto try_element = [&](Mask elem) {
      std::vector<int> seq(left.rbegin(), left.rend());
      seq.insert(seq.end(), right.begin(), right.end());
      stack_.push_back(seq);
      if (solve(mask & ~elem, budget - 1)) return true;
      stack_.pop_back();
      return false;
    };
    if (cycles_) {
      // Close a cycle from right.back() back to left[0].
      auto grow = [&](auto&& self, int x) -> bool {
        for (int f : inc_[x]) {
          if (!(mask >> f & 1) || (used >> f & 1)) continue;
          int y = other(f, x);
          if (y == left[0] && right.size() >= 2) {
            used |= Mask{1} << f;
            if (try_element(used)) return true;
            used &= ~(Mask{1} << f);
            continue;
          }
          if (on[y]) continue;
          on[y] = 1;
          used |= Mask{1} << f;
          right.push_back(y);
          if (self(self, y)) return true;
          right.pop_back();
          used &= ~(Mask{1} << f);
          on[y] = 0;
        }
        return false;
      };
      ok = grow(grow, right.back());
    } else {
      // First all right extensions, and for each of them all left extensions.
      auto grow_left = [&](auto&& self, int x) -> bool {
        if (try_element(used)) return true;
        for (int f : inc_[x]) {
          if (!(mask >> f & 1) || (used >> f & 1)) continue;
          int y = other(f, x);
          if (on[y]) continue;
          on[y] = 1;
          used |= Mask{1} << f;
          left.push_back(y);
          if (self(self, y)) return true;
          left.pop_back();
          used &= ~(Mask{1} << f);
          on[y] = 0;
        }
        return false;
      };
      auto grow_right = [&](auto&& self, int x) -> bool {
        if (grow_left(grow_left, left[0])) return true;
        for (int f : inc_[x]) {
          if (!(mask >> f & 1) || (used >> f & 1)) continue;
          int y = other(f, x);
          if (on[y]) continue;
          on[y] = 1;
          used |= Mask{1} << f;
          right.push_back(y);
          if (self(self, y)) return true;
          right.pop_back();
          used &= ~(Mask{1} << f);
          on[y] = 0;
        }
        return false;
      };
      ok = grow_right(grow_right, right.back());
    }
    if (!ok) {
      int& slot = fail_[mask];
      slot = std::max(slot, budget);
    }
    return ok;
  }

  Decomposition witness() const {
    Decomposition d;
    for (const auto& seq : stack_) {
      if (cycles_)
        d.add_cycle(seq);
      else
        d.add_path(seq);
    }
    return d;
  }

 private:
  // Paths starting at s, longest extensions first.
  bool from_odd(Mask mask, int budget, int s) {
    std::vector<int> seq{s};
    std::vector<char> on(n_, 0);
    on[s] = 1;
    auto grow = [&](auto&& self, int x, Mask used) -> bool {
      for (int f : inc_[x]) {
        if (!(mask >> f & 1) || (used >> f & 1)) continue;
        int y = other(f, x);
        if (on[y]) continue;
        on[y] = 1;
        seq.push_back(y);
        if (self(self, y, used | Mask{1} << f)) return true;
        seq.pop_back();
        on[y] = 0;
      }
      if (used == 0) return false;
      stack_.push_back(seq);
      if (solve(mask & ~used, budget - 1)) return true;
      stack_.pop_back();
      return false;
    };
    return grow(grow, s, 0);
  }

  int degree(Mask mask, int v) const {
    int d = 0;
    for (int e : inc_[v]) d += static_cast<int>(mask >> e & 1);
    return d;
  }
  int other(int e, int x) const { return edges_[e].u == x ? edges_[e].v : edges_[e].u; }

  bool cycles_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
  std::unordered_map<Mask, int> fail_;
  std::vector<std::vector<int>> stack_;
};

void check_caps(const Graph& g, const ExactCaps& caps) {
  if (g.non_isolated() > caps.vertices || g.m() > caps.edges || g.m() > 64)
    throw Error(ErrorKind::CapExceeded,
                std::to_string(g.non_isolated()) + " vertices, " + std::to_string(g.m()) + " edges over the cap");
}

ExactResult run(const Graph& g, bool cycles) {
  Search s(g, cycles);
  ExactResult r;
  if (g.m() == 0) return r;
  for (int k = s.lower_bound(s.full());; ++k)
    if (s.solve(s.full(), k)) {
      r.witness = s.witness();
      r.value = r.witness.size();
      return r;
    }
}

}  // namespace

ExactResult exact_path_number(const Graph& g, ExactCaps caps) {
  check_caps(g, caps);
  return run(g, false);
}

ExactResult exact_cycle_number(const Graph& g, ExactCaps caps) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2) throw Error(ErrorKind::NotEvenGraph, "vertex " + std::to_string(v + 1) + " has odd degree");
  check_caps(g, caps);
  return run(g, true);
}

std::optional<Decomposition> paths_within(const Graph& g, int k, ExactCaps caps) {
  check_caps(g, caps);
  Search s(g, false);
  if (g.m() == 0) return Decomposition{};
  if (!s.solve(s.full(), k)) return std::nullopt;
  return s.witness();
}

}  // namespace gd
