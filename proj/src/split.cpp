#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "gd/error.hpp"
#include "gd/reduce.hpp"

namespace gd {

const char* to_string(SplitCase c) {
  switch (c) {
    case SplitCase::Trivial: return "trivial";
    case SplitCase::FreeNeighbor: return "free-neighbor";
    case SplitCase::LongSegment: return "long-segment";
    case SplitCase::FiveApart: return "five-apart";
    case SplitCase::FiveA: return "five-a";
    case SplitCase::FiveB: return "five-b";
    case SplitCase::FiveC: return "five-c";
  }
  return "?";
}

namespace {

std::string dump(const VertexPath& p, const VertexCycle& c) {
  std::string s = "path:";
  for (int v : p) s += " " + std::to_string(v + 1);
  s += "\ncycle:";
  for (int v : c) s += " " + std::to_string(v + 1);
  return s + "\n";
}

int max_vertex(const VertexPath& p, const VertexCycle& c) {
  int n = 0;
  for (int v : p) n = std::max(n, v + 1);
  for (int v : c) n = std::max(n, v + 1);
  return n;
}

bool is_path_in(const Graph& g, const VertexPath& p) {
  std::vector<char> seen(g.n(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.n() || seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
  }
  return p.size() >= 2;
}

struct Attempt {
  VertexPath p1;
  SplitCase branch = SplitCase::Trivial;
  bool needs_reverse = false;
};

// Picks the first path of the decomposition; p is scanned from its start.
std::optional<Attempt> attempt(const VertexPath& p, const VertexCycle& c, int n) {
  const int len = static_cast<int>(c.size());
  std::vector<int> pos_p(n, -1), pos_c(n, -1);
  for (size_t i = 0; i < p.size(); ++i) pos_p[p[i]] = static_cast<int>(i);
  for (int i = 0; i < len; ++i) pos_c[c[i]] = i;
  int z0 = -1;
  for (size_t i = 0; i < p.size(); ++i)
    if (pos_c[p[i]] >= 0) {
      z0 = static_cast<int>(i);
      break;
    }
  const int start = pos_c[p[z0]];
  std::vector<int> y(len);
  for (int k = 0; k < len; ++k) y[k] = c[(start + k) % len];
  auto slice = [&](int a, int b) { return VertexPath(p.begin() + a, p.begin() + b + 1); };
  auto tail = [&](int a) { return VertexPath(p.begin() + a, p.end()); };
  auto cat = [](VertexPath a, const VertexPath& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  for (int t : {y[1], y[len - 1]})
    if (pos_p[t] < 0) return Attempt{cat({t}, tail(z0)), SplitCase::FreeNeighbor};

  for (int t : {y[1], y[len - 1]}) {
    int i = pos_p[t];
    if (pos_c[p[i - 1]] < 0) {
      VertexPath head = slice(z0, i - 1);
      std::reverse(head.begin(), head.end());
      return Attempt{cat(head, tail(i)), SplitCase::LongSegment};
    }
  }

  if (len != 5) return std::nullopt;
  if (pos_p[y[1]] > pos_p[y[4]]) std::reverse(y.begin() + 1, y.end());
  const int a = pos_p[y[1]], b = pos_p[y[4]];
  const int p3 = pos_p[y[3]];
  if (b != a + 1) {
    if (p3 < 0 || a + 1 >= static_cast<int>(p.size())) return std::nullopt;
    VertexPath p1 = {p[a + 1], y[1]};
    p1 = cat(p1, slice(z0, p3));
    p1.push_back(y[2]);
    return Attempt{cat(p1, tail(b)), SplitCase::FiveApart};
  }
  const int p2 = pos_p[y[2]];
  if (p2 < 0) return Attempt{cat(slice(0, z0), {y[4], y[3], y[1], y[2]}), SplitCase::FiveA};
  if (p3 < 0) return std::nullopt;
  if (p2 < p3) return Attempt{cat(slice(0, p2), {y[1], y[4], y[3], p[p3 - 1]}), SplitCase::FiveB};
  if (p[p2 - 1] == y[4]) return Attempt{{}, SplitCase::FiveC, true};
  return Attempt{cat(slice(0, z0), {y[4], y[1], y[3], y[2], p[p2 - 1]}), SplitCase::FiveC};
}

}  // namespace

int chord_count(const VertexPath& p, const VertexCycle& c) {
  const int len = static_cast<int>(c.size());
  std::map<int, int> pos;
  for (int i = 0; i < len; ++i) pos[c[i]] = i;
  int chords = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    auto a = pos.find(p[i]), b = pos.find(p[i + 1]);
    if (a == pos.end() || b == pos.end()) continue;
    int d = std::abs(a->second - b->second);
    if (d != 1 && d != len - 1) ++chords;
  }
  return chords;
}

PathSplit two_path_split(const VertexPath& p, const VertexCycle& c) {
  if (p.empty() || c.size() < 3) throw Error(ErrorKind::InvalidArgument, "empty path or short cycle", dump(p, c));
  const int n = max_vertex(p, c);
  Decomposition parts;
  if (p.size() >= 2) parts.add_path(p);
  parts.add_cycle(c);
  Graph u(n);
  for (const auto& el : parts.elements)
    for (const Edge& e : el.edges()) {
      if (u.has_edge(e.u, e.v)) throw Error(ErrorKind::NotDisjoint, "path and cycle share an edge", dump(p, c));
      u.add_edge(e.u, e.v);
    }
  bool meet = false;
  for (int v : p) meet = meet || std::find(c.begin(), c.end(), v) != c.end();
  if (!meet) throw Error(ErrorKind::NotConnected, "path misses the cycle", dump(p, c));
  int chords = chord_count(p, c);
  if (chords > 1 && !(c.size() <= 5 && chords <= 3))
    throw Error(ErrorKind::ChordLimitExceeded, std::to_string(chords) + " chords on a cycle of length " +
                                                   std::to_string(c.size()), dump(p, c));

  PathSplit out;
  if (p.size() == 1) {
    int i = static_cast<int>(std::find(c.begin(), c.end(), p[0]) - c.begin());
    const int len = static_cast<int>(c.size());
    out.p1 = {c[i], c[(i + 1) % len]};
    for (int k = 1; k <= len; ++k) out.p2.push_back(c[(i + k) % len]);
    return out;
  }

  // Scanning p from its far end first gives the natural orientation of small examples.
  VertexPath work(p.rbegin(), p.rend());
  auto res = attempt(work, c, n);
  if (res && res->needs_reverse) {
    out.reversed = true;
    res = attempt(p, c, n);
    if (res && res->needs_reverse) res.reset();
  }
  if (!res) throw Error(ErrorKind::UnreachableCase, "no split case applies", dump(p, c));

  Graph g1 = graph_of_path(res->p1, n);
  std::optional<VertexPath> p2;
  if (is_path_in(u, res->p1)) {
    Graph rest = u;
    for (const Edge& e : g1.edges()) rest.remove_edge(e.u, e.v);
    p2 = as_path(rest);
  }
  if (!p2) throw Error(ErrorKind::UnreachableCase, std::string("split case ") + to_string(res->branch) +
                                                       " did not leave a path", dump(p, c));
  out.p1 = res->p1;
  std::reverse(out.p1.begin(), out.p1.end());
  out.p2 = *p2;
  out.branch = res->branch;
  return out;
}

Decomposition absorb_short_cycles(const Decomposition& d, const std::vector<VertexCycle>& cycles) {
  Decomposition out = d;
  for (const auto& cyc : cycles) {
    if (cyc.size() < 3 || cyc.size() > 4) throw Error(ErrorKind::InvalidArgument, "cycle length must be 3 or 4");
    int pick = -1;
    for (int i = 0; i < out.size() && pick < 0; ++i) {
      const auto& el = out.elements[i];
      if (el.kind != ElementKind::Path) continue;
      for (int v : el.vertices)
        if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) {
          pick = i;
          break;
        }
    }
    if (pick < 0) throw Error(ErrorKind::PreconditionViolated, "cycle meets no path of the decomposition");
    auto s = two_path_split(out.elements[pick].vertices, cyc);
    out.elements[pick].vertices = s.p1;
    out.add_path(s.p2);
  }
  return out;
}

Decomposition absorb_k5_like(const VertexPath& p, const Graph& k) {
  std::vector<int> vs;
  for (int v = 0; v < k.n(); ++v)
    if (k.degree(v) > 0) vs.push_back(v);
  SpecialGraph kind = recognize_special(k);
  if (vs.size() != 5 || (kind != SpecialGraph::K5 && kind != SpecialGraph::K5minus))
    throw Error(ErrorKind::NotK5Like, "expected K5 or K5-", edge_list_dump(k));
  // A Hamiltonian cycle whose complement is a path (K5-) or a cycle (K5).
  std::array<int, 5> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  VertexCycle cyc;
  Graph rest;
  do {
    if (perm[0] != 0) break;
    VertexCycle c;
    for (int i : perm) c.push_back(vs[i]);
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) ok = k.has_edge(c[i], c[(i + 1) % 5]);
    if (!ok) continue;
    Graph r = k;
    for (int i = 0; i < 5; ++i) r.remove_edge(c[i], c[(i + 1) % 5]);
    bool shape = kind == SpecialGraph::K5 ? as_cycle(r).has_value() : as_path(r).has_value();
    if (shape) {
      cyc = c;
      rest = r;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (cyc.empty()) throw Error(ErrorKind::UnreachableCase, "no suitable Hamiltonian cycle", edge_list_dump(k));

  Decomposition out;
  auto s1 = two_path_split(p, cyc);
  if (kind == SpecialGraph::K5minus) {
    out.add_path(s1.p1);
    out.add_path(s1.p2);
    out.add_path(*as_path(rest));
  } else {
    auto s2 = two_path_split(s1.p1, *as_cycle(rest));
    out.add_path(s1.p2);
    out.add_path(s2.p1);
    out.add_path(s2.p2);
  }
  return out;
}

Decomposition decompose_k5minus_subdivision(const Graph& g) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::NotK5MinusSubdivision, why, edge_list_dump(g));
  };
  std::vector<int> deg3, deg4;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (d == 3)
      deg3.push_back(v);
    else if (d == 4)
      deg4.push_back(v);
    else if (d != 0 && d != 2)
      throw fail("degree " + std::to_string(d));
  }
  if (deg3.size() != 2 || deg4.size() != 3) throw fail("wrong branch degrees");
  std::vector<int> branch = {deg3[0], deg3[1], deg4[0], deg4[1], deg4[2]};
  auto is_branch = [&](int v) { return std::find(branch.begin(), branch.end(), v) != branch.end(); };

  std::map<std::pair<int, int>, VertexPath> chain;  // keyed by (from, to), stored oriented
  int traced = 0;
  bool subdivided = false;
  for (int b : branch)
    for (int first : g.neighbors(b)) {
      VertexPath walk{b};
      int prev = b, cur = first;
      while (!is_branch(cur)) {
        walk.push_back(cur);
        int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      walk.push_back(cur);
      if (cur == b) throw fail("loop at a branch vertex");
      if (chain.count({b, cur})) throw fail("parallel branch paths");
      chain[{b, cur}] = walk;
      traced += static_cast<int>(walk.size()) - 1;
      subdivided = subdivided || walk.size() > 2;
    }
  if (traced != 2 * g.m() || chain.size() != 18) throw fail("not a subdivision");
  if (chain.count({deg3[0], deg3[1]})) throw fail("degree-3 branch vertices adjacent");
  if (!subdivided) throw fail("no subdivided edge");

  // Symbols: 0=w 1=u 2=v 3=x 4=y 5=z.
  std::array<int, 6> sym{};
  std::vector<int> seq1, seq2;
  VertexPath wchain;  // chosen chain from its w-side end (index 0) to the other end
  bool done = false;
  for (int a : deg3)
    for (int b : deg4)
      if (!done && chain[{a, b}].size() > 2) {
        sym[1] = a;
        sym[2] = a == deg3[0] ? deg3[1] : deg3[0];
        sym[3] = b;
        std::vector<int> o;
        for (int d : deg4)
          if (d != b) o.push_back(d);
        sym[4] = o[0];
        sym[5] = o[1];
        wchain = chain[{a, b}];
        seq1 = {0, 3, 4, 2, 5, 1};
        seq2 = {0, 1, 4, 5, 3, 2};
        done = true;
      }
  for (size_t i = 0; i < 3 && !done; ++i)
    for (size_t j = i + 1; j < 3 && !done; ++j)
      if (chain[{deg4[i], deg4[j]}].size() > 2) {
        sym[4] = deg4[i];
        sym[5] = deg4[j];
        sym[3] = deg4[3 - i - j];
        sym[1] = deg3[0];
        sym[2] = deg3[1];
        wchain = chain[{deg4[i], deg4[j]}];
        seq1 = {0, 5, 3, 2, 4, 1};
        seq2 = {0, 4, 3, 1, 5, 2};
        done = true;
      }
  const int w = wchain[1];
  const int near = wchain.front();
  auto expand = [&](const std::vector<int>& seq) {
    VertexPath out{w};
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      int s = seq[i], t = seq[i + 1];
      VertexPath piece;
      if (s == 0) {
        if (sym[t] == near)
          piece = {w, near};
        else
          piece.assign(wchain.begin() + 1, wchain.end());
      } else {
        piece = chain[{sym[s], sym[t]}];
      }
      out.insert(out.end(), piece.begin() + 1, piece.end());
    }
    return out;
  };
  Decomposition d;
  d.add_path(expand(seq1));
  d.add_path(expand(seq2));
  if (!verify_decomposition(g, d).ok()) throw Error(ErrorKind::UnreachableCase, "template expansion failed", edge_list_dump(g));
  return d;
}

}  // namespace gd
