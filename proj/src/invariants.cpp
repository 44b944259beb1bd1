#include "hgx/invariants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "hgx/canonical.hpp"

namespace hgx {

namespace {

void require_graph(const Hypergraph& g, const char* what) {
  if (g.uniformity() != 2)
    throw Error(ErrorCode::UniformityMismatch, std::string(what) + " expects a graph (r = 2)");
}

// Vertices sorted by non-increasing degree, ties by label, restricted to active.
std::vector<Vertex> degree_order(const Hypergraph& h, VertexMask active) {
  std::vector<Vertex> order = vertices_of(active);
  std::vector<int> deg(h.order(), 0);
  for (VertexMask e : h.edge_masks()) {
    if ((e & ~active) != 0) continue;
    for (VertexMask x = e; x != 0; x &= x - 1) ++deg[lowest(x)];
  }
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  return order;
}

// For each position in order, the active edges whose last vertex (in that
// order) sits at that position.
std::vector<std::vector<VertexMask>> edges_closing_at(const Hypergraph& h, const std::vector<Vertex>& order,
                                                      VertexMask active) {
  std::vector<int> pos(h.order(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  std::vector<std::vector<VertexMask>> closing(order.size());
  for (VertexMask e : h.edge_masks()) {
    if ((e & ~active) != 0) continue;
    int last = -1;
    for (VertexMask x = e; x != 0; x &= x - 1) last = std::max(last, pos[lowest(x)]);
    closing[last].push_back(e);
  }
  return closing;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const Hypergraph& h) : h_(h), edges_(h.edge_masks().begin(), h.edge_masks().end()) {}

  std::vector<int> run() {
    std::vector<int> cur;
    recurse(0, 0, cur);
    return best_;
  }

 private:
  int bound(std::size_t idx, VertexMask used) const {
    int count = 0;
    VertexMask reach = 0;
    for (std::size_t i = idx; i < edges_.size(); ++i) {
      if ((edges_[i] & used) == 0) {
        ++count;
        reach |= edges_[i];
      }
    }
    return std::min(count, popcount(reach) / h_.uniformity());
  }

  void recurse(std::size_t idx, VertexMask used, std::vector<int>& cur) {
    if (cur.size() > best_.size()) best_ = cur;
    if (idx == edges_.size()) return;
    if (static_cast<int>(cur.size()) + bound(idx, used) <= static_cast<int>(best_.size())) return;
    if ((edges_[idx] & used) == 0) {
      cur.push_back(static_cast<int>(idx));
      recurse(idx + 1, used | edges_[idx], cur);
      cur.pop_back();
    }
    recurse(idx + 1, used, cur);
  }

  const Hypergraph& h_;
  std::vector<VertexMask> edges_;
  std::vector<int> best_;
};

class ColoringSearch {
 public:
  ColoringSearch(const Hypergraph& h, int k)
      : k_(k), order_(degree_order(h, h.vertex_mask())), closing_(edges_closing_at(h, order_, h.vertex_mask())),
        colors_(h.order(), -1) {}

  bool run() { return recurse(0, 0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool recurse(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      colors_[v] = c;
      bool ok = true;
      for (VertexMask e : closing_[i]) {
        bool mono = true;
        for (VertexMask x = e; x != 0 && mono; x &= x - 1) mono = colors_[lowest(x)] == c;
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok && recurse(i + 1, std::max(used, c + 1))) return true;
    }
    colors_[v] = -1;
    return false;
  }

  int k_;
  std::vector<Vertex> order_;
  std::vector<std::vector<VertexMask>> closing_;
  std::vector<int> colors_;
};

// Red-blue assignments minimizing the red count. In strong mode every edge
// needs exactly one red vertex; otherwise no edge may be monochromatic.
class RedBlueSearch {
 public:
  RedBlueSearch(const Hypergraph& h, bool strong)
      : h_(h), strong_(strong), incident_(h.order()), reds_(h.size(), 0), open_(h.size(), 0) {
    for (int i = 0; i < static_cast<int>(h.size()); ++i) {
      const VertexMask e = h.edge_masks()[i];
      open_[i] = popcount(e);
      for (VertexMask x = e; x != 0; x &= x - 1) incident_[lowest(x)].push_back(i);
    }
  }

  // Minimum red count, or -1 when no valid assignment exists.
  int minimize() {
    mode_ = Mode::Minimize;
    best_ = h_.order() + 1;
    recurse(0, 0, 0);
    return best_ > h_.order() ? -1 : best_;
  }

  // Every valid red set of the given size, lexicographically ordered; stops
  // after the first when first_only is set.
  std::vector<VertexMask> enumerate(int size, bool first_only) {
    mode_ = first_only ? Mode::First : Mode::All;
    best_ = size;
    found_.clear();
    recurse(0, 0, 0);
    return found_;
  }

  VertexMask witness() const { return witness_; }

 private:
  enum class Mode { Minimize, First, All };

  bool assign(Vertex v, bool red) {
    bool ok = true;
    for (int ei : incident_[v]) {
      --open_[ei];
      if (red) ++reds_[ei];
      const int size = h_.uniformity();
      if (strong_) {
        if (reds_[ei] > 1 || (open_[ei] == 0 && reds_[ei] == 0)) ok = false;
      } else if (open_[ei] == 0 && (reds_[ei] == 0 || reds_[ei] == size)) {
        ok = false;
      }
    }
    return ok;
  }

  void unassign(Vertex v, bool red) {
    for (int ei : incident_[v]) {
      ++open_[ei];
      if (red) --reds_[ei];
    }
  }

  bool done() const { return mode_ == Mode::First && !found_.empty(); }

  void recurse(Vertex v, VertexMask red, int count) {
    if (done()) return;
    if (v == h_.order()) {
      if (mode_ == Mode::Minimize) {
        if (count < best_) {
          best_ = count;
          witness_ = red;
        }
      } else if (count == best_) {
        found_.push_back(red);
      }
      return;
    }
    const bool isolated = incident_[v].empty();
    // Red first keeps enumeration in lexicographic order of red sets.
    const bool may_red = !isolated && (mode_ == Mode::Minimize ? count + 1 < best_ : count + 1 <= best_);
    if (may_red) {
      if (assign(v, true)) recurse(v + 1, red | bit(v), count + 1);
      unassign(v, true);
    }
    if (assign(v, false)) recurse(v + 1, red, count);
    unassign(v, false);
  }

  const Hypergraph& h_;
  bool strong_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> reds_;
  std::vector<int> open_;
  Mode mode_ = Mode::Minimize;
  int best_ = 0;
  VertexMask witness_ = 0;
  std::vector<VertexMask> found_;
};

int min_mono_on(const Hypergraph& g, VertexMask active, int colors, std::vector<VertexMask>* witness) {
  const auto order = degree_order(g, active);
  const auto closing = edges_closing_at(g, order, active);
  std::vector<int> col(g.order(), -1);
  int best = std::numeric_limits<int>::max();
  std::vector<int> best_col;

  auto recurse = [&](auto&& self, std::size_t i, int used, int mono) -> void {
    if (mono >= best) return;
    if (i == order.size()) {
      best = mono;
      best_col = col;
      return;
    }
    const Vertex v = order[i];
    const int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
      col[v] = c;
      int added = 0;
      for (VertexMask e : closing[i]) {
        bool same = true;
        for (VertexMask x = e; x != 0 && same; x &= x - 1) same = col[lowest(x)] == c;
        added += same;
      }
      self(self, i + 1, std::max(used, c + 1), mono + added);
    }
    col[v] = -1;
  };
  recurse(recurse, 0, 0, 0);

  if (witness) {
    witness->clear();
    for (VertexMask e : g.edge_masks()) {
      if ((e & ~active) != 0) continue;
      const int c = best_col[lowest(e)];
      bool same = true;
      for (VertexMask x = e; x != 0 && same; x &= x - 1) same = best_col[lowest(x)] == c;
      if (same) witness->push_back(e);
    }
  }
  return best;
}

bool sequence_less(VertexMask a, VertexMask b) {
  const Edge va = vertices_of(a), vb = vertices_of(b);
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace

bool is_proper(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != h.order()) return false;
  for (VertexMask e : h.edge_masks()) {
    const int first = c.colors[lowest(e)];
    bool mono = true;
    for (VertexMask x = e; x != 0 && mono; x &= x - 1) mono = c.colors[lowest(x)] == first;
    if (mono) return false;
  }
  return true;
}

bool is_strong_red_blue(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != h.order()) return false;
  for (VertexMask e : h.edge_masks()) {
    int reds = 0;
    for (VertexMask x = e; x != 0; x &= x - 1) reds += c.colors[lowest(x)] == 0;
    if (reds != 1) return false;
  }
  return true;
}

std::vector<int> maximum_matching(const Hypergraph& h) { return MatchingSearch(h).run(); }

int matching_number(const Hypergraph& h) { return static_cast<int>(maximum_matching(h).size()); }

Coloring optimal_coloring(const Hypergraph& h) {
  if (h.empty()) return Coloring{std::vector<int>(h.order(), 0), h.order() > 0 ? 1 : 0};
  if (h.uniformity() == 1) throw Error(ErrorCode::NotColorable, "a 1-graph with an edge has no proper colouring");
  for (int k = 2; k <= h.order(); ++k) {
    ColoringSearch search(h, k);
    if (search.run()) {
      Coloring c{search.colors(), 0};
      c.k = *std::max_element(c.colors.begin(), c.colors.end()) + 1;
      return c;
    }
  }
  throw Error(ErrorCode::NotColorable, describe(h));  // unreachable for r >= 2
}

int chromatic_number(const Hypergraph& h) {
  if (h.empty()) return 1;
  return optimal_coloring(h).k;
}

VertexSet p_witness(const Hypergraph& f) {
  if (f.empty()) throw Error(ErrorCode::NoEdges, "p is defined for hypergraphs with an edge");
  if (f.uniformity() < 2) throw Error(ErrorCode::NotTwoChromatic, "1-graphs have no red-blue colouring");
  RedBlueSearch search(f, false);
  if (search.minimize() < 0) throw Error(ErrorCode::NotTwoChromatic, "no proper red-blue colouring");
  return VertexSet(search.witness());
}

int p_value(const Hypergraph& f) { return p_witness(f).size(); }

std::vector<VertexSet> minimum_crosscuts(const Hypergraph& f) {
  if (f.empty()) throw Error(ErrorCode::NoEdges, "q is defined for hypergraphs with an edge");
  RedBlueSearch search(f, true);
  const int q = search.minimize();
  if (q < 0) return {};
  std::vector<VertexSet> out;
  for (VertexMask m : search.enumerate(q, false)) out.emplace_back(m);
  return out;
}

std::optional<CrosscutProfile> q_value(const Hypergraph& f) {
  if (f.empty()) throw Error(ErrorCode::NoEdges, "q is defined for hypergraphs with an edge");
  RedBlueSearch search(f, true);
  const int q = search.minimize();
  if (q < 0) return std::nullopt;
  CrosscutProfile profile;
  profile.q = q;
  profile.crosscut = VertexSet(search.enumerate(q, true).front());
  if (f.uniformity() >= 3) {
    for (Vertex v : profile.crosscut.vertices()) profile.link_chromatics.push_back(chromatic_number(link(f, v)));
    std::sort(profile.link_chromatics.rbegin(), profile.link_chromatics.rend());
  }
  return profile;
}

bool q_exceeds(const Hypergraph& f, int s) {
  const auto q = q_value(f);
  return !q || q->q > s;
}

CrosscutProfile crosscut_link_chromatics(const Hypergraph& f) {
  auto q = q_value(f);
  if (!q) throw Error(ErrorCode::NoCrosscut, "no strong red-blue colouring exists");
  return *q;
}

std::optional<Vertex> universal_vertex(const Hypergraph& f) {
  if (f.empty()) return std::nullopt;
  VertexMask common = f.vertex_mask();
  for (VertexMask e : f.edge_masks()) common &= e;
  if (common == 0) return std::nullopt;
  return lowest(common);
}

DerivedFamily derived_family(const Hypergraph& f) {
  const int n = f.order();
  if (n > 24) throw Error(ErrorCode::CapacityExceeded, "derived family enumerates all vertex subsets; n <= 24");
  DerivedFamily out;
  std::set<CanonicalForm> seen;
  std::set<int> dropped_orders;
  for (int size = 0; size <= n; ++size) {
    // Gosper's hack over all masks with `size` bits.
    VertexMask s = size == 0 ? 0 : (bit(size) - 1);
    const VertexMask limit = bit(n);
    while (s < limit) {
      if (is_weakly_independent(f, VertexSet(s))) {
        Hypergraph g = delete_vertices(f, VertexSet(s));
        if (g.empty()) {
          dropped_orders.insert(g.order());
        } else if (seen.insert(canonical_form(g)).second) {
          out.members.push_back(std::move(g));
        }
      }
      if (s == 0) break;
      const VertexMask c = s & (~s + 1);
      const VertexMask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  out.dropped_edgeless = static_cast<int>(dropped_orders.size());
  return out;
}

Hypergraph expansion(const Hypergraph& g, int r) {
  if (r < 2) throw Error(ErrorCode::ArityTooSmall, "expansion needs r >= 2");
  require_graph(g, "expansion");
  const int n = g.order() + (r - 2) * static_cast<int>(g.size());
  if (n > kMaxVertices) throw Error(ErrorCode::CapacityExceeded, "expansion has " + std::to_string(n) + " vertices");
  std::vector<VertexMask> edges;
  Vertex next = g.order();
  for (VertexMask e : g.edge_masks()) {
    VertexMask m = e;
    for (int i = 0; i < r - 2; ++i) m |= bit(next++);
    edges.push_back(m);
  }
  return Hypergraph::from_masks(r, n, std::move(edges));
}

bool is_independent(const Hypergraph& g, VertexMask s) {
  return std::none_of(g.edge_masks().begin(), g.edge_masks().end(),
                      [&](VertexMask e) { return popcount(e & s) >= 2; });
}

MValue m_value(const Hypergraph& g) {
  require_graph(g, "m");
  if (g.empty()) throw Error(ErrorCode::NoEdges, "m is defined for graphs with an edge");
  const int n = g.order();
  std::vector<VertexMask> nbr(n, 0);
  for (VertexMask e : g.edge_masks()) {
    const Vertex a = lowest(e), b = lowest(e & (e - 1));
    nbr[a] |= bit(b);
    nbr[b] |= bit(a);
  }
  MValue best{std::numeric_limits<int>::max(), VertexSet()};
  // decided: vertices already branched on; w: chosen independent set.
  auto recurse = [&](auto&& self, Vertex v, VertexMask w, VertexMask decided) -> void {
    int settled = 0;  // edges provably disjoint from the final W
    for (VertexMask e : g.edge_masks()) settled += (e & ~decided) == 0 && (e & w) == 0;
    const int lb = popcount(w) + settled;
    if (lb > best.value) return;
    if (v == n) {
      if (lb < best.value || sequence_less(w, best.w.mask())) best = MValue{lb, VertexSet(w)};
      return;
    }
    if ((nbr[v] & w) == 0) self(self, v + 1, w | bit(v), decided | bit(v));
    self(self, v + 1, w, decided | bit(v));
  };
  recurse(recurse, 0, 0, 0);
  return best;
}

std::pair<int, std::vector<VertexMask>> min_monochromatic(const Hypergraph& g, int colors) {
  if (colors < 1) throw Error(ErrorCode::BadParams, "need at least one colour");
  std::vector<VertexMask> z;
  const int count = min_mono_on(g, g.vertex_mask(), colors, &z);
  return {count, z};
}

MPrimeValue m_prime_value(const Hypergraph& g) {
  require_graph(g, "m'");
  const int k = chromatic_number(g);
  if (k < 3) throw Error(ErrorCode::ChromaticTooSmall, "m' needs chromatic number >= 3, got " + std::to_string(k));
  MPrimeValue best{std::numeric_limits<int>::max(), VertexSet(), {}};
  auto visit = [&](VertexMask u) {
    std::vector<VertexMask> z;
    const int count = min_mono_on(g, g.vertex_mask() & ~u, k - 2, &z);
    if (count < best.value) best = MPrimeValue{count, VertexSet(u), std::move(z)};
  };
  auto recurse = [&](auto&& self, Vertex v, VertexMask u) -> void {
    if (v == g.order()) {
      visit(u);
      return;
    }
    self(self, v + 1, u);
    if (is_independent(g, u | bit(v))) self(self, v + 1, u | bit(v));
  };
  recurse(recurse, 0, 0);
  return best;
}

}  // namespace hgx
