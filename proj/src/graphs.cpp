#include "scb/graphs.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "scb/error.hpp"

namespace scb {

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::next(std::size_t from) const noexcept {
  if (from >= n_) return n_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return std::min(n_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return n_;
    w = words_[wi];
  }
}

Bitset& Bitset::operator&=(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool Bitset::intersects(const Bitset& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::size_t Bitset::count_and(const Bitset& o) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  }
  return c;
}

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw Error(ErrorCode::InvalidParameter, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::InvalidParameter, "self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  const Bitset& r = rows_[u];
  for (std::size_t v = r.next(0); v < order(); v = r.next(v + 1)) out.push_back(v);
  return out;
}

std::vector<std::size_t> Graph::degree_list() const {
  std::vector<std::size_t> out(order());
  for (std::size_t u = 0; u < order(); ++u) out[u] = degree(u);
  return out;
}

bool Graph::is_regular() const {
  const auto deg = degree_list();
  return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
}

void Graph::set_labels(std::vector<std::vector<std::uint32_t>> labels) {
  if (labels.size() != order()) throw Error(ErrorCode::DimensionMismatch, "one label per vertex required");
  labels_ = std::move(labels);
}

Graph Graph::complement() const {
  Graph h(order());
  for (std::size_t u = 0; u < order(); ++u) {
    for (std::size_t v = u + 1; v < order(); ++v) {
      if (!adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    }
  }
  return h;
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  os << order() << ' ' << edge_count() << '\n';
  for (std::size_t u = 0; u < order(); ++u) {
    for (std::size_t v : neighbors(u)) {
      if (u < v) os << u << ' ' << v << '\n';
    }
  }
  return os.str();
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph build_distance_graph(const MetricSpace& space) {
  const std::size_t n = space.ambient_size();
  if (n > (std::size_t{1} << 14)) {
    throw Error(ErrorCode::AmbientTooLarge, "dense distance graph limited to 2^14 vertices");
  }
  Graph g(n);
  std::vector<std::vector<std::uint32_t>> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : space.unit_neighbors(i)) {
      if (i < j) g.add_edge(i, j);
    }
    labels[i] = space.element(i);
  }
  g.set_labels(std::move(labels));
  return g;
}

int DistanceMatrix::max_finite() const {
  int best = 0;
  for (auto x : d) {
    if (x != kUnreachable) best = std::max(best, static_cast<int>(x));
  }
  return best;
}

std::vector<std::uint16_t> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<std::uint16_t> dist(g.order(), kUnreachable);
  std::vector<std::size_t> frontier{source};
  dist[source] = 0;
  Bitset unseen(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) unseen.set(v);
  unseen.reset(source);
  std::uint16_t level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<std::size_t> next;
    for (std::size_t u : frontier) {
      const Bitset& r = g.row(u);
      const auto& rw = r.words();
      auto& uw = unseen.words();
      for (std::size_t wi = 0; wi < rw.size(); ++wi) {
        std::uint64_t hit = rw[wi] & uw[wi];
        uw[wi] &= ~hit;
        while (hit) {
          const std::size_t v = (wi << 6) + static_cast<std::size_t>(std::countr_zero(hit));
          hit &= hit - 1;
          dist[v] = level;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

DistanceMatrix all_pairs_graph_distance(const Graph& g) {
  DistanceMatrix m;
  m.n = g.order();
  m.d.resize(m.n * m.n);
  for (std::size_t u = 0; u < m.n; ++u) {
    const auto row = bfs_distances(g, u);
    std::copy(row.begin(), row.end(), m.d.begin() + static_cast<std::ptrdiff_t>(u * m.n));
  }
  return m;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

bool verify_geodesic_equals_metric(const MetricSpace& space, const Graph& g) {
  if (space.ambient_size() != g.order()) return false;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto row = bfs_distances(g, u);
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (row[v] == kUnreachable || row[v] != space.distance(u, v)) return false;
    }
  }
  return true;
}

Graph power_graph(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "power must be >= 1");
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto row = bfs_distances(g, u);
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (row[v] != kUnreachable && row[v] <= k) h.add_edge(u, v);
    }
  }
  if (!g.labels().empty()) h.set_labels(g.labels());
  return h;
}

std::vector<std::vector<std::int64_t>> closed_walk_counts(const Graph& g, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidParameter, "walk length must be >= 0");
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t u = 0; u < n; ++u) adj[u] = g.neighbors(u);

  const int half = (k + 1) / 2;
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(k + 1, 0));
  std::vector<std::vector<std::int64_t>> walk(half + 1, std::vector<std::int64_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    // walk[t][w] = number of walks of length t from v to w.
    std::fill(walk[0].begin(), walk[0].end(), 0);
    walk[0][v] = 1;
    for (int t = 1; t <= half; ++t) {
      for (std::size_t w = 0; w < n; ++w) {
        std::int64_t s = 0;
        for (std::size_t x : adj[w]) {
          if (__builtin_add_overflow(s, walk[t - 1][x], &s)) {
            throw Error(ErrorCode::TooLarge, "walk count overflows 64 bits");
          }
        }
        walk[t][w] = s;
      }
    }
    for (int i = 0; i <= k; ++i) {
      const int a = i / 2;
      const int b = i - a;
      __int128 s = 0;
      for (std::size_t w = 0; w < n; ++w) s += static_cast<__int128>(walk[a][w]) * walk[b][w];
      if (s > INT64_MAX) throw Error(ErrorCode::TooLarge, "walk count overflows 64 bits");
      out[v][i] = static_cast<std::int64_t>(s);
    }
  }
  return out;
}

bool is_k_partially_walk_regular(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be >= 1");
  const auto walks = closed_walk_counts(g, k);
  for (const auto& row : walks) {
    if (row != walks.front()) return false;
  }
  return true;
}

int triangle_delta(const Graph& g) {
  std::int64_t best = 0;
  for (const auto& row : closed_walk_counts(g, 3)) best = std::max(best, row[3]);
  return static_cast<int>(best);
}

DistanceRegularityReport is_distance_regular(const Graph& g) {
  DistanceRegularityReport rep;
  const std::size_t n = g.order();
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  if (n == 0) return rep;

  // Intersection numbers (c_i, a_i, b_i) per distance i, with the pair that fixed them.
  struct Entry {
    std::int64_t c, a, b;
    std::size_t x, y;
    bool set = false;
  };
  std::vector<Entry> table(n);
  int diameter = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    std::vector<Bitset> layer;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t i = dist[v];
      while (layer.size() <= i) layer.emplace_back(n);
      layer[i].set(v);
    }
    for (std::size_t v = 0; v < n; ++v) {
      const int i = dist[v];
      diameter = std::max(diameter, i);
      const Bitset& r = g.row(v);
      const std::int64_t c = i > 0 ? static_cast<std::int64_t>(r.count_and(layer[i - 1])) : 0;
      const std::int64_t a = static_cast<std::int64_t>(r.count_and(layer[i]));
      const std::int64_t b = static_cast<std::int64_t>(g.degree(v)) - c - a;
      Entry& e = table[i];
      if (!e.set) {
        e = Entry{c, a, b, u, v, true};
      } else if (e.c != c || e.a != a || e.b != b) {
        rep.is_distance_regular = false;
        rep.diameter = diameter;
        rep.witness = IntersectionWitness{e.x, e.y, u, v, i};
        return rep;
      }
    }
  }
  rep.is_distance_regular = true;
  rep.diameter = diameter;
  for (int i = 0; i < diameter; ++i) rep.b.push_back(table[i].b);
  for (int i = 1; i <= diameter; ++i) rep.c.push_back(table[i].c);
  return rep;
}

bool is_independent_set(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

// Maximum clique in the complement, with greedy-colouring bounds on bitsets.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::chrono::duration<double> budget)
      : n_(g.order()), deadline_(std::chrono::steady_clock::now() +
                                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget)) {
    // Colouring order: descending degree in the complement, ties by index.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> cdeg(n_);
    for (std::size_t v = 0; v < n_; ++v) cdeg[v] = n_ - 1 - g.degree(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return cdeg[a] > cdeg[b]; });
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    comp_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && !g.adjacent(order_[i], order_[j])) comp_[i].set(j);
      }
    }
  }

  void set_classes(const std::vector<std::size_t>& cls) {
    if (cls.empty()) return;
    klass_.resize(n_);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      klass_[i] = cls[order_[i]];
      count = std::max(count, klass_[i] + 1);
    }
    seen_.assign(count, 0);
  }

  void seed(const std::vector<std::size_t>& independent) {
    if (independent.size() > best_.size()) best_ = independent;
  }

  MisResult run() {
    Bitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    current_.clear();
    bool exact = true;
    if (n_ > 0) {
      try {
        expand(all);
      } catch (const Timeout&) {
        exact = false;
      }
    }
    MisResult r;
    r.alpha = best_.size();
    r.certificate = best_;
    std::sort(r.certificate.begin(), r.certificate.end());
    r.exact = exact;
    r.nodes = nodes_;
    return r;
  }

 private:
  struct Timeout {};

  void expand(Bitset p) {
    if ((++nodes_ & 1023u) == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout{};
    if (!klass_.empty() && current_.size() + classes_hit(p) <= best_.size()) return;
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    colour(p, verts, colors);
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colors[idx] <= best_.size()) return;
      const std::size_t v = verts[idx];
      current_.push_back(order_[v]);
      Bitset np = p;
      np &= comp_[v];
      if (np.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(np));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::size_t classes_hit(const Bitset& p) {
    ++stamp_;
    std::size_t hit = 0;
    for (std::size_t v = p.next(0); v < n_; v = p.next(v + 1)) {
      if (seen_[klass_[v]] != stamp_) {
        seen_[klass_[v]] = stamp_;
        ++hit;
      }
    }
    return hit;
  }

  // Sequential greedy colouring of p; only vertices whose colour can still
  // improve the incumbent are returned, in ascending colour order.
  void colour(const Bitset& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& colors) const {
    const std::size_t need = best_.size() >= current_.size() ? best_.size() - current_.size() + 1 : 1;
    Bitset uncoloured = p;
    std::size_t k = 1;
    while (!uncoloured.none()) {
      Bitset q = uncoloured;
      for (std::size_t v = q.next(0); v < n_; v = q.next(v + 1)) {
        uncoloured.reset(v);
        q.reset(v);
        q.subtract(comp_[v]);
        if (k >= need) {
          verts.push_back(v);
          colors.push_back(k);
        }
      }
      ++k;
    }
  }

  std::size_t n_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> comp_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> klass_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
};

std::vector<std::size_t> greedy_independent(const Graph& g, const std::vector<std::size_t>& order) {
  Bitset blocked(g.order());
  std::vector<std::size_t> out;
  for (std::size_t v : order) {
    if (blocked.test(v)) continue;
    out.push_back(v);
    blocked.set(v);
    blocked |= g.row(v);
  }
  return out;
}

void check_classes(const Graph& g, const std::vector<std::size_t>& cls) {
  if (cls.empty()) return;
  if (cls.size() != g.order()) throw Error(ErrorCode::InvalidParameter, "one clique class per vertex required");
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (cls[v] >= members.size()) members.resize(cls[v] + 1);
    members[cls[v]].push_back(v);
  }
  for (const auto& m : members) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!g.adjacent(m[i], m[j])) throw Error(ErrorCode::InvalidParameter, "clique class is not a clique");
      }
    }
  }
}

MisResult solve(const Graph& g, std::chrono::duration<double> budget,
                const std::vector<std::size_t>& hint, const std::vector<std::size_t>& classes) {
  check_classes(g, classes);
  CliqueSearch search(g, budget);
  search.set_classes(classes);
  if (!hint.empty()) {
    if (!is_independent_set(g, hint)) throw Error(ErrorCode::InvalidParameter, "hint is not independent");
    search.seed(hint);
  }
  std::vector<std::size_t> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  search.seed(greedy_independent(g, order));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
  search.seed(greedy_independent(g, order));
  return search.run();
}

}  // namespace

MisResult max_independent_set(const Graph& g, const MisOptions& options) {
  if (!options.vertex_transitive || g.order() == 0) {
    return solve(g, options.time_budget, options.hint, options.clique_class);
  }

  std::vector<std::size_t> rest;
  std::vector<std::size_t> position(g.order(), 0);
  for (std::size_t v = 1; v < g.order(); ++v) {
    if (!g.adjacent(0, v)) {
      position[v] = rest.size();
      rest.push_back(v);
    }
  }
  std::vector<std::size_t> sub_hint;
  if (std::find(options.hint.begin(), options.hint.end(), 0) != options.hint.end()) {
    if (!is_independent_set(g, options.hint)) throw Error(ErrorCode::InvalidParameter, "hint is not independent");
    for (std::size_t v : options.hint) {
      if (v != 0) sub_hint.push_back(position[v]);
    }
  }
  std::vector<std::size_t> sub_classes;
  if (!options.clique_class.empty()) {
    if (options.clique_class.size() != g.order()) {
      throw Error(ErrorCode::InvalidParameter, "one clique class per vertex required");
    }
    for (std::size_t v : rest) sub_classes.push_back(options.clique_class[v]);
  }
  MisResult sub = solve(g.induced(rest), options.time_budget, sub_hint, sub_classes);
  MisResult r;
  r.certificate.push_back(0);
  for (std::size_t v : sub.certificate) r.certificate.push_back(rest[v]);
  std::sort(r.certificate.begin(), r.certificate.end());
  r.alpha = r.certificate.size();
  r.exact = sub.exact;
  r.nodes = sub.nodes;
  return r;
}

std::vector<std::size_t> additive_code_hint(const MetricSpace& space, const Graph& g, int k,
                                            int attempts) {
  if (!space.translation_invariant() || g.order() != space.ambient_size()) return {};
  const std::size_t n = g.order();
  const std::uint32_t p = space.field()->characteristic();
  const auto dist0 = bfs_distances(g, 0);
  std::vector<char> near(n, 0);
  for (std::size_t v = 1; v < n; ++v) near[v] = dist0[v] != kUnreachable && dist0[v] <= k;

  std::vector<std::size_t> best{0};
  std::vector<std::size_t> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  std::mt19937_64 rng(0x5eedULL);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt == 1) std::reverse(order.begin(), order.end());
    if (attempt >= 2) std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<std::size_t> code{0};
    for (std::size_t g0 : order) {
      if (in[g0] || near[g0]) continue;
      // code + {c * g0 : c in GF(p)} must avoid the k-ball around zero.
      std::vector<std::size_t> added;
      std::size_t multiple = 0;
      bool ok = true;
      for (std::uint32_t c = 1; c < p && ok; ++c) {
        multiple = space.add_index(multiple, g0);
        for (std::size_t x : code) {
          const std::size_t y = space.add_index(x, multiple);
          if (near[y]) {
            ok = false;
            break;
          }
          added.push_back(y);
        }
      }
      if (!ok) continue;
      for (std::size_t y : added) {
        in[y] = 1;
        code.push_back(y);
      }
    }
    if (code.size() > best.size()) best = code;
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<std::size_t> coset_clique_classes(const MetricSpace& space, const Graph& g, int k) {
  if (!space.translation_invariant() || g.order() != space.ambient_size()) return {};
  const std::size_t n = g.order();
  const std::uint32_t p = space.field()->characteristic();
  const auto dist0 = bfs_distances(g, 0);
  std::vector<char> near(n, 0);
  for (std::size_t v = 1; v < n; ++v) near[v] = dist0[v] != kUnreachable && dist0[v] <= k;

  // Greedily grow H inside the ball, in index order.
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::vector<std::size_t> group{0};
  for (std::size_t g0 = 1; g0 < n; ++g0) {
    if (in[g0] || !near[g0]) continue;
    std::vector<std::size_t> added;
    std::size_t multiple = 0;
    bool ok = true;
    for (std::uint32_t c = 1; c < p && ok; ++c) {
      multiple = space.add_index(multiple, g0);
      for (std::size_t x : group) {
        const std::size_t y = space.add_index(x, multiple);
        if (!near[y]) {
          ok = false;
          break;
        }
        added.push_back(y);
      }
    }
    if (!ok) continue;
    for (std::size_t y : added) {
      in[y] = 1;
      group.push_back(y);
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(n, kUnset);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (cls[v] != kUnset) continue;
    for (std::size_t h : group) cls[space.add_index(v, h)] = next;
    ++next;
  }
  return cls;
}

MisResult k_independence_number(const Graph& g, int k, const MisOptions& options) {
  return max_independent_set(k == 1 ? g : power_graph(g, k), options);
}

}  // namespace scb
