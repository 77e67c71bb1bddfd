#include "zxlat/models/automorphism.hpp"

#include "zxlat/errors.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <string>

namespace zxlat::models {

namespace {

// The bipartite graph as one graph on nV + nVHat vertices: v is vertex v,
// vhat is vertex nV + vhat.
struct Graph {
  std::size_t nv = 0;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<std::vector<bool>> matrix;
  std::vector<std::vector<std::size_t>> signature;

  explicit Graph(const BipartiteModel& m) : nv(m.nV()), n(m.nV() + m.nVHat()) {
    adj.resize(n);
    matrix.assign(n, std::vector<bool>(n, false));
    for (const auto& [r, c] : m.edges()) {
      adj[c].push_back(nv + r);
      adj[nv + r].push_back(c);
      matrix[c][nv + r] = true;
      matrix[nv + r][c] = true;
    }
    // degree followed by the sorted neighbour degrees
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> sig{adj[x].size()};
      std::vector<std::size_t> nd;
      for (std::size_t y : adj[x]) {
        nd.push_back(adj[y].size());
      }
      std::sort(nd.begin(), nd.end());
      sig.insert(sig.end(), nd.begin(), nd.end());
      signature.push_back(std::move(sig));
    }
  }

  [[nodiscard]] bool inV(std::size_t x) const { return x < nv; }
};

class Search {
public:
  Search(const Graph& g, bool reversing, std::size_t limit)
      : g_(g), reversing_(reversing), limit_(limit) {
    image_.assign(g.n, kUnset);
    used_.assign(g.n, false);
    order_ = visitOrder();
  }

  std::vector<std::vector<std::size_t>> run() {
    extend(0);
    return found_;
  }

private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  const Graph& g_;
  bool reversing_;
  std::size_t limit_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> found_;

  // Breadth-first within each component, so most vertices have an assigned
  // neighbour when they are reached.
  [[nodiscard]] std::vector<std::size_t> visitOrder() const {
    std::vector<std::size_t> order;
    std::vector<bool> seen(g_.n, false);
    for (std::size_t root = 0; root < g_.n; ++root) {
      if (seen[root]) {
        continue;
      }
      std::deque<std::size_t> queue{root};
      seen[root] = true;
      while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        order.push_back(x);
        for (std::size_t y : g_.adj[x]) {
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    return order;
  }

  [[nodiscard]] bool compatible(std::size_t x, std::size_t y) const {
    if (used_[y] || (g_.inV(x) == g_.inV(y)) == reversing_ ||
        g_.signature[x] != g_.signature[y]) {
      return false;
    }
    for (std::size_t k = 0; k < g_.n; ++k) {
      if (image_[k] != kUnset && g_.matrix[x][k] != g_.matrix[y][image_[k]]) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::vector<std::size_t> candidates(std::size_t x) const {
    // an assigned neighbour restricts the image to its image's neighbours
    for (std::size_t y : g_.adj[x]) {
      if (image_[y] != kUnset) {
        return g_.adj[image_[y]];
      }
    }
    std::vector<std::size_t> all(g_.n);
    for (std::size_t k = 0; k < g_.n; ++k) {
      all[k] = k;
    }
    return all;
  }

  void extend(std::size_t depth) {
    if (found_.size() >= limit_) {
      return;
    }
    if (depth == order_.size()) {
      found_.push_back(image_);
      return;
    }
    const std::size_t x = order_[depth];
    auto cands = candidates(x);
    std::sort(cands.begin(), cands.end());
    for (std::size_t y : cands) {
      if (!compatible(x, y)) {
        continue;
      }
      image_[x] = y;
      used_[y] = true;
      extend(depth + 1);
      used_[y] = false;
      image_[x] = kUnset;
    }
  }
};

} // namespace

std::vector<Automorphism> findAutomorphisms(const BipartiteModel& m,
                                            bool reversing,
                                            const SearchOptions& opts) {
  if (m.nV() + m.nVHat() > opts.searchCap) {
    throw SearchCapExceeded(m.name + " has " +
                            std::to_string(m.nV() + m.nVHat()) +
                            " vertices, above the search cap " +
                            std::to_string(opts.searchCap));
  }
  if (reversing && m.nV() != m.nVHat()) {
    return {};
  }
  const Graph g(m);
  Search search(g, reversing, opts.limit);
  const std::size_t nv = m.nV();
  std::vector<Automorphism> out;
  for (const auto& image : search.run()) {
    Automorphism a;
    a.reversing = reversing;
    for (std::size_t x = 0; x < g.n; ++x) {
      const std::size_t y = image[x] < nv ? image[x] : image[x] - nv;
      (x < nv ? a.onV : a.onVHat).push_back(y);
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const Automorphism& a, const Automorphism& b) {
    return std::tie(a.onV, a.onVHat) < std::tie(b.onV, b.onVHat);
  });
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].name = (reversing ? "reversing#" : "preserving#") + std::to_string(k);
  }
  return out;
}

} // namespace zxlat::models
