#include <algorithm>
#include <string>
#include <vector>

#include "isospec/error.hpp"
#include "isospec/graph.hpp"

namespace isospec {

namespace {

// Backtracking over vertices of `a` in a connectivity-friendly order; each
// candidate image must share the degree and agree on adjacency with every
// vertex already mapped.
class Matcher {
 public:
  Matcher(const SimpleGraph& a, const SimpleGraph& b) : a_(a), b_(b) {
    const int n = a.order();
    order_.reserve(n);
    std::vector<char> placed(n, 0);
    // Highest degree first, then grow through neighbours so that adjacency
    // constraints bite early.
    while (static_cast<int>(order_.size()) < n) {
      Vertex seed = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (!placed[v] && (seed < 0 || a.degree(v) > a.degree(seed))) seed = v;
      }
      std::vector<Vertex> queue{seed};
      placed[seed] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        std::vector<Vertex> next(a.neighbours(queue[i]).begin(), a.neighbours(queue[i]).end());
        std::sort(next.begin(), next.end(), [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
        for (Vertex u : next) {
          if (!placed[u]) {
            placed[u] = 1;
            queue.push_back(u);
          }
        }
      }
    }
    image_.assign(n, -1);
    used_.assign(n, 0);
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[w] || b_.degree(w) != a_.degree(v)) continue;
      if (!consistent(v, w, depth)) continue;
      image_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
      image_[v] = -1;
    }
    return false;
  }

  bool consistent(Vertex v, Vertex w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order_[i];
      if (a_.adjacent(v, x) != b_.adjacent(w, image_[x])) return false;
    }
    return true;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

bool are_isomorphic_small(const SimpleGraph& a, const SimpleGraph& b, int cap) {
  if (a.order() > cap || b.order() > cap) {
    throw Error(ErrorKind::TooLarge, "isomorphism search capped at " + std::to_string(cap) +
                                         " vertices, got " + std::to_string(std::max(a.order(), b.order())));
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_list(a) != degree_list(b)) return false;
  return Matcher(a, b).run();
}

}  // namespace isospec
