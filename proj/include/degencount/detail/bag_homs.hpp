#pragma once

#include "degencount/hom.hpp"

#include <vector>

namespace degencount::detail {

// Enumeration plan for homomorphisms of the sub-dag reachable from one bag.
// Vertices are processed in topological order; non-roots are expanded from
// the out-list of an in-neighbour's image, so each costs at most d choices.
struct BagPlan {
  std::vector<Vertex> order;
  std::vector<int> anchor;               // position of the expanding in-neighbour, -1 for roots
  std::vector<std::vector<int>> checks;  // positions of the remaining in-neighbours

  int position(Vertex v) const {
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
      if (order[i] == v) return i;
    return -1;
  }
};

BagPlan make_plan(const OrientedGraph& h, VertexMask reach_set);

// Host vertices grouped by colour, for root candidates under a filter.
std::vector<std::vector<Vertex>> colour_classes(const ColourFilter& filter, int host_vertices);

template <class F>
void enumerate_bag_homs(const BagPlan& plan, const HostDag& host, const ColourFilter& filter,
                        const std::vector<std::vector<Vertex>>& classes, std::vector<Vertex>& img, F&& f) {
  const int k = static_cast<int>(plan.order.size());
  img.assign(k, -1);
  const bool filtered = filter.active();
  auto admissible = [&](int i, Vertex g) {
    if (filtered && filter.host_colour[g] != filter.pattern_colour[plan.order[i]]) return false;
    for (int j : plan.checks[i])
      if (!host.has_arc(img[j], g)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      f(img);
      return;
    }
    if (plan.anchor[i] < 0) {
      if (filtered) {
        const int c = filter.pattern_colour[plan.order[i]];
        if (c < 0 || c >= static_cast<int>(classes.size())) return;
        for (Vertex g : classes[c])
          if (admissible(i, g)) {
            img[i] = g;
            self(self, i + 1);
          }
      } else {
        for (Vertex g = 0; g < host.num_vertices(); ++g)
          if (admissible(i, g)) {
            img[i] = g;
            self(self, i + 1);
          }
      }
    } else {
      for (Vertex g : host.out(img[plan.anchor[i]]))
        if (admissible(i, g)) {
          img[i] = g;
          self(self, i + 1);
        }
    }
  };
  rec(rec, 0);
}

}  // namespace degencount::detail
