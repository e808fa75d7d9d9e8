#include "cpda/resolvable.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cpda {

std::vector<UserLabel> enumerate_users(int h, int r) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  return k_subsets(h, r);
}

std::uint64_t user_rank(int h, const UserLabel& label) {
  return subset_rank(h, label);
}

UserLabel user_unrank(int h, int r, std::uint64_t rank) {
  return subset_unrank(h, r, rank);
}

ParallelClassPartition::ParallelClassPartition(
    int h, int r, std::vector<std::vector<UserLabel>> classes)
    : h_(h), r_(r), classes_(std::move(classes)) {
  require(h_ >= 1 && r_ >= 1 && r_ <= h_, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  require(h_ % r_ == 0, ErrorCode::NotResolvable, "r must divide h");

  std::uint64_t expected_classes = binomial_u64(h_ - 1, r_ - 1);
  require(classes_.size() == expected_classes, ErrorCode::NotResolvable,
          "wrong number of parallel classes",
          std::to_string(classes_.size()) + " vs " +
              std::to_string(expected_classes));

  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& cls = classes_[c];
    require(cls.size() == static_cast<std::size_t>(h_ / r_),
            ErrorCode::NotResolvable, "class has wrong size",
            "class " + std::to_string(c + 1));
    std::vector<bool> seen(static_cast<std::size_t>(h_) + 1, false);
    for (const auto& label : cls) {
      require(label.size() == r_, ErrorCode::NotResolvable,
              "label of wrong size", label.to_string());
      for (int e : label.elems) {
        require(e >= 1 && e <= h_, ErrorCode::NotResolvable,
                "element outside [h]", label.to_string());
        require(!seen[static_cast<std::size_t>(e)], ErrorCode::NotResolvable,
                "labels within a class overlap", label.to_string());
        seen[static_cast<std::size_t>(e)] = true;
      }
      auto [it, inserted] =
          class_index_.emplace(label, static_cast<int>(c) + 1);
      require(inserted, ErrorCode::NotResolvable,
              "label appears in two classes", label.to_string());
    }
    // h/r disjoint r-subsets of [h] necessarily cover [h].
  }
  require(class_index_.size() == binomial_u64(h_, r_),
          ErrorCode::NotResolvable, "classes do not cover all labels");
}

int ParallelClassPartition::class_of(const UserLabel& label) const {
  auto it = class_index_.find(label);
  require(it != class_index_.end(), ErrorCode::NotMember,
          "label not in partition ground set", label.to_string());
  return it->second;
}

std::vector<UserLabel> ParallelClassPartition::concatenated_labels() const {
  std::vector<UserLabel> out;
  out.reserve(class_index_.size());
  for (const auto& cls : classes_)
    out.insert(out.end(), cls.begin(), cls.end());
  return out;
}

namespace {

// Round-robin (circle) 1-factorization of the complete graph on [h], h even:
// player h stays fixed, the rest rotate.
std::vector<std::vector<UserLabel>> circle_one_factorization(int h) {
  std::vector<std::vector<UserLabel>> classes;
  int n = h - 1;
  for (int round = 0; round < n; ++round) {
    std::vector<UserLabel> cls;
    cls.push_back(UserLabel({std::min(round + 1, h), std::max(round + 1, h)}));
    for (int i = 1; i <= h / 2 - 1; ++i) {
      int a = (round + i) % n + 1;
      int b = ((round - i) % n + n) % n + 1;
      cls.push_back(UserLabel({std::min(a, b), std::max(a, b)}));
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Unit-capacity Dinic on a tiny graph; enough for the per-step assignment
// problems of the Baranyai construction.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count)
      : adjacency_(static_cast<std::size_t>(node_count)) {}

  int add_edge(int from, int to, int capacity) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity});
    edges_.push_back({from, 0});
    adjacency_[static_cast<std::size_t>(from)].push_back(id);
    adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  int max_flow(int source, int sink) {
    int total = 0;
    while (bfs(source, sink)) {
      iter_.assign(adjacency_.size(), 0);
      while (int pushed = dfs(source, sink, 1 << 30)) total += pushed;
    }
    return total;
  }

  int flow_on(int edge_id) const {
    return edges_[static_cast<std::size_t>(edge_id) + 1].capacity;
  }

 private:
  struct Edge {
    int to;
    int capacity;
  };

  bool bfs(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int id : adjacency_[static_cast<std::size_t>(u)]) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        if (e.capacity > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] =
              level_[static_cast<std::size_t>(u)] + 1;
          queue.push(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  int dfs(int u, int sink, int limit) {
    if (u == sink) return limit;
    for (std::size_t& i = iter_[static_cast<std::size_t>(u)];
         i < adjacency_[static_cast<std::size_t>(u)].size(); ++i) {
      int id = adjacency_[static_cast<std::size_t>(u)][i];
      Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.capacity <= 0 ||
          level_[static_cast<std::size_t>(e.to)] !=
              level_[static_cast<std::size_t>(u)] + 1)
        continue;
      int pushed = dfs(e.to, sink, std::min(limit, e.capacity));
      if (pushed > 0) {
        e.capacity -= pushed;
        edges_[static_cast<std::size_t>(id) ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

// Baranyai's construction. Grows all C(h-1,r-1) classes element by element:
// after step n every class holds h/r disjoint (possibly empty) subsets of
// [n] covering [n], and each subset A of [n] appears C(h-n, r-|A|) times
// across all classes. Element n+1 is routed into one slot per class by an
// integral max-flow on the (class, slot-content) demand graph.
std::vector<std::vector<UserLabel>> baranyai_classes(int h, int r) {
  int num_classes = static_cast<int>(binomial_u64(h - 1, r - 1));
  int slots_per_class = h / r;
  std::vector<std::vector<std::vector<int>>> slots(
      static_cast<std::size_t>(num_classes),
      std::vector<std::vector<int>>(static_cast<std::size_t>(slots_per_class)));

  for (int n = 0; n < h; ++n) {
    // Distinct contents of growable slots, with per-class availability.
    std::map<std::vector<int>, int> content_node;
    std::vector<std::vector<int>> contents;
    for (const auto& cls : slots)
      for (const auto& slot : cls)
        if (static_cast<int>(slot.size()) < r && !content_node.count(slot)) {
          content_node.emplace(slot, static_cast<int>(contents.size()));
          contents.push_back(slot);
        }

    int source = 0;
    int sink = 1 + num_classes + static_cast<int>(contents.size());
    FlowNetwork net(sink + 1);
    std::vector<std::vector<std::pair<int, int>>> class_edges(
        static_cast<std::size_t>(num_classes));  // (edge id, content node)
    for (int c = 0; c < num_classes; ++c) {
      net.add_edge(source, 1 + c, 1);
      std::set<int> linked;
      for (const auto& slot : slots[static_cast<std::size_t>(c)]) {
        if (static_cast<int>(slot.size()) >= r) continue;
        int node = content_node.at(slot);
        if (linked.insert(node).second) {
          int id = net.add_edge(1 + c, 1 + num_classes + node, 1);
          class_edges[static_cast<std::size_t>(c)].emplace_back(id, node);
        }
      }
    }
    for (std::size_t a = 0; a < contents.size(); ++a) {
      int demand = static_cast<int>(binomial_u64(
          h - n - 1, r - static_cast<int>(contents[a].size()) - 1));
      net.add_edge(1 + num_classes + static_cast<int>(a), sink, demand);
    }

    int flow = net.max_flow(source, sink);
    require(flow == num_classes, ErrorCode::InternalFlowFailure,
            "assignment flow is not perfect",
            "step " + std::to_string(n + 1) + ", flow " +
                std::to_string(flow));

    for (int c = 0; c < num_classes; ++c) {
      const std::vector<int>* chosen = nullptr;
      for (auto [id, node] : class_edges[static_cast<std::size_t>(c)])
        if (net.flow_on(id) > 0) {
          chosen = &contents[static_cast<std::size_t>(node)];
          break;
        }
      require(chosen != nullptr, ErrorCode::InternalFlowFailure,
              "class received no assignment", "class " + std::to_string(c));
      for (auto& slot : slots[static_cast<std::size_t>(c)])
        if (slot == *chosen && static_cast<int>(slot.size()) < r) {
          slot.push_back(n + 1);  // n+1 exceeds everything placed so far
          break;
        }
    }
  }

  std::vector<std::vector<UserLabel>> classes;
  classes.reserve(static_cast<std::size_t>(num_classes));
  for (auto& cls : slots) {
    std::vector<UserLabel> labels;
    labels.reserve(cls.size());
    for (auto& slot : cls) labels.push_back(UserLabel(std::move(slot)));
    classes.push_back(std::move(labels));
  }
  return classes;
}

void canonicalize(std::vector<std::vector<UserLabel>>& classes) {
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

ParallelClassPartition parallel_classes(int h, int r) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  require(h % r == 0, ErrorCode::NotResolvable, "r must divide h",
          std::to_string(h) + "," + std::to_string(r));
  auto classes = (r == 2) ? circle_one_factorization(h) : baranyai_classes(h, r);
  canonicalize(classes);
  return ParallelClassPartition(h, r, std::move(classes));
}

int delta_shift(int i, int t, int h) {
  require(i >= 1 && i <= h && t >= 1 && t <= h, ErrorCode::ParamOutOfRange,
          "delta shift arguments must lie in [h]");
  int shifted = t + i - 1;
  return shifted <= h ? shifted : shifted - h;
}

int delta_shift_inverse(int i, int t, int h) {
  require(i >= 1 && i <= h && t >= 1 && t <= h, ErrorCode::ParamOutOfRange,
          "delta shift arguments must lie in [h]");
  int original = t - i + 1;
  return original >= 1 ? original : original + h;
}

UserLabel shift_label(const UserLabel& label, int i, int h) {
  std::vector<int> shifted;
  shifted.reserve(label.elems.size());
  for (int t : label.elems) shifted.push_back(delta_shift(i, t, h));
  std::sort(shifted.begin(), shifted.end());
  return UserLabel(std::move(shifted));
}

}  // namespace cpda
