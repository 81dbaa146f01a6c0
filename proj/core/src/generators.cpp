#include "pythtree/generators.hpp"

#include <random>
#include <string>

namespace pythtree::generators {
namespace {

class Builder {
 public:
  NodeId add(std::optional<NodeId> parent) {
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(NodeRecord{.label = "n" + std::to_string(id), .parent = parent});
    if (parent) nodes_[*parent].children.push_back(id);
    return id;
  }

  Hierarchy finish() { return assign_subtree_weights(Hierarchy(std::move(nodes_))); }

 private:
  std::vector<NodeRecord> nodes_;
};

void grow_complete(Builder& b, NodeId parent, int arity, int remaining) {
  if (remaining == 0) return;
  for (int i = 0; i < arity; ++i) grow_complete(b, b.add(parent), arity, remaining - 1);
}

void grow_self_similar(Builder& b, NodeId node, int depth) {
  for (const int d : {depth - 2, depth - 1, depth - 2}) {
    if (d >= 0) grow_self_similar(b, b.add(node), d);
  }
}

}  // namespace

Hierarchy complete_tree(int arity, int depth) {
  Builder b;
  grow_complete(b, b.add(std::nullopt), arity, depth);
  return b.finish();
}

Hierarchy chain_with_siblings(int depth) {
  Builder b;
  NodeId spine = b.add(std::nullopt);
  for (int i = 0; i < depth; ++i) {
    const NodeId next = b.add(spine);
    b.add(spine);
    spine = next;
  }
  return b.finish();
}

Hierarchy fan_out(int leaves) {
  Builder b;
  const NodeId root = b.add(std::nullopt);
  for (int i = 0; i < leaves; ++i) b.add(root);
  return b.finish();
}

Hierarchy self_similar(int depth) {
  Builder b;
  grow_self_similar(b, b.add(std::nullopt), depth);
  return b.finish();
}

Hierarchy random_tree(std::size_t n, std::uint64_t seed) {
  // Raw engine output keeps the shape identical across standard libraries.
  std::mt19937_64 rng(seed);
  Builder b;
  b.add(std::nullopt);
  for (std::size_t i = 1; i < n; ++i) b.add(static_cast<NodeId>(rng() % i));
  return b.finish();
}

}  // namespace pythtree::generators
