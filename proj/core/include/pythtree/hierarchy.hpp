#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pythtree {

using NodeId = std::uint32_t;

struct NodeRecord {
  std::string label;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  // 0 marks "no explicit weight"; assign_subtree_weights replaces it.
  double weight = 0.0;
  int depth = 0;
};

/// Rooted tree with per-node weights. Immutable once constructed; node ids are
/// dense indices into nodes().
class Hierarchy {
 public:
  /// Validates parent/children links and derives depths. Throws Error with
  /// kMultipleRoots, kCycleDetected, kDuplicateNodeId or kNonPositiveWeight.
  explicit Hierarchy(std::vector<NodeRecord> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return root_; }
  int max_depth() const noexcept { return max_depth_; }

  const NodeRecord& node(NodeId id) const { return nodes_.at(id); }
  std::span<const NodeRecord> nodes() const noexcept { return nodes_; }

  /// Root first, then level by level; siblings keep their stored order.
  std::span<const NodeId> bfs_order() const noexcept { return bfs_; }

  bool is_ancestor_or_self(NodeId ancestor, NodeId node) const;

  /// Copy with replaced weights (one per node, all > 0).
  Hierarchy with_weights(std::span<const double> weights) const;

 private:
  std::vector<NodeRecord> nodes_;
  std::vector<NodeId> bfs_;
  NodeId root_ = 0;
  int max_depth_ = 0;
};

enum class InputFormat { kCsvEdges, kJson };

/// Parses a hierarchy from text. CSV: `parent,child[,weight]` per line.
/// JSON: nested `{"label", "weight"?, "children"?}` objects.
Hierarchy load_hierarchy(std::string_view source, InputFormat format);
Hierarchy load_hierarchy(std::istream& in, InputFormat format);

struct ScanOptions {
  bool follow_symlinks = false;
};

struct ScanResult {
  Hierarchy hierarchy;
  std::vector<std::string> warnings;
};

/// Directories become internal nodes, files leaves weighted by size in bytes.
ScanResult scan_filesystem(const std::filesystem::path& path, ScanOptions options = {});

enum class WeightMode {
  kSubtree,   // every node weighted by its subtree size
  kExplicit,  // keep positive input weights, fill sentinels with subtree size
};

Hierarchy assign_subtree_weights(const Hierarchy& h, WeightMode mode = WeightMode::kSubtree);

/// Number of nodes in each node's subtree, itself included.
std::vector<std::size_t> subtree_sizes(const Hierarchy& h);

/// Serializes to the JSON input format; stable across runs.
std::string to_json(const Hierarchy& h);

}  // namespace pythtree
