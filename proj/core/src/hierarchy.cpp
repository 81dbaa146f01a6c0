#include "pythtree/hierarchy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <istream>
#include <iterator>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>
#include <json.hpp>

#include "pythtree/error.hpp"

namespace pythtree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDuplicateNodeId: return "DuplicateNodeId";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kPathNotFound: return "PathNotFound";
    case ErrorCode::kPermissionDenied: return "PermissionDenied";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kDegenerateChord: return "DegenerateChord";
    case ErrorCode::kInsufficientData: return "InsufficientData";
  }
  return "Unknown";
}

Hierarchy::Hierarchy(std::vector<NodeRecord> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) {
    throw Error(ErrorCode::kMalformedInput, "hierarchy has no nodes");
  }
  const auto n = static_cast<NodeId>(nodes_.size());

  std::optional<NodeId> root;
  for (NodeId id = 0; id < n; ++id) {
    const auto& rec = nodes_[id];
    if (!(rec.weight >= 0.0) || !std::isfinite(rec.weight)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  fmt::format("node '{}' has weight {}", rec.label, rec.weight));
    }
    if (!rec.parent) {
      if (root) {
        throw Error(ErrorCode::kMultipleRoots,
                    fmt::format("'{}' and '{}' both lack a parent", nodes_[*root].label, rec.label));
      }
      root = id;
    } else if (*rec.parent >= n) {
      throw Error(ErrorCode::kMalformedInput, fmt::format("node '{}' has unknown parent", rec.label));
    }
  }
  if (!root) {
    throw Error(ErrorCode::kCycleDetected, "every node has a parent");
  }
  root_ = *root;

  // Children lists must mirror parent links exactly once.
  std::vector<int> listed(n, 0);
  for (NodeId id = 0; id < n; ++id) {
    for (NodeId child : nodes_[id].children) {
      if (child >= n || nodes_[child].parent != id) {
        throw Error(ErrorCode::kMalformedInput,
                    fmt::format("inconsistent child link under '{}'", nodes_[id].label));
      }
      if (++listed[child] > 1) {
        throw Error(ErrorCode::kDuplicateNodeId,
                    fmt::format("node '{}' listed twice as a child", nodes_[child].label));
      }
    }
  }
  for (NodeId id = 0; id < n; ++id) {
    if (nodes_[id].parent && listed[id] == 0) {
      throw Error(ErrorCode::kMalformedInput,
                  fmt::format("node '{}' missing from its parent's children", nodes_[id].label));
    }
  }

  bfs_.reserve(n);
  bfs_.push_back(root_);
  nodes_[root_].depth = 0;
  for (std::size_t i = 0; i < bfs_.size(); ++i) {
    const NodeId id = bfs_[i];
    for (NodeId child : nodes_[id].children) {
      nodes_[child].depth = nodes_[id].depth + 1;
      max_depth_ = std::max(max_depth_, nodes_[child].depth);
      bfs_.push_back(child);
    }
  }
  if (bfs_.size() != n) {
    throw Error(ErrorCode::kCycleDetected,
                fmt::format("{} node(s) unreachable from root '{}'", n - bfs_.size(),
                            nodes_[root_].label));
  }
}

bool Hierarchy::is_ancestor_or_self(NodeId ancestor, NodeId node) const {
  if (nodes_.at(ancestor).depth > nodes_.at(node).depth) return false;
  while (nodes_[node].depth > nodes_[ancestor].depth) node = *nodes_[node].parent;
  return node == ancestor;
}

Hierarchy Hierarchy::with_weights(std::span<const double> weights) const {
  if (weights.size() != nodes_.size()) {
    throw Error(ErrorCode::kMalformedInput, "weight count does not match node count");
  }
  auto copy = *this;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  fmt::format("node '{}' has weight {}", nodes_[i].label, weights[i]));
    }
    copy.nodes_[i].weight = weights[i];
  }
  return copy;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_weight(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::kMalformedInput,
                fmt::format("line {}: invalid weight '{}'", line_no, text));
  }
  if (value <= 0.0) {
    throw Error(ErrorCode::kNonPositiveWeight,
                fmt::format("line {}: weight {} is not positive", line_no, value));
  }
  return value;
}

Hierarchy parse_csv(std::string_view source) {
  std::vector<NodeRecord> nodes;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<NodeId>(nodes.size()));
    if (inserted) nodes.push_back(NodeRecord{.label = std::string(label)});
    return it->second;
  };

  std::size_t line_no = 0;
  while (!source.empty()) {
    ++line_no;
    const auto eol = source.find('\n');
    const auto line = trim(source.substr(0, eol));
    source = eol == std::string_view::npos ? std::string_view{} : source.substr(eol + 1);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::kMalformedInput,
                  fmt::format("line {}: expected 'parent,child[,weight]'", line_no));
    }
    if (fields[0] == fields[1]) {
      throw Error(ErrorCode::kCycleDetected,
                  fmt::format("line {}: '{}' is its own parent", line_no, fields[0]));
    }

    const NodeId parent = intern(fields[0]);
    const NodeId child = intern(fields[1]);
    if (nodes[child].parent) {
      throw Error(ErrorCode::kDuplicateNodeId,
                  fmt::format("line {}: '{}' already has a parent", line_no, fields[1]));
    }
    nodes[child].parent = parent;
    nodes[parent].children.push_back(child);
    if (fields.size() == 3) nodes[child].weight = parse_weight(fields[2], line_no);
  }
  if (nodes.empty()) throw Error(ErrorCode::kMalformedInput, "no edges in CSV input");
  return Hierarchy(std::move(nodes));
}

void append_json_node(const nlohmann::json& j, std::optional<NodeId> parent,
                      std::vector<NodeRecord>& nodes) {
  if (!j.is_object()) throw Error(ErrorCode::kMalformedInput, "node is not a JSON object");
  const auto label_it = j.find("label");
  if (label_it == j.end() || !label_it->is_string()) {
    throw Error(ErrorCode::kMalformedInput, "node without string 'label'");
  }
  NodeRecord rec{.label = label_it->get<std::string>(), .parent = parent};
  if (const auto w = j.find("weight"); w != j.end()) {
    if (!w->is_number()) throw Error(ErrorCode::kMalformedInput, "'weight' must be a number");
    rec.weight = w->get<double>();
    if (!(rec.weight > 0.0)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  fmt::format("node '{}' has weight {}", rec.label, rec.weight));
    }
  }
  const auto id = static_cast<NodeId>(nodes.size());
  nodes.push_back(std::move(rec));
  if (parent) nodes[*parent].children.push_back(id);

  if (const auto c = j.find("children"); c != j.end()) {
    if (!c->is_array()) throw Error(ErrorCode::kMalformedInput, "'children' must be an array");
    for (const auto& child : *c) append_json_node(child, id, nodes);
  }
}

Hierarchy parse_json(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
  std::vector<NodeRecord> nodes;
  append_json_node(doc, std::nullopt, nodes);
  return Hierarchy(std::move(nodes));
}

}  // namespace

Hierarchy load_hierarchy(std::string_view source, InputFormat format) {
  switch (format) {
    case InputFormat::kCsvEdges: return parse_csv(source);
    case InputFormat::kJson: return parse_json(source);
  }
  throw Error(ErrorCode::kMalformedInput, "unknown input format");
}

Hierarchy load_hierarchy(std::istream& in, InputFormat format) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return load_hierarchy(text, format);
}

std::vector<std::size_t> subtree_sizes(const Hierarchy& h) {
  std::vector<std::size_t> sizes(h.size(), 1);
  const auto order = h.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (const auto parent = h.node(*it).parent) sizes[*parent] += sizes[*it];
  }
  return sizes;
}

Hierarchy assign_subtree_weights(const Hierarchy& h, WeightMode mode) {
  const auto sizes = subtree_sizes(h);
  std::vector<double> weights(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double given = h.nodes()[i].weight;
    weights[i] = (mode == WeightMode::kExplicit && given > 0.0) ? given
                                                                 : static_cast<double>(sizes[i]);
  }
  return h.with_weights(weights);
}

namespace {

nlohmann::ordered_json node_to_json(const Hierarchy& h, NodeId id) {
  const auto& rec = h.node(id);
  nlohmann::ordered_json j;
  j["label"] = rec.label;
  if (rec.weight > 0.0) j["weight"] = rec.weight;
  if (!rec.children.empty()) {
    auto& children = j["children"] = nlohmann::ordered_json::array();
    for (NodeId child : rec.children) children.push_back(node_to_json(h, child));
  }
  return j;
}

}  // namespace

std::string to_json(const Hierarchy& h) { return node_to_json(h, h.root()).dump(); }

}  // namespace pythtree
