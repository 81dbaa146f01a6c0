#include <algorithm>
#include <set>
#include <system_error>

#include <fmt/format.h>

#include "pythtree/error.hpp"
#include "pythtree/hierarchy.hpp"

namespace fs = std::filesystem;

namespace pythtree {
namespace {

class Scanner {
 public:
  explicit Scanner(ScanOptions options) : options_(options) {}

  ScanResult run(const fs::path& root) {
    std::error_code ec;
    const auto status = fs::status(root, ec);
    if (ec || !fs::exists(status)) {
      throw Error(ErrorCode::kPathNotFound, root.string());
    }
    std::string label = root.filename().string();
    if (label.empty() || label == ".") label = fs::absolute(root, ec).lexically_normal().string();

    if (fs::is_directory(status)) {
      // Probe readability up front: an unreadable root is fatal, unlike
      // unreadable entries further down.
      fs::directory_iterator probe(root, ec);
      if (ec) throw Error(ErrorCode::kPermissionDenied, fmt::format("{}: {}", root.string(), ec.message()));
    }
    visit(root, label, std::nullopt, status);
    return ScanResult{Hierarchy(std::move(nodes_)), std::move(warnings_)};
  }

 private:
  // Returns the summed file weight below `path` (the file's own weight for
  // leaves). Directories store max(1, sum) on their node.
  double visit(const fs::path& path, std::string label, std::optional<NodeId> parent,
               const fs::file_status& status) {
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(NodeRecord{.label = std::move(label), .parent = parent});
    if (parent) nodes_[*parent].children.push_back(id);

    if (fs::is_directory(status)) {
      const double files = visit_directory(path, id);
      nodes_[id].weight = std::max(files, 1.0);
      return files;
    }
    std::error_code ec;
    const auto size = fs::is_regular_file(status) ? fs::file_size(path, ec) : 0;
    if (ec) warn(path, ec);
    // Empty files (and non-regular leaves) still need a positive weight.
    const double weight = ec ? 1.0 : std::max(static_cast<double>(size), 1.0);
    nodes_[id].weight = weight;
    return weight;
  }

  double visit_directory(const fs::path& path, NodeId id) {
    std::error_code ec;
    if (options_.follow_symlinks) {
      const auto canonical = fs::canonical(path, ec);
      if (!ec && !active_.insert(canonical).second) {
        warnings_.push_back(fmt::format("{}: symlink loop skipped", path.string()));
        return 0.0;
      }
    }

    struct Entry {
      std::string name;
      fs::path path;
      fs::file_status status;
    };
    std::vector<Entry> entries;
    fs::directory_iterator it(path, ec);
    if (ec) {
      warn(path, ec);
    } else {
      for (const fs::directory_iterator end; it != end; it.increment(ec)) {
        if (ec) {
          warn(path, ec);
          break;
        }
        const auto& entry = *it;
        std::error_code status_ec;
        auto status = options_.follow_symlinks ? entry.status(status_ec) : entry.symlink_status(status_ec);
        if (status_ec) {
          warn(entry.path(), status_ec);
          continue;
        }
        entries.push_back({entry.path().filename().string(), entry.path(), status});
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.name < b.name; });

    double total = 0.0;
    for (auto& e : entries) total += visit(e.path, std::move(e.name), id, e.status);

    if (options_.follow_symlinks) active_.erase(fs::canonical(path, ec));
    return total;
  }

  void warn(const fs::path& path, const std::error_code& ec) {
    warnings_.push_back(fmt::format("{}: {}", path.string(), ec.message()));
  }

  ScanOptions options_;
  std::vector<NodeRecord> nodes_;
  std::vector<std::string> warnings_;
  std::set<fs::path> active_;
};

}  // namespace

ScanResult scan_filesystem(const fs::path& path, ScanOptions options) {
  return Scanner(options).run(path);
}

}  // namespace pythtree
