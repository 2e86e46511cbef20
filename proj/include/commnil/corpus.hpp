#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commnil/perm_group.hpp"

namespace commnil {

/// A group as written in a descriptor file or listed in the builtin corpus.
/// Tags are claims ("soluble", "insoluble", "nilpotent") re-verified when
/// the group is loaded.
struct GroupDescriptor {
  std::string id;
  std::string source = "builtin";
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::optional<std::uint64_t> expected_order;
  std::vector<std::string> tags;

  bool has_tag(std::string_view tag) const;
};

struct LoadedGroup {
  GroupDescriptor descriptor;
  PermGroup group;
};

/// Every builtin group, in listing order.
const std::vector<GroupDescriptor> &builtin_corpus();
std::optional<GroupDescriptor> find_builtin(std::string_view id);

/**
 * Parses the JSON descriptor format (see docs/descriptor-format.md).
 * Generators are 1-based image arrays or cycle strings. Throws ParseError
 * with a line and column for malformed text, InvalidPermutation for bad
 * generators.
 */
GroupDescriptor parse_descriptor(std::string_view text, const std::string &source = "file");
/// Canonical descriptor text: image arrays, stable key order.
std::string write_descriptor(const GroupDescriptor &d);

/// Builds the group and checks expected_order (OrderMismatch) and tags.
LoadedGroup load_group(const GroupDescriptor &d);
/// A builtin id, or else a path to a descriptor file.
LoadedGroup load_group(const std::string &path_or_id);

/// Selects builtins by tag ("all", "soluble", "insoluble", "nilpotent") or
/// by a comma-separated list of ids.
std::vector<GroupDescriptor> select_builtins(const std::string &filter);

} // namespace commnil
