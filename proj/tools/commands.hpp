#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "workspace.hpp"

namespace fundament::cli {

struct Options {
  bool json = false;
  std::size_t max_order = kDefaultOrderCap;
  std::optional<std::uint64_t> seed;
};

const std::vector<std::string>& command_names();

// Runs one command and writes its report.  Library errors propagate.
void run_command(const Workspace& ws, const std::string& command, const std::vector<std::string>& args,
                 const Options& opts, std::ostream& out);

// JSON encodings that can be read back against a workspace.  Groups are
// referred to by a group name or by a cover expression (its source).
nlohmann::json subgroup_to_json(const Subgroup& s, const std::string& group_ref);
Subgroup subgroup_from_json(const Workspace& ws, const nlohmann::json& j);
nlohmann::json hom_to_json(const GroupHom& f, const std::string& source_ref, const std::string& target_ref);
GroupHom hom_from_json(const Workspace& ws, const nlohmann::json& j);

}  // namespace fundament::cli
