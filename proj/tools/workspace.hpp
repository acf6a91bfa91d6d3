#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fundament/fiber_product.hpp"
#include "fundament/module.hpp"

namespace fundament::cli {

// Named groups, homomorphisms, modules and fiber products read from text
// files.  The format, one block per object, blocks separated by blank lines:
//
//   group C4
//   gen a = (1 2 3 4)
//
//   hom eta1 : C4 -> C2
//   a -> t
//
//   module F2triv : C2 p=2 dim=1
//   t -> [1]
//
//   fprod P = eta0, eta1
//
// Lines starting with '#' are comments.
class Workspace {
 public:
  explicit Workspace(std::size_t cap = kDefaultOrderCap) : cap_(cap) {}

  void parse_file(const std::string& path);
  void parse_text(std::string_view text, const std::string& source = "<input>");

  std::size_t cap() const noexcept { return cap_; }
  std::size_t object_count() const noexcept { return order_.size(); }
  const std::vector<std::string>& names() const noexcept { return order_; }

  bool has_group(const std::string& name) const { return groups_.count(name) > 0; }
  GroupPtr group(const std::string& name) const;
  const GroupHom& hom(const std::string& name) const;
  ModulePtr module(const std::string& name) const;
  const FiberProduct& fprod(const std::string& name) const;

  // A hom name (must be onto), a named fiber product (its structure map),
  // fprod(e1,e2,...), G->1 or id(G).  Whitespace is ignored.
  Cover cover(const std::string& expr) const;
  // A group name, or a cover expression standing for its source.
  GroupPtr group_expr(const std::string& expr) const;

 private:
  void declare(const std::string& name, const std::string& where);
  FiberProduct build_fprod(const std::vector<std::string>& parts) const;

  std::size_t cap_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, GroupHom> homs_;
  std::map<std::string, ModulePtr> modules_;
  std::map<std::string, FiberProduct> fprods_;
  std::vector<std::string> order_;
};

Workspace parse_workspace(const std::vector<std::string>& files, std::size_t cap = kDefaultOrderCap);

// Splits a comma-separated list at top level (parentheses nest).
std::vector<std::string> split_top_level(std::string_view s);

}  // namespace fundament::cli
