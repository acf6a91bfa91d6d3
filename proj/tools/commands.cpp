#include "commands.hpp"

#include <ostream>
#include <sstream>

#include "fundament/decompose.hpp"
#include "fundament/error.hpp"
#include "fundament/lattice.hpp"
#include "fundament/squares.hpp"

namespace fundament::cli {

using nlohmann::json;

namespace {

void need(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) fail(ErrorKind::UsageError, "usage: " + usage);
}

std::string list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

// F_p elements are written as residues; elements of a larger field as
// powers of its least unit-group generator g.
std::string elem_label(const Field& f, FieldElem x) {
  if (f.is_prime()) return std::to_string(x);
  if (x == f.zero()) return "0";
  if (x == f.one()) return "1";
  FieldElem y = f.generator();
  for (std::size_t k = 1; k < f.order(); ++k, y = f.mul(y, f.generator()))
    if (y == x) return k == 1 ? "g" : "g^" + std::to_string(k);
  return std::to_string(x);
}

std::string row_text(const Field& f, const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + elem_label(f, v[i]);
  return s + ")";
}

json row_json(const Field& f, const Vector& v) {
  json row = json::array();
  for (FieldElem x : v) row.push_back(elem_label(f, x));
  return row;
}

json rows_json(const Field& f, const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(row_json(f, m.row(i)));
  return rows;
}

json field_json(const FieldPtr& f) {
  return {{"p", f->characteristic()}, {"q", f->order()}, {"degree", f->degree()}};
}

json cover_summary(const Cover& c) {
  return {{"source_order", c.source()->order()},
          {"target_order", c.target()->order()},
          {"kernel_order", c.kernel().size()},
          {"images", c.hom().table()}};
}

void emit(std::ostream& out, const Options& opts, json doc, const std::string& text) {
  if (opts.json) {
    doc["schema"] = 1;
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- commands

void cmd_fprod(const Workspace& ws, const std::vector<std::string>& args, const Options& opts, std::ostream& out) {
  if (args.empty()) fail(ErrorKind::UsageError, "usage: fprod <cover>...");
  std::vector<Cover> covers;
  for (const auto& a : args) covers.push_back(ws.cover(a));
  FiberProduct fp = fiber_product(covers.front().target(), covers, ws.cap());
  std::string ref = "fprod(";
  for (std::size_t i = 0; i < args.size(); ++i) ref += (i ? "," : "") + args[i];
  ref += ")";
  const bool compact = is_compact_fiber_product(fp);
  const bool fundamental = is_fundamental(fp.structure_map());
  std::vector<std::size_t> axis;
  json axes = json::array();
  for (const auto& k : fp.axis_kernels()) {
    axis.push_back(k.size());
    axes.push_back(subgroup_to_json(k, ref));
  }
  std::ostringstream os;
  os << "carrier order: " << fp.carrier()->order() << '\n'
     << "kernel order: " << fp.structure_map().kernel().size() << '\n'
     << "axis kernel orders: " << list(axis) << '\n'
     << "fundamental: " << bool_text(fundamental) << '\n'
     << "compact: " << bool_text(compact) << '\n';
  emit(out, opts,
       {{"command", "fprod"},
        {"carrier", ref},
        {"order", fp.carrier()->order()},
        {"kernel", subgroup_to_json(fp.structure_map().kernel(), ref)},
        {"axis_kernels", axes},
        {"fundamental", fundamental},
        {"compact", compact}},
       os.str());
}

void cmd_check_square(const Workspace& ws, const std::vector<std::string>& args, const Options& opts,
                      std::ostream& out) {
  need(args, 4, "check-square <top> <left> <bottom> <right>");
  CommSquare sq = make_square(ws.cover(args[0]), ws.cover(args[1]), ws.cover(args[2]), ws.cover(args[3]));
  const bool cart = is_cartesian(sq);
  const bool semi = is_semi_cartesian(sq);
  json doc{{"command", "check-square"}, {"cartesian", cart}, {"semi_cartesian", semi}, {"compact", nullptr}};
  std::ostringstream os;
  os << "semi-cartesian: " << bool_text(semi) << '\n';
  if (cart) {
    const bool compact = is_compact_cartesian(sq);
    doc["compact"] = compact;
    os << "compact: " << bool_text(compact) << '\n';
  }
  os << "cartesian: " << bool_text(cart) << '\n';
  emit(out, opts, doc, os.str());
}

void cmd_h2(const Workspace& ws, const std::vector<std::string>& args, const Options& opts, std::ostream& out) {
  need(args, 2, "h2 <group> <module>");
  GroupPtr g = ws.group_expr(args[0]);
  ModulePtr a = ws.module(args[1]);
  if (!same_group(g, a->group())) fail(ErrorKind::Mismatch, "module '" + args[1] + "' is not over " + args[0]);
  auto space = CohomSpace::make(EndoField::make(a));
  std::ostringstream os;
  os << "F = F_" << space->field()->order() << ", dim_F A = " << space->endo()->f_dim() << '\n'
     << "dim_F Z2 = " << space->dim_cocycles() << ", dim_F B2 = " << space->dim_coboundaries() << '\n'
     << "dim_F = " << space->dim() << '\n';
  emit(out, opts,
       {{"command", "h2"},
        {"field", field_json(space->field())},
        {"dim_cocycles", space->dim_cocycles()},
        {"dim_coboundaries", space->dim_coboundaries()},
        {"dim_F", space->dim()}},
       os.str());
}

void cmd_cocycle(const Workspace& ws, const std::vector<std::string>& args, const Options& opts, std::ostream& out) {
  need(args, 2, "cocycle <cover> <module>");
  Cover pi = ws.cover(args[0]);
  ModulePtr a = ws.module(args[1]);
  if (!same_group(pi.target(), a->group())) fail(ErrorKind::Mismatch, "module is not over the cover target");
  auto space = CohomSpace::make(EndoField::make(a));
  CohomClass c = cocycle_from_extension(pi, space);
  std::ostringstream os;
  os << "F = F_" << space->field()->order() << ", dim_F H2 = " << space->dim() << '\n'
     << "class: " << row_text(*space->field(), c.coords) << '\n'
     << "split: " << bool_text(c.is_zero()) << '\n';
  emit(out, opts,
       {{"command", "cocycle"},
        {"field", field_json(space->field())},
        {"dim_F", space->dim()},
        {"class", row_json(*space->field(), c.coords)},
        {"split", c.is_zero()}},
       os.str());
}

void cmd_fundament(const Workspace& ws, const std::vector<std::string>& args, const Options& opts,
                   std::ostream& out) {
  need(args, 1, "fundament <cover>");
  Cover pi = ws.cover(args[0]);
  Fundament f = fundament(pi);
  const Subgroup& m = f.rho.kernel();
  std::ostringstream os;
  os << "kernel order: " << pi.kernel().size() << '\n'
     << "fundament kernel order: " << m.size() << '\n'
     << "fundament: " << f.fundament.source()->order() << " -> " << f.fundament.target()->order() << '\n'
     << "fundamental: " << bool_text(m.is_trivial()) << '\n';
  emit(out, opts,
       {{"command", "fundament"},
        {"kernel", subgroup_to_json(pi.kernel(), args[0])},
        {"fundament_kernel", subgroup_to_json(m, args[0])},
        {"fundament", cover_summary(f.fundament)},
        {"rho", cover_summary(f.rho)},
        {"fundamental", m.is_trivial()}},
       os.str());
}

void cmd_series(const Workspace& ws, const std::vector<std::string>& args, const Options& opts, std::ostream& out) {
  need(args, 1, "series <cover>");
  Cover pi = ws.cover(args[0]);
  FundamentSeries s = fundament_series(pi);
  std::vector<std::size_t> sizes;
  json kernels = json::array(), stages = json::array();
  for (const auto& k : s.kernels) {
    sizes.push_back(k.size());
    kernels.push_back(subgroup_to_json(k, args[0]));
  }
  std::ostringstream os;
  os << "kernel sizes: " << list(sizes) << '\n';
  for (std::size_t k = 0; k < s.stages.size(); ++k) {
    os << "stage " << k + 1 << ": " << s.stages[k].source()->order() << " -> " << s.stages[k].target()->order()
       << '\n';
    stages.push_back(cover_summary(s.stages[k]));
  }
  emit(out, opts, {{"command", "series"}, {"kernel_sizes", sizes}, {"kernels", kernels}, {"stages", stages}},
       os.str());
}

json invariants_json(const CoverInvariants& inv) {
  json na = json::array(), ab = json::array();
  for (const auto& z : inv.na) na.push_back({{"representative", cover_summary(z.representative)}, {"mult", z.mult}});
  for (const auto& a : inv.ab)
    ab.push_back({{"module_p", a.module->module()->characteristic()},
                  {"module_dim", a.module->module()->dim()},
                  {"field", field_json(a.module->field())},
                  {"h2_dim", a.space->dim()},
                  {"supp", rows_json(*a.module->field(), a.supp)},
                  {"mult", a.mult}});
  return {{"na", na}, {"ab", ab}};
}

void cmd_invariants(const Workspace& ws, const std::vector<std::string>& args, const Options& opts,
                    std::ostream& out) {
  need(args, 1, "invariants <cover>");
  CoverInvariants inv = invariants(ws.cover(args[0]));
  std::ostringstream os;
  if (inv.na.empty() && inv.ab.empty()) os << "no indecomposable quotients\n";
  for (std::size_t i = 0; i < inv.na.size(); ++i)
    os << "non-abelian class " << i << ": kernel order " << inv.na[i].representative.kernel().size()
       << ", mult = " << inv.na[i].mult << '\n';
  for (std::size_t i = 0; i < inv.ab.size(); ++i) {
    const auto& a = inv.ab[i];
    os << "abelian class " << i << ": F_" << a.module->module()->characteristic() << "^"
       << a.module->module()->dim() << ", F = F_" << a.module->order() << ", dim_F H2 = " << a.space->dim()
       << ", mult = " << a.mult << ", supp dim = " << a.supp.rows() << '\n';
    for (std::size_t r = 0; r < a.supp.rows(); ++r) os << "  supp row " << row_text(*a.module->field(), a.supp.row(r)) << '\n';
  }
  json doc = invariants_json(inv);
  doc["command"] = "invariants";
  emit(out, opts, doc, os.str());
}

void decision(const std::string& name, bool result, const Options& opts, std::ostream& out) {
  emit(out, opts, {{"command", name}, {"result", result}}, bool_text(result) + "\n");
}

void cmd_dominates(const Workspace& ws, const std::vector<std::string>& args, const Options& opts,
                   std::ostream& out) {
  need(args, 2, "dominates <upper> <lower>");
  decision("dominates", dominates(ws.cover(args[1]), ws.cover(args[0])), opts, out);
}

void cmd_isomorphic(const Workspace& ws, const std::vector<std::string>& args, const Options& opts,
                    std::ostream& out) {
  need(args, 2, "isomorphic <cover> <cover>");
  decision("isomorphic", isomorphic_fundamental(ws.cover(args[0]), ws.cover(args[1])), opts, out);
}

void cmd_lift(const Workspace& ws, const std::vector<std::string>& args, const Options& opts, std::ostream& out) {
  need(args, 3, "lift <pi: G->G'> <tau over G> <tau' over G'>");
  decision("lift", exists_semicartesian_lift(ws.cover(args[0]), ws.cover(args[1]), ws.cover(args[2])), opts, out);
}

void cmd_decompose(const Workspace& ws, const std::vector<std::string>& args, const Options& opts,
                   std::ostream& out) {
  need(args, 1, "decompose <cover>");
  Decomposition d = decompose_fundamental(ws.cover(args[0]));
  std::ostringstream os;
  os << "factors: " << d.factors.size() << '\n';
  json factors = json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& f = d.factors[i];
    os << "factor " << i << ": " << f.source()->order() << " -> " << f.target()->order() << ", kernel order "
       << f.kernel().size() << (f.kernel().is_abelian() ? " (abelian)" : " (non-abelian)") << '\n';
    factors.push_back(cover_summary(f));
  }
  os << "fiber product order: " << d.product.carrier()->order() << '\n';
  emit(out, opts,
       {{"command", "decompose"},
        {"factors", factors},
        {"iso", hom_to_json(d.iso, args[0], "fprod of factors")}},
       os.str());
}

using Handler = void (*)(const Workspace&, const std::vector<std::string>&, const Options&, std::ostream&);

const std::vector<std::pair<std::string, Handler>>& table() {
  static const std::vector<std::pair<std::string, Handler>> t = {
      {"fprod", cmd_fprod},           {"check-square", cmd_check_square}, {"h2", cmd_h2},
      {"cocycle", cmd_cocycle},       {"fundament", cmd_fundament},       {"series", cmd_series},
      {"invariants", cmd_invariants}, {"dominates", cmd_dominates},       {"isomorphic", cmd_isomorphic},
      {"lift", cmd_lift},             {"decompose", cmd_decompose},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

void run_command(const Workspace& ws, const std::string& command, const std::vector<std::string>& args,
                 const Options& opts, std::ostream& out) {
  for (const auto& [name, handler] : table())
    if (name == command) return handler(ws, args, opts, out);
  fail(ErrorKind::UsageError, "unknown command '" + command + "'");
}

json subgroup_to_json(const Subgroup& s, const std::string& group_ref) {
  return {{"group", group_ref}, {"order", s.size()}, {"elements", s.elements()}};
}

Subgroup subgroup_from_json(const Workspace& ws, const json& j) {
  GroupPtr g = ws.group_expr(j.at("group").get<std::string>());
  return Subgroup::checked(g, j.at("elements").get<std::vector<Elem>>());
}

json hom_to_json(const GroupHom& f, const std::string& source_ref, const std::string& target_ref) {
  return {{"source", source_ref}, {"target", target_ref}, {"images", f.table()}};
}

GroupHom hom_from_json(const Workspace& ws, const json& j) {
  GroupPtr s = ws.group_expr(j.at("source").get<std::string>());
  GroupPtr t = ws.group_expr(j.at("target").get<std::string>());
  return GroupHom(s, t, j.at("images").get<std::vector<Elem>>());
}

}  // namespace fundament::cli
