#include "workspace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fundament/error.hpp"

namespace fundament::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'; }

struct Line {
  std::string source;
  std::size_t number = 0;
  std::string text;

  [[noreturn]] void error(std::size_t col, const std::string& msg, ErrorKind kind = ErrorKind::ParseError) const {
    fail(kind, source + ":" + std::to_string(number) + ":" + std::to_string(col + 1) + ": " + msg);
  }
  std::string where() const { return source + ":" + std::to_string(number) + ": "; }
};

// Small cursor over one line.
struct Cursor {
  const Line& line;
  std::size_t pos = 0;

  void skip() {
    while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= line.text.size();
  }
  std::string name(const char* what) {
    skip();
    std::size_t start = pos;
    while (pos < line.text.size() && is_name_char(line.text[pos])) ++pos;
    if (start == pos) line.error(start, std::string("expected ") + what);
    return line.text.substr(start, pos - start);
  }
  void expect(std::string_view token) {
    skip();
    if (line.text.compare(pos, token.size(), token) != 0) line.error(pos, "expected '" + std::string(token) + "'");
    pos += token.size();
  }
  std::string rest() {
    skip();
    std::string r = line.text.substr(pos);
    pos = line.text.size();
    return r;
  }
  long long integer(const char* what) {
    skip();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(line.text.data() + pos, line.text.data() + line.text.size(), v);
    if (ec != std::errc()) line.error(pos, std::string("expected ") + what);
    pos = static_cast<std::size_t>(ptr - line.text.data());
    return v;
  }
};

Elem eval_word(const FiniteGroup& g, const std::string& word, const Line& line, std::size_t col) {
  Elem acc = g.identity();
  std::size_t i = 0;
  const std::string& w = word;
  while (i < w.size()) {
    if (std::isspace(static_cast<unsigned char>(w[i])) || w[i] == '*') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < w.size() && is_name_char(w[i])) ++i;
    if (start == i) line.error(col + start, "unexpected character in word");
    std::string token = w.substr(start, i - start);
    long long exponent = 1;
    if (i < w.size() && w[i] == '^') {
      ++i;
      auto [ptr, ec] = std::from_chars(w.data() + i, w.data() + w.size(), exponent);
      if (ec != std::errc()) line.error(col + i, "expected exponent");
      i = static_cast<std::size_t>(ptr - w.data());
    }
    Elem x;
    if (token == "1" || token == "id") {
      x = g.identity();
    } else {
      const auto& labels = g.generator_labels();
      auto it = std::find(labels.begin(), labels.end(), token);
      if (it == labels.end())
        line.error(col + start, "unknown generator '" + token + "' of " + g.name(), ErrorKind::UnknownReference);
      x = g.generators()[static_cast<std::size_t>(it - labels.begin())];
    }
    acc = g.mul(acc, g.pow(x, exponent));
  }
  return acc;
}

Matrix parse_matrix(const FieldPtr& f, std::size_t dim, const std::string& text, const Line& line, std::size_t col) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') line.error(col, "expected a matrix in brackets");
  std::vector<Vector> rows;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string row;
  while (std::getline(ss, row, ';')) {
    Vector v;
    std::string cell;
    for (char& c : row)
      if (c == ',') c = ' ';
    std::stringstream rs(row);
    while (rs >> cell) {
      long long x = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), x);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) line.error(col, "bad matrix entry '" + cell + "'");
      v.push_back(f->from_int(x));
    }
    if (v.size() != dim) line.error(col, "matrix row has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
    rows.push_back(std::move(v));
  }
  if (rows.size() != dim) line.error(col, "matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
  return Matrix::from_rows(f, dim, rows);
}

// Re-raises library errors with the location of the block that caused them.
template <class F>
auto located(const Line& at, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnknownReference) throw;
    fail(e.kind(), at.where() + e.what());
  }
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

void Workspace::declare(const std::string& name, const std::string& where) {
  if (groups_.count(name) || homs_.count(name) || modules_.count(name) || fprods_.count(name))
    fail(ErrorKind::ParseError, where + "duplicate name '" + name + "'");
  order_.push_back(name);
}

void Workspace::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  parse_text(ss.str(), path);
}

void Workspace::parse_text(std::string_view text, const std::string& source) {
  std::vector<Line> lines;
  {
    std::size_t n = 0, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string t(text.substr(start, end - start));
      if (!t.empty() && t.back() == '\r') t.pop_back();
      lines.push_back(Line{source, ++n, t});
      start = end + 1;
    }
  }

  std::size_t i = 0;
  auto is_blank = [&](const Line& l) { return trim(l.text).empty(); };
  auto is_comment = [&](const Line& l) { return trim(l.text).rfind('#', 0) == 0; };
  // Body lines of the block starting after `i`, up to a blank line.
  auto body = [&]() {
    std::vector<const Line*> out;
    while (i < lines.size() && !is_blank(lines[i])) {
      if (!is_comment(lines[i])) out.push_back(&lines[i]);
      ++i;
    }
    return out;
  };

  while (i < lines.size()) {
    const Line& head = lines[i];
    if (is_blank(head) || is_comment(head)) {
      ++i;
      continue;
    }
    Cursor c{head};
    std::string kind = c.name("a declaration keyword");
    ++i;

    if (kind == "group") {
      std::string name = c.name("group name");
      if (!c.done()) head.error(c.pos, "unexpected text after group name");
      std::vector<Permutation> perms;
      std::vector<std::string> labels;
      for (const Line* l : body()) {
        Cursor b{*l};
        std::string kw = b.name("'gen'");
        if (kw != "gen") l->error(0, "expected 'gen <label> = <cycles>'");
        std::string label = b.name("generator label");
        if (std::find(labels.begin(), labels.end(), label) != labels.end()) l->error(0, "duplicate generator '" + label + "'");
        b.expect("=");
        std::size_t col = b.pos;
        std::string cycles = b.rest();
        try {
          perms.push_back(parse_cycles(cycles));
        } catch (const Error& e) {
          l->error(col, e.what());
        }
        labels.push_back(label);
      }
      declare(name, head.where());
      groups_[name] = located(head, [&] { return build_group(perms, cap_, labels, name); });
    } else if (kind == "hom") {
      std::string name = c.name("hom name");
      c.expect(":");
      std::size_t scol = c.pos;
      std::string src = c.name("source group");
      c.expect("->");
      std::size_t dcol = c.pos;
      std::string dst = c.name("target group");
      if (!groups_.count(src)) head.error(scol, "unknown group '" + src + "'", ErrorKind::UnknownReference);
      if (!groups_.count(dst)) head.error(dcol, "unknown group '" + trim(dst) + "'", ErrorKind::UnknownReference);
      const auto& s = groups_[src];
      const auto& t = groups_[dst];
      std::vector<Elem> images(s->generators().size());
      std::vector<char> given(images.size(), 0);
      for (const Line* l : body()) {
        Cursor b{*l};
        std::string label = b.name("generator label");
        const auto& labels = s->generator_labels();
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) l->error(0, "unknown generator '" + label + "' of " + src, ErrorKind::UnknownReference);
        b.expect("->");
        std::size_t col = b.pos;
        auto k = static_cast<std::size_t>(it - labels.begin());
        images[k] = eval_word(*t, b.rest(), *l, col);
        given[k] = 1;
      }
      for (std::size_t k = 0; k < given.size(); ++k)
        if (!given[k]) head.error(0, "no image for generator '" + s->generator_labels()[k] + "'");
      declare(name, head.where());
      homs_[name] = located(head, [&] { return GroupHom::from_generator_images(s, t, images); });
    } else if (kind == "module") {
      std::string name = c.name("module name");
      c.expect(":");
      std::size_t gcol = c.pos;
      std::string gname = c.name("group");
      if (!groups_.count(gname)) head.error(gcol, "unknown group '" + gname + "'", ErrorKind::UnknownReference);
      c.expect("p=");
      long long p = c.integer("characteristic");
      c.expect("dim=");
      long long dim = c.integer("dimension");
      if (!is_prime_number(p)) head.error(0, "p must be prime");
      if (dim < 0 || dim > 16) head.error(0, "dimension out of range");
      const auto& g = groups_[gname];
      auto f = Field::prime(static_cast<int>(p));
      std::vector<Matrix> mats(g->generators().size());
      std::vector<char> given(mats.size(), 0);
      for (const Line* l : body()) {
        Cursor b{*l};
        std::string label = b.name("generator label");
        const auto& labels = g->generator_labels();
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) l->error(0, "unknown generator '" + label + "' of " + gname, ErrorKind::UnknownReference);
        b.expect("->");
        std::size_t col = b.pos;
        auto k = static_cast<std::size_t>(it - labels.begin());
        mats[k] = parse_matrix(f, static_cast<std::size_t>(dim), b.rest(), *l, col);
        given[k] = 1;
      }
      for (std::size_t k = 0; k < given.size(); ++k)
        if (!given[k]) head.error(0, "no matrix for generator '" + g->generator_labels()[k] + "'");
      declare(name, head.where());
      modules_[name] = located(head, [&] {
        return GModule::from_generators(g, static_cast<int>(p), static_cast<std::size_t>(dim), mats);
      });
    } else if (kind == "fprod") {
      std::string name = c.name("fiber product name");
      c.expect("=");
      auto parts = split_top_level(strip_spaces(c.rest()));
      auto fp = located(head, [&] { return build_fprod(parts); });
      declare(name, head.where());
      fprods_.emplace(name, std::move(fp));
    } else {
      head.error(0, "unknown declaration '" + kind + "'");
    }
  }
}

GroupPtr Workspace::group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) fail(ErrorKind::UnknownReference, "unknown group '" + name + "'");
  return it->second;
}

const GroupHom& Workspace::hom(const std::string& name) const {
  auto it = homs_.find(name);
  if (it == homs_.end()) fail(ErrorKind::UnknownReference, "unknown hom '" + name + "'");
  return it->second;
}

ModulePtr Workspace::module(const std::string& name) const {
  auto it = modules_.find(name);
  if (it == modules_.end()) fail(ErrorKind::UnknownReference, "unknown module '" + name + "'");
  return it->second;
}

const FiberProduct& Workspace::fprod(const std::string& name) const {
  auto it = fprods_.find(name);
  if (it == fprods_.end()) fail(ErrorKind::UnknownReference, "unknown fiber product '" + name + "'");
  return it->second;
}

FiberProduct Workspace::build_fprod(const std::vector<std::string>& parts) const {
  if (parts.empty() || (parts.size() == 1 && parts[0].empty()))
    fail(ErrorKind::UsageError, "fprod needs at least one cover");
  std::vector<Cover> covers;
  for (const auto& p : parts) covers.push_back(cover(p));
  GroupPtr base = covers.front().target();
  return fiber_product(base, std::move(covers), cap_);
}

Cover Workspace::cover(const std::string& expr_in) const {
  const std::string expr = strip_spaces(expr_in);
  if (expr.rfind("fprod(", 0) == 0 && expr.back() == ')')
    return build_fprod(split_top_level(expr.substr(6, expr.size() - 7))).structure_map();
  if (expr.rfind("id(", 0) == 0 && expr.back() == ')') return identity_cover(group(expr.substr(3, expr.size() - 4)));
  if (auto arrow = expr.find("->"); arrow != std::string::npos) {
    if (expr.substr(arrow + 2) != "1") fail(ErrorKind::UsageError, "only G->1 is accepted as an arrow expression");
    return trivial_cover(group(expr.substr(0, arrow)));
  }
  if (auto it = homs_.find(expr); it != homs_.end()) return Cover(it->second);
  if (auto it = fprods_.find(expr); it != fprods_.end()) return it->second.structure_map();
  if (groups_.count(expr)) fail(ErrorKind::UsageError, "'" + expr + "' is a group, not a cover");
  fail(ErrorKind::UnknownReference, "unknown cover '" + expr + "'");
}

GroupPtr Workspace::group_expr(const std::string& expr) const {
  const std::string e = strip_spaces(expr);
  if (auto it = groups_.find(e); it != groups_.end()) return it->second;
  if (auto it = fprods_.find(e); it != fprods_.end()) return it->second.carrier();
  if (auto it = homs_.find(e); it != homs_.end()) return it->second.source();
  return cover(e).source();
}

Workspace parse_workspace(const std::vector<std::string>& files, std::size_t cap) {
  Workspace ws(cap);
  for (const auto& f : files) ws.parse_file(f);
  return ws;
}

}  // namespace fundament::cli
