#include "fundament/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fundament/error.hpp"

namespace fundament {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

std::size_t compute_order(const std::vector<Elem>& table, std::size_t n, Elem a) {
  std::size_t k = 1;
  Elem x = a;
  while (x != 0) {
    x = table[static_cast<std::size_t>(x) * n + a];
    ++k;
  }
  return k;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::size_t max_point = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  if (i < text.size() && text.substr(i) == "id") return [&] {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    return p;
  }();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::MalformedPermutation, "expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail(ErrorKind::MalformedPermutation, "unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      unsigned long v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc() || v == 0)
        fail(ErrorKind::MalformedPermutation, "bad point in \"" + std::string(text) + "\"");
      i = static_cast<std::size_t>(ptr - text.data());
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      max_point = std::max<std::size_t>(max_point, v);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  Permutation p(std::max(max_point, degree));
  std::iota(p.begin(), p.end(), 0u);
  std::vector<char> seen(p.size(), 0);
  for (const auto& c : cycles) {
    for (auto pt : c) {
      if (seen[pt]) fail(ErrorKind::MalformedPermutation, "point repeated in \"" + std::string(text) + "\"");
      seen[pt] = 1;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    os << '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      x = p[x];
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

GroupPtr FiniteGroup::from_table(std::size_t order, std::vector<Elem> table, std::vector<Elem> generators,
                                 std::vector<std::string> labels, std::string name) {
  if (order == 0 || table.size() != order * order)
    fail(ErrorKind::InvalidArgument, "multiplication table has the wrong size");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = order;
  g->table_ = std::move(table);
  for (Elem x = 0; x < order; ++x) {
    if (g->mul(0, x) != x || g->mul(x, 0) != x)
      fail(ErrorKind::InvalidArgument, "element 0 is not the identity");
  }
  g->inverse_.assign(order, 0);
  for (Elem x = 0; x < order; ++x) {
    bool found = false;
    for (Elem y = 0; y < order; ++y) {
      if (g->mul(x, y) == 0) {
        if (g->mul(y, x) != 0) fail(ErrorKind::InvalidArgument, "one-sided inverse in table");
        g->inverse_[x] = y;
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorKind::InvalidArgument, "element without inverse in table");
  }
  g->element_order_.resize(order);
  for (Elem x = 0; x < order; ++x) g->element_order_[x] = compute_order(g->table_, order, x);

  g->abelian_ = true;
  for (Elem x = 0; x < order && g->abelian_; ++x)
    for (Elem y = x + 1; y < order; ++y)
      if (g->mul(x, y) != g->mul(y, x)) {
        g->abelian_ = false;
        break;
      }

  if (generators.empty() && order > 1) {
    std::vector<Elem> all(order);
    std::iota(all.begin(), all.end(), 0u);
    generators = small_generating_set(*g, all);
  }
  g->generators_ = std::move(generators);
  if (labels.size() != g->generators_.size()) {
    labels.clear();
    for (std::size_t i = 0; i < g->generators_.size(); ++i) labels.push_back("g" + std::to_string(i));
  }
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  return g;
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  auto n = static_cast<long long>(element_order_[a]);
  k %= n;
  if (k < 0) k += n;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_associative() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) {
      Elem ab = mul(a, b);
      for (Elem c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

const std::vector<ElementSet>& FiniteGroup::memo(Memo slot,
                                                 const std::function<std::vector<ElementSet>()>& compute) const {
  auto i = static_cast<int>(slot);
  std::call_once(memo_once_[i], [&] { memo_[i] = compute(); });
  return memo_[i];
}

GroupPtr build_group(const std::vector<Permutation>& generators, std::size_t cap, std::vector<std::string> labels,
                     std::string name) {
  std::size_t degree = 0;
  for (const auto& p : generators) degree = std::max(degree, p.size());
  std::vector<Permutation> gens;
  for (const auto& p : generators) {
    Permutation q(degree);
    std::vector<char> hit(degree, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      q[i] = i < p.size() ? p[i] : static_cast<std::uint32_t>(i);
      if (q[i] >= degree || hit[q[i]]) fail(ErrorKind::MalformedPermutation, "image list is not a bijection");
      hit[q[i]] = 1;
    }
    gens.push_back(std::move(q));
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Elem, PermHash> index{{id, 0}};
  // parent[y], via[y]: y = elems[parent] * gens[via]; right[x][k] = x * gens[k]
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Elem>> right;

  for (std::size_t head = 0; head < elems.size(); ++head) {
    std::vector<Elem> row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation prod(degree);
      for (std::size_t i = 0; i < degree; ++i) prod[i] = gens[k][elems[head][i]];
      auto it = index.find(prod);
      if (it == index.end()) {
        if (elems.size() >= cap)
          fail(ErrorKind::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
        auto idx = static_cast<Elem>(elems.size());
        index.emplace(prod, idx);
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<Elem>(head));
        via.push_back(k);
        row[k] = idx;
      } else {
        row[k] = it->second;
      }
    }
    right.push_back(std::move(row));
  }

  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x) table[static_cast<std::size_t>(x) * n] = x;
  // Columns in BFS order: x * y = (x * parent(y)) * gen(via(y)).
  for (Elem y = 1; y < n; ++y) {
    for (Elem x = 0; x < n; ++x) {
      Elem t = table[static_cast<std::size_t>(x) * n + parent[y]];
      table[static_cast<std::size_t>(x) * n + y] = right[t][via[y]];
    }
  }

  std::vector<Elem> gen_elems;
  for (std::size_t k = 0; k < gens.size(); ++k) gen_elems.push_back(right[0][k]);
  return FiniteGroup::from_table(n, std::move(table), std::move(gen_elems), std::move(labels), std::move(name));
}

GroupPtr trivial_group() {
  static const GroupPtr g = FiniteGroup::from_table(1, {0}, {}, {}, "1");
  return g;
}

GroupPtr cyclic_group(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_table(n, std::move(table), gens, {}, "C" + std::to_string(n));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t cap) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  if (n > cap) fail(ErrorKind::OrderCapExceeded, "direct product exceeds cap " + std::to_string(cap));
  // (x, y) has index x * nb + y, so the identity is 0.
  std::vector<Elem> table(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Elem x = a->mul(static_cast<Elem>(u / nb), static_cast<Elem>(v / nb));
      Elem y = b->mul(static_cast<Elem>(u % nb), static_cast<Elem>(v % nb));
      table[u * n + v] = static_cast<Elem>(x * nb + y);
    }
  std::vector<Elem> gens;
  for (Elem g : a->generators()) gens.push_back(static_cast<Elem>(g * nb));
  for (Elem g : b->generators()) gens.push_back(g);
  std::string name = a->name().empty() || b->name().empty() ? std::string{} : a->name() + "x" + b->name();
  return FiniteGroup::from_table(n, std::move(table), gens, {}, name);
}

ElementSet generated_set(const FiniteGroup& g, const std::vector<Elem>& gens) {
  ElementSet set(g.order());
  set.insert(0);
  std::vector<Elem> have;
  for (Elem x : gens) extend_closure(g, set, have, x);
  return set;
}

void extend_closure(const FiniteGroup& g, ElementSet& set, std::vector<Elem>& gens, Elem x) {
  if (set.contains(x)) return;
  gens.push_back(x);
  std::vector<Elem> queue = set.elements();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem y = queue[head];
    for (Elem s : gens) {
      Elem z = g.mul(y, s);
      if (!set.contains(z)) {
        set.insert(z);
        queue.push_back(z);
      }
    }
  }
}

std::vector<Elem> small_generating_set(const FiniteGroup& g, const std::vector<Elem>& elements) {
  std::vector<Elem> cand(elements);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  ElementSet set(g.order());
  set.insert(0);
  std::vector<Elem> gens;
  std::size_t target = elements.size();
  for (Elem x : cand) {
    if (set.count() >= target) break;
    extend_closure(g, set, gens, x);
  }
  return gens;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order() == b->order() && a->table() == b->table();
}

}  // namespace fundament
