#include "fundament/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fundament/error.hpp"

namespace fundament {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Order statistics per fiber; equal for source and target when an
// isomorphism over the base exists.
std::map<std::pair<Elem, std::size_t>, std::size_t> fiber_histogram(const GroupHom& f) {
  std::map<std::pair<Elem, std::size_t>, std::size_t> h;
  for (Elem x = 0; x < f.source()->order(); ++x) ++h[{f(x), f.source()->element_order(x)}];
  return h;
}

class Searcher {
 public:
  Searcher(const GroupHom& src, const GroupHom& tgt, HomKind kind,
           const std::function<bool(const GroupHom&)>& visit)
      : src_(src), tgt_(tgt), kind_(kind), visit_(visit), h_(*src.source()), k_(*tgt.source()) {
    std::vector<Elem> all(h_.order());
    std::iota(all.begin(), all.end(), 0u);
    gens_ = small_generating_set(h_, all);
    if (h_.generators().size() < gens_.size()) gens_ = h_.generators();
    img_.assign(h_.order(), kUnset);
    img_[0] = 0;
    members_.push_back(0);
    used_.assign(k_.order(), 0);
    used_[0] = 1;
    for (Elem g : gens_) {
      std::vector<Elem> cand;
      for (Elem y = 0; y < k_.order(); ++y) {
        if (tgt_(y) != src_(g)) continue;
        std::size_t og = h_.element_order(g), oy = k_.element_order(y);
        if (kind_ == HomKind::Isomorphism ? oy != og : og % oy != 0) continue;
        cand.push_back(y);
      }
      candidates_.push_back(std::move(cand));
    }
    images_.assign(gens_.size(), 0);
  }

  std::size_t run() {
    dfs(0);
    return visited_;
  }

 private:
  bool extend(std::size_t level, Elem a) {
    images_[level] = a;
    // Old elements only need the new generator; new elements need all of them.
    std::size_t old_count = members_.size();
    std::vector<std::pair<Elem, bool>> queue;
    queue.reserve(old_count);
    for (std::size_t i = 0; i < old_count; ++i) queue.push_back({members_[i], true});
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [x, old] = queue[head];
      for (std::size_t t = old ? level : 0; t <= level; ++t) {
        Elem y = h_.mul(x, gens_[t]);
        Elem v = k_.mul(img_[x], images_[t]);
        if (img_[y] == kUnset) {
          if (kind_ == HomKind::Isomorphism && used_[v]) return false;
          img_[y] = v;
          used_[v] = 1;
          members_.push_back(y);
          queue.push_back({y, false});
        } else if (img_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t count) {
    while (members_.size() > count) {
      Elem y = members_.back();
      members_.pop_back();
      if (kind_ == HomKind::Isomorphism) used_[img_[y]] = 0;
      img_[y] = kUnset;
    }
  }

  void dfs(std::size_t level) {
    if (stop_) return;
    if (level == gens_.size()) {
      if (kind_ != HomKind::Any) {
        std::vector<char> hit(k_.order(), 0);
        std::size_t n = 0;
        for (Elem v : img_) n += !hit[v] ? (hit[v] = 1, 1) : 0;
        if (n != k_.order()) return;
      }
      ++visited_;
      auto theta = GroupHom::unchecked(src_.source(), tgt_.source(), img_);
      if (!visit_(theta)) stop_ = true;
      return;
    }
    for (Elem a : candidates_[level]) {
      std::size_t mark = members_.size();
      if (extend(level, a)) dfs(level + 1);
      undo(mark);
      if (stop_) return;
    }
  }

  const GroupHom& src_;
  const GroupHom& tgt_;
  HomKind kind_;
  const std::function<bool(const GroupHom&)>& visit_;
  const FiniteGroup& h_;
  const FiniteGroup& k_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> images_;
  std::vector<Elem> img_;
  std::vector<Elem> members_;
  std::vector<char> used_;
  std::size_t visited_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t for_each_hom_over(const GroupHom& src, const GroupHom& tgt, HomKind kind,
                              const std::function<bool(const GroupHom&)>& visit) {
  if (!same_group(src.target(), tgt.target()))
    fail(ErrorKind::TargetMismatch, "maps must share their target");
  const auto& h = *src.source();
  const auto& k = *tgt.source();
  if (kind == HomKind::Isomorphism) {
    if (h.order() != k.order()) return 0;
    if (fiber_histogram(src) != fiber_histogram(tgt)) return 0;
  }
  if (kind == HomKind::Surjective) {
    if (h.order() % k.order() != 0) return 0;
    // the image of src must contain the image of tgt
    if (!tgt.image().is_subset_of(src.image())) return 0;
  }
  if (h.order() == 1) {
    if (kind != HomKind::Any && k.order() != 1) return 0;
    if (tgt(0) != src(0)) return 0;
    visit(GroupHom::unchecked(src.source(), tgt.source(), {0}));
    return 1;
  }
  Searcher s(src, tgt, kind, visit);
  return s.run();
}

std::optional<GroupHom> find_hom_over(const GroupHom& src, const GroupHom& tgt, HomKind kind,
                                      const std::function<bool(const GroupHom&)>& accept) {
  std::optional<GroupHom> found;
  for_each_hom_over(src, tgt, kind, [&](const GroupHom& theta) {
    if (accept && !accept(theta)) return true;
    found = theta;
    return false;
  });
  return found;
}

std::optional<GroupHom> find_isomorphism_over(const Cover& pi, const Cover& pi_prime) {
  if (!same_group(pi.target(), pi_prime.target()))
    fail(ErrorKind::TargetMismatch, "covers have different targets");
  if (pi == pi_prime) return GroupHom::identity(pi.source());
  return find_hom_over(pi.hom(), pi_prime.hom(), HomKind::Isomorphism);
}

std::optional<GroupHom> find_epimorphism_over(const Cover& pi, const Cover& pi_prime) {
  if (!same_group(pi.target(), pi_prime.target()))
    fail(ErrorKind::TargetMismatch, "covers have different targets");
  return find_hom_over(pi.hom(), pi_prime.hom(), HomKind::Surjective);
}

std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  return find_isomorphism_over(trivial_cover(a), trivial_cover(b));
}

}  // namespace fundament
