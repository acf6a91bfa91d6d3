#include "fundament/hom.hpp"

#include "fundament/error.hpp"

namespace fundament {

namespace {

bool respects_products(const FiniteGroup& s, const FiniteGroup& t, const std::vector<Elem>& img) {
  if (img[0] != 0) return false;
  // f(xg) = f(x) f(g) for generators g is enough, since every y is a word in them.
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem g : s.generators())
      if (img[s.mul(x, g)] != t.mul(img[x], img[g])) return false;
  return true;
}

}  // namespace

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_->order()) fail(ErrorKind::NotHomomorphism, "image table has the wrong size");
  for (Elem y : image_)
    if (y >= target_->order()) fail(ErrorKind::NotHomomorphism, "image index out of range");
  if (!respects_products(*source_, *target_, image_)) fail(ErrorKind::NotHomomorphism, "map does not respect products");
}

GroupHom GroupHom::unchecked(GroupPtr source, GroupPtr target, std::vector<Elem> image) {
  GroupHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.image_ = std::move(image);
  return h;
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Elem> img(g->order());
  for (Elem x = 0; x < g->order(); ++x) img[x] = x;
  return unchecked(g, g, std::move(img));
}

GroupHom GroupHom::to_trivial(const GroupPtr& g) {
  return unchecked(g, trivial_group(), std::vector<Elem>(g->order(), 0));
}

GroupHom GroupHom::from_generator_images(const GroupPtr& source, const GroupPtr& target,
                                         const std::vector<Elem>& images) {
  const auto& gens = source->generators();
  if (images.size() != gens.size()) fail(ErrorKind::NotHomomorphism, "need one image per generator");
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> img(source->order(), unset);
  img[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = source->mul(x, gens[k]);
      Elem v = target->mul(img[x], images[k]);
      if (img[y] == unset) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        fail(ErrorKind::NotHomomorphism, "generator images do not define a homomorphism");
      }
    }
  }
  return unchecked(source, target, std::move(img));
}

Subgroup GroupHom::kernel() const {
  ElementSet s(source_->order());
  for (Elem x = 0; x < image_.size(); ++x)
    if (image_[x] == 0) s.insert(x);
  return Subgroup(source_, std::move(s));
}

Subgroup GroupHom::image() const {
  ElementSet s(target_->order());
  for (Elem y : image_) s.insert(y);
  return Subgroup(target_, std::move(s));
}

ElementSet GroupHom::image_of(const ElementSet& s) const {
  ElementSet out(target_->order());
  s.for_each([&](Elem x) { out.insert(image_[x]); });
  return out;
}

ElementSet GroupHom::preimage_of(const ElementSet& s) const {
  ElementSet out(source_->order());
  for (Elem x = 0; x < image_.size(); ++x)
    if (s.contains(image_[x])) out.insert(x);
  return out;
}

bool GroupHom::is_surjective() const { return image().size() == target_->order(); }

bool GroupHom::is_injective() const { return kernel().is_trivial(); }

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!same_group(inner.target(), outer.source()))
    fail(ErrorKind::SourceTargetMismatch, "cannot compose: target and source differ");
  std::vector<Elem> img(inner.source()->order());
  for (Elem x = 0; x < img.size(); ++x) img[x] = outer(inner(x));
  return GroupHom::unchecked(inner.source(), outer.target(), std::move(img));
}

std::optional<GroupHom> inverse(const GroupHom& f) {
  if (f.source()->order() != f.target()->order() || !f.is_bijective()) return std::nullopt;
  std::vector<Elem> img(f.target()->order());
  for (Elem x = 0; x < img.size(); ++x) img[f(x)] = x;
  return GroupHom::unchecked(f.target(), f.source(), std::move(img));
}

Cover::Cover(GroupHom hom) : hom_(std::move(hom)) {
  if (!hom_.is_surjective()) fail(ErrorKind::NotSurjective, "homomorphism is not onto");
  kernel_ = hom_.kernel();
}

Cover compose(const Cover& outer, const Cover& inner) { return Cover(compose(outer.hom(), inner.hom())); }

Cover identity_cover(const GroupPtr& g) { return Cover(GroupHom::identity(g)); }

Cover trivial_cover(const GroupPtr& g) { return Cover(GroupHom::to_trivial(g)); }

Quotient quotient(const GroupPtr& h, const Subgroup& n) {
  require_normal(n, "subgroup");
  const std::size_t order = h->order();
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> label(order, unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (label[x] != unset) continue;
    auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : n.elements()) label[h->mul(x, k)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = label[h->mul(reps[a], reps[b])];

  std::vector<Elem> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h->generators().size(); ++i) {
    Elem c = label[h->generators()[i]];
    if (c == 0) continue;
    bool dup = false;
    for (Elem e : gens) dup = dup || e == c;
    if (dup) continue;
    gens.push_back(c);
    labels.push_back(h->generator_labels()[i]);
  }
  std::string name = h->name().empty() ? std::string{} : h->name() + "/N";
  auto group = FiniteGroup::from_table(q, std::move(table), gens, labels, name);
  Cover map(GroupHom::unchecked(h, group, std::move(label)));
  return {group, std::move(map)};
}

GroupHom factor_through(const Cover& q, const GroupHom& f) {
  if (!same_group(q.source(), f.source())) fail(ErrorKind::SourceTargetMismatch, "maps have different sources");
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> img(q.target()->order(), unset);
  for (Elem x = 0; x < q.source()->order(); ++x) {
    Elem c = q(x);
    if (img[c] == unset)
      img[c] = f(x);
    else if (img[c] != f(x))
      fail(ErrorKind::Incompatible, "map does not factor through the quotient");
  }
  return GroupHom::unchecked(q.target(), f.target(), std::move(img));
}

Cover factor_through(const Cover& q, const Cover& f) { return Cover(factor_through(q, f.hom())); }

}  // namespace fundament
