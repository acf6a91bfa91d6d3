#pragma once

#include <optional>
#include <vector>

#include "fundament/subgroup.hpp"

namespace fundament {

class GroupHom {
 public:
  GroupHom() = default;
  // Validates the homomorphism property; throws NotHomomorphism.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image);
  static GroupHom unchecked(GroupPtr source, GroupPtr target, std::vector<Elem> image);
  static GroupHom identity(const GroupPtr& g);
  static GroupHom to_trivial(const GroupPtr& g);
  // Extends images of source->generators() (in order); throws NotHomomorphism
  // if the assignment is inconsistent.
  static GroupHom from_generator_images(const GroupPtr& source, const GroupPtr& target,
                                        const std::vector<Elem>& images);

  Elem operator()(Elem x) const noexcept { return image_[x]; }
  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Elem>& table() const noexcept { return image_; }

  Subgroup kernel() const;
  Subgroup image() const;
  ElementSet image_of(const ElementSet& s) const;
  ElementSet preimage_of(const ElementSet& s) const;
  bool is_surjective() const;
  bool is_injective() const;
  bool is_bijective() const { return is_surjective() && is_injective(); }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return same_group(a.source_, b.source_) && same_group(a.target_, b.target_) && a.image_ == b.image_;
  }

 private:
  GroupPtr source_, target_;
  std::vector<Elem> image_;
};

// outer ∘ inner
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
std::optional<GroupHom> inverse(const GroupHom& f);

// A surjective homomorphism together with its kernel.
class Cover {
 public:
  Cover() = default;
  explicit Cover(GroupHom hom);  // throws NotSurjective

  Elem operator()(Elem x) const noexcept { return hom_(x); }
  const GroupHom& hom() const noexcept { return hom_; }
  const GroupPtr& source() const noexcept { return hom_.source(); }
  const GroupPtr& target() const noexcept { return hom_.target(); }
  const Subgroup& kernel() const noexcept { return kernel_; }
  bool is_isomorphism() const noexcept { return kernel_.is_trivial(); }

  friend bool operator==(const Cover& a, const Cover& b) { return a.hom_ == b.hom_; }

 private:
  GroupHom hom_;
  Subgroup kernel_;
};

Cover compose(const Cover& outer, const Cover& inner);
Cover identity_cover(const GroupPtr& g);
Cover trivial_cover(const GroupPtr& g);

struct Quotient {
  GroupPtr group;
  Cover map;
};

// H/N with cosets numbered by the order of their least element.
Quotient quotient(const GroupPtr& h, const Subgroup& n);

// Given q: H ↠ Q and f: H → X with Ker q ≤ Ker f, the unique f̄ with f̄∘q = f.
// Throws Incompatible when the kernel condition fails.
GroupHom factor_through(const Cover& q, const GroupHom& f);
Cover factor_through(const Cover& q, const Cover& f);

}  // namespace fundament
