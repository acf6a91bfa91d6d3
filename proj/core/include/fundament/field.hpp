#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fundament {

using FieldElem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A finite field.  Prime fields compute residues directly; other fields are
// given by addition and multiplication tables on labels 0..q-1 where label 0
// is zero.  F_p elements are their residues.
class Field {
 public:
  static FieldPtr prime(int p);
  static FieldPtr from_tables(int p, int degree, std::vector<FieldElem> add, std::vector<FieldElem> mul,
                              FieldElem one);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return q_; }
  bool is_prime() const noexcept { return degree_ == 1; }

  FieldElem zero() const noexcept { return 0; }
  FieldElem one() const noexcept { return one_; }
  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    return is_prime() ? static_cast<FieldElem>((a + b) % p_) : add_[a * q_ + b];
  }
  FieldElem neg(FieldElem a) const noexcept { return neg_[a]; }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return is_prime() ? static_cast<FieldElem>((static_cast<unsigned>(a) * b) % static_cast<unsigned>(p_))
                      : mul_[a * q_ + b];
  }
  FieldElem inv(FieldElem a) const;  // throws on zero
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  // n·1
  FieldElem from_int(long long n) const noexcept;
  // Least element generating the unit group (1 for F_2).
  FieldElem generator() const noexcept { return generator_; }
  FieldElem pow(FieldElem a, long long k) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.degree_ == b.degree_ && a.one_ == b.one_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  Field() = default;
  void finish();

  int p_ = 0;
  int degree_ = 1;
  std::size_t q_ = 0;
  FieldElem one_ = 1;
  FieldElem generator_ = 1;
  std::vector<FieldElem> add_, mul_;
  std::vector<FieldElem> neg_, inv_;
  std::vector<FieldElem> int_image_;  // k·1 for k < p
};

bool is_prime_number(long long n);

}  // namespace fundament
