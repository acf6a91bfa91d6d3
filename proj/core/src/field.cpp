#include "fundament/field.hpp"

#include <map>
#include <mutex>

#include "fundament/error.hpp"

namespace fundament {

bool is_prime_number(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::prime(int p) {
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  if (!is_prime_number(p) || p > 65521) fail(ErrorKind::InvalidArgument, "not a usable prime: " + std::to_string(p));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->degree_ = 1;
  f->q_ = static_cast<std::size_t>(p);
  f->one_ = static_cast<FieldElem>(p == 1 ? 0 : 1);
  f->finish();
  cache.emplace(p, f);
  return f;
}

FieldPtr Field::from_tables(int p, int degree, std::vector<FieldElem> add, std::vector<FieldElem> mul, FieldElem one) {
  std::size_t q = 1;
  for (int i = 0; i < degree; ++i) q *= static_cast<std::size_t>(p);
  if (degree == 1) return prime(p);
  if (add.size() != q * q || mul.size() != q * q) fail(ErrorKind::InvalidArgument, "field tables have the wrong size");
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->degree_ = degree;
  f->q_ = q;
  f->one_ = one;
  f->add_ = std::move(add);
  f->mul_ = std::move(mul);
  f->finish();
  return f;
}

void Field::finish() {
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  if (is_prime()) {
    for (std::size_t a = 1; a < q_; ++a) {
      neg_[a] = static_cast<FieldElem>(q_ - a);
      inv_[a] = pow(static_cast<FieldElem>(a), p_ - 2);
    }
  } else for (std::size_t a = 0; a < q_; ++a)
    for (std::size_t b = 0; b < q_; ++b) {
      auto fa = static_cast<FieldElem>(a), fb = static_cast<FieldElem>(b);
      if (add(fa, fb) == 0) neg_[a] = fb;
      if (mul(fa, fb) == one_) inv_[a] = fb;
    }
  int_image_.assign(static_cast<std::size_t>(p_), 0);
  for (int k = 1; k < p_; ++k) int_image_[k] = add(int_image_[k - 1], one_);
  // multiplicative generator: least element of order q-1
  std::vector<std::size_t> prime_factors;
  for (std::size_t m = q_ - 1, d = 2; m > 1; ++d) {
    if (d * d > m) d = m;
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  generator_ = one_;
  for (std::size_t a = 1; a < q_ && !prime_factors.empty(); ++a) {
    auto x = static_cast<FieldElem>(a);
    bool primitive = true;
    for (auto r : prime_factors)
      if (pow(x, static_cast<long long>((q_ - 1) / r)) == one_) primitive = false;
    if (primitive) {
      generator_ = x;
      break;
    }
  }
}

FieldElem Field::inv(FieldElem a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "division by zero in a finite field");
  return inv_[a];
}

FieldElem Field::from_int(long long n) const noexcept {
  long long r = n % p_;
  if (r < 0) r += p_;
  return int_image_[static_cast<std::size_t>(r)];
}

FieldElem Field::pow(FieldElem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  FieldElem r = one_;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

}  // namespace fundament
