#include "mcf/random.hpp"

#include <algorithm>
#include <functional>

namespace mcf {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

Int from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == 8);
  Int r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    const std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

Int Rng::bits(unsigned count) {
  Int r = 0;
  unsigned left = count;
  while (left >= 64) {
    r <<= 64;
    r += from_u64(next());
    left -= 64;
  }
  if (left > 0) {
    r <<= left;
    r += from_u64(next() >> (64 - left));
  }
  return r;
}

Int Rng::up_to(const Int& bound) {
  const unsigned width = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  for (;;) {
    Int v = bits(width);
    if (v <= bound) return v;
  }
}

RatPoint random_rational_point(std::size_t n, Rng& rng, unsigned denominator_bits) {
  if (denominator_bits == 0) denominator_bits = 1;
  Int d = rng.bits(denominator_bits - 1);
  d += Int(1) << (denominator_bits - 1);
  std::vector<Int> k;
  for (std::size_t i = 0; i < n; ++i) k.push_back(rng.up_to(d));
  std::sort(k.begin(), k.end(), std::greater<>());
  RatPoint p;
  for (auto& x : k) {
    Rat q(x, d);
    q.canonicalize();
    p.coords.push_back(std::move(q));
  }
  return p;
}

std::vector<double> random_float_point(std::size_t n, Rng& rng) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform();
  std::sort(x.begin(), x.end(), std::greater<>());
  return x;
}

std::vector<Int> random_dyadic_projective(std::size_t n, Rng& rng, unsigned bits) {
  std::vector<Int> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(rng.bits(bits));
  std::sort(l.begin(), l.end(), std::greater<>());
  l.push_back(Int(1) << bits);
  return normalize_proj(std::move(l)).coords();
}

}  // namespace mcf
