#include "tq/permutation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "tq/index_set.hpp"

namespace tq {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1 || n > kMaxElements)
    throw std::invalid_argument("permutation size must be in [1, 8]");
  uint32_t seen = 0;
  for (int v : image_) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("permutation image out of range");
    seen |= 1u << v;
  }
  if (seen != (1u << n) - 1u)
    throw std::invalid_argument("permutation image is not a bijection");
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 0; x < size(); ++x) inv[image_[x]] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

namespace {

std::vector<Permutation> generate_all(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace

const std::vector<Permutation>& Permutation::all(int n) {
  if (n < 1 || n > kMaxElements)
    throw std::invalid_argument("permutation size must be in [1, 8]");
  static std::vector<Permutation> cache[kMaxElements + 1];
  static std::once_flag flags[kMaxElements + 1];
  std::call_once(flags[n], [n] { cache[n] = generate_all(n); });
  return cache[n];
}

const std::vector<Permutation>& Permutation::all_fixing(int n, int fixed_point) {
  if (fixed_point < 0 || fixed_point >= n)
    throw std::invalid_argument("fixed point out of range");
  static std::vector<Permutation> cache[kMaxElements + 1][kMaxElements];
  static std::once_flag flags[kMaxElements + 1][kMaxElements];
  std::call_once(flags[n][fixed_point], [n, fixed_point] {
    std::vector<Permutation> out;
    for (const Permutation& p : all(n))
      if (p(fixed_point) == fixed_point) out.push_back(p);
    cache[n][fixed_point] = std::move(out);
  });
  return cache[n][fixed_point];
}

}  // namespace tq
