#pragma once

#include <compare>
#include <vector>

namespace tq {

// Bijection on [0, n), stored as its image vector.
class Permutation {
 public:
  // Throws std::invalid_argument unless image is a bijection on [0, n).
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // All permutations of [0, n) in lexicographic image order, cached per n.
  static const std::vector<Permutation>& all(int n);
  // The subset of all(n) fixing the given point.
  static const std::vector<Permutation>& all_fixing(int n, int fixed_point);

 private:
  std::vector<int> image_;
};

}  // namespace tq
