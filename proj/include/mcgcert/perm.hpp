#pragma once

#include <string>
#include <vector>

namespace mcgcert {

// Permutation of {1..n}. Composition is right-to-left: (p.compose(q))(i) = p(q(i)).
class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i + 1;
  }
  static Perm from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }

  Perm compose(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;
  bool is_involution() const { return compose(*this).is_identity(); }
  int fixed_points() const;

  bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Perm& rhs) const { return !(*this == rhs); }
  bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

  const std::vector<int>& images() const { return img_; }
  std::string cycle_string() const;

private:
  std::vector<int> img_;
};

}  // namespace mcgcert
