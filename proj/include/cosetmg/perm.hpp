#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cosetmg {

/// A permutation of {0..n-1}, stored as its image table: position i holds
/// the image of i. Immutable after construction.
class Perm {
 public:
  explicit Perm(int degree);               // identity
  explicit Perm(std::vector<int> images);  // validates bijectivity

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;  // lcm of cycle lengths

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// compose(p, q) applies q first: (p*q)(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// Parses cycle notation such as "(0 1 2)(3 4)". Points are separated by
/// spaces or commas; cycles are applied right to left. Every point must be
/// below the given degree.
Perm parse_cycles(const std::string& text, int degree);

std::string to_cycles(const Perm& p);

}  // namespace cosetmg
