#pragma once

#include <cstddef>
#include <vector>

#include "cosetmg/caps.hpp"
#include "cosetmg/perm.hpp"

namespace cosetmg {

/// A finite permutation group stored fully enumerated, with the element list
/// sorted lexicographically on image tables. Element index 0 is always the
/// identity. Immutable after construction; safe to share between threads.
class PermGroup {
 public:
  explicit PermGroup(int degree);  // trivial group

  /// Closes a generating set. Throws CapExceeded beyond closure_cap.
  static PermGroup generated(int degree, std::vector<Perm> gens,
                             std::size_t closure_cap = Caps{}.closure_max);

  /// Wraps an element list known to be a group; verifies identity, inverses
  /// and closure under multiplication.
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  /// Same, but trusts the caller on closure. Used internally for large
  /// groups (centralizers and their products) whose group structure is
  /// guaranteed by construction.
  static PermGroup from_elements_unchecked(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(int i) const { return elements_[i]; }

  int index_of(const Perm& p) const;  // -1 when absent
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int identity() const { return 0; }

  int mul(int i, int j) const;  // index of elements[i] * elements[j]
  int inv(int i) const { return inverse_[i]; }
  int conj(int g, int x) const;  // g x g^-1
  int element_order(int i) const { return elements_[i].order(); }

  /// Extends generator images to a total map along the word derivations
  /// recorded during closure. The result is only a function; callers must
  /// verify the homomorphism law themselves.
  std::vector<int> extend_generator_images(const PermGroup& target,
                                           const std::vector<int>& gen_images) const;
  bool has_derivations() const { return !derivation_.empty(); }

 private:
  PermGroup() = default;
  void finalize(bool build_derivations);

  int degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::vector<int> inverse_;
  std::vector<int> mul_table_;            // built for small orders only
  std::vector<std::pair<int, int>> derivation_;  // (parent index, generator index); (-1,-1) at identity
  std::vector<int> bfs_order_;
};

/// A homomorphism between enumerated groups, given pointwise on element
/// indices.
struct GroupHom {
  PermGroup source;
  PermGroup target;
  std::vector<int> map;  // source index -> target index

  bool is_homomorphism() const;
  bool is_bijective() const;
  int operator()(int i) const { return map[i]; }
};

GroupHom identity_hom(const PermGroup& G);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // f after g
GroupHom inverse_hom(const GroupHom& f);                 // requires bijectivity

}  // namespace cosetmg
