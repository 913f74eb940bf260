#ifndef SSCOVER_FINITE_GROUP_HPP
#define SSCOVER_FINITE_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sscover/permutation.hpp"

namespace sscover {

// A finite permutation group stored as its full, closed element set.
// Elements are kept sorted, so iteration order is deterministic.
// Immutable after construction.
class FiniteGroup {
public:
  static constexpr std::size_t kDefaultClosureCap = 10000;

  // Breadth-first closure of `generators` plus the identity. Throws
  // std::invalid_argument on mixed degrees and std::length_error when
  // the closure grows past `cap` elements. An empty generating set
  // yields the trivial group on one point.
  static FiniteGroup closure(std::vector<Permutation> generators,
                             std::size_t cap = kDefaultClosureCap);

  static FiniteGroup trivial(int degree = 1);
  static FiniteGroup cyclic(int n);
  // Order 2n. For n >= 3 the symmetries of the n-gon on n points; n = 1
  // and n = 2 are realised on 2 resp. 4 points.
  static FiniteGroup dihedral(int n);
  static FiniteGroup symmetric(int n);
  static FiniteGroup alternating(int n);

  // The left-regular action of abelian `g` on its own element set,
  // extended by the inversion map x -> x^-1; permutations of degree
  // |g|. The result has order 2|g| unless inversion is already a
  // translation (exponent <= 2), in which case it equals the regular
  // image of g itself. Throws std::invalid_argument on non-abelian
  // input.
  static FiniteGroup semidirect_with_inversion(const FiniteGroup &g);

  int degree() const;
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation> &elements() const { return elements_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  Permutation identity() const { return Permutation::identity(degree()); }

  bool contains(const Permutation &p) const;
  // Position of `p` in the sorted element list; throws if absent.
  std::size_t index_of(const Permutation &p) const;

  // True iff all generator pairs commute.
  bool is_abelian() const;

  // Engaged with a generator when the group is cyclic.
  std::optional<Permutation> cyclic_witness() const;
  bool is_cyclic() const { return cyclic_witness().has_value(); }

  // Element-set equality after a degree check.
  bool operator==(const FiniteGroup &other) const;

private:
  FiniteGroup(std::vector<Permutation> elements, std::vector<Permutation> generators);

  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

// Builds a group from a short name: "C<n>", "D<n>", "S<n>", "A<n>", or
// an 'x'-joined direct product such as "C2xC4" (factors act on disjoint
// points). Throws std::invalid_argument on anything else.
FiniteGroup group_from_name(const std::string &name);

}  // namespace sscover

#endif  // SSCOVER_FINITE_GROUP_HPP
