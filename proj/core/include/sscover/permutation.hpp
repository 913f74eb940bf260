#ifndef SSCOVER_PERMUTATION_HPP
#define SSCOVER_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sscover {

// A bijection of {0, ..., degree-1}, stored as its image sequence.
// Immutable after construction.
class Permutation {
public:
  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  // Parses cycle notation, e.g. "(0 1 2)(3 4)"; "()" is the identity.
  // With degree < 0 the degree is inferred as the largest point
  // mentioned plus one (at least 1).
  static Permutation parse(const std::string &text, int degree = -1);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x)); }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;

  // (a * b)(x) = a(b(x)); b acts first.
  friend Permutation operator*(const Permutation &a, const Permutation &b);

  Permutation inverse() const;

  // Least n >= 1 with p^n = id, the lcm of the cycle lengths.
  std::uint64_t order() const;

  // Cycles of length >= 2, each rotated to start at its smallest point,
  // sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  std::string to_cycles() const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<int> images_;
};

}  // namespace sscover

#endif  // SSCOVER_PERMUTATION_HPP
