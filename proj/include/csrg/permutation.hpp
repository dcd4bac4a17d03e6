#ifndef CSRG_PERMUTATION_HPP
#define CSRG_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "csrg/zn.hpp"

namespace csrg
{

/// A bijection on {0, ..., degree-1}, stored as its image array.
class Permutation
{
public:
  /// Validates that `images` is a bijection; throws std::invalid_argument
  /// otherwise (duplicate or out-of-range image).
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return _images.size(); }
  std::span<Vertex const> images() const { return _images; }

  /// Bounds-checked image of v.
  Vertex apply(Vertex v) const;

  /// Unchecked image of v, for inner loops.
  Vertex operator[](Vertex v) const { return _images[v]; }

  bool is_identity() const;

  /// Smallest point moved, or degree() for the identity.
  Vertex smallest_moved_point() const;

  std::string to_cycle_string() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct unchecked_tag {};
  Permutation(std::vector<Vertex> images, unchecked_tag);

  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation inverse(Permutation const &);

  std::vector<Vertex> _images;
};

/// v ↦ f(g(v)): the right factor acts first. Throws std::invalid_argument
/// on degree mismatch.
Permutation compose(Permutation const &f, Permutation const &g);

Permutation inverse(Permutation const &f);

/// Throws std::out_of_range for v >= f.degree().
inline Vertex perm_apply(Permutation const &f, Vertex v) { return f.apply(v); }

/// Order of f as a group element (lcm of cycle lengths).
std::size_t element_order(Permutation const &f);

/// Builds the permutation of V(Γ(n)) induced by a map on Z_n×Z_n.
Permutation permutation_from_pair_map(
  int n, std::function<ZnPair(ZnPair const &)> const &map);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace csrg

#endif // CSRG_PERMUTATION_HPP
