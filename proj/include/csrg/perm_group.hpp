#ifndef CSRG_PERM_GROUP_HPP
#define CSRG_PERM_GROUP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "csrg/permutation.hpp"

namespace csrg
{

using BigInt = boost::multiprecision::cpp_int;

/// Orbit of an ordered tuple (length 1..3) under a permutation group.
///
/// Members are kept as sorted codes t0·d^(k-1) + ... + t(k-1) where d is the
/// degree, so code order coincides with lexicographic tuple order.
class TupleOrbit
{
public:
  TupleOrbit(std::size_t degree, std::size_t arity,
             std::vector<std::uint64_t> sorted_codes);

  std::size_t arity() const { return _arity; }
  std::size_t size() const { return _codes.size(); }

  bool contains(std::span<Vertex const> tuple) const;

  /// Lexicographically smallest member.
  std::vector<Vertex> min() const;

  std::vector<Vertex> at(std::size_t index) const;
  std::vector<std::vector<Vertex>> members() const;

  std::vector<std::uint64_t> const &codes() const { return _codes; }

private:
  std::size_t _degree, _arity;
  std::vector<std::uint64_t> _codes;
};

std::uint64_t encode_tuple(std::span<Vertex const> tuple, std::size_t degree);
std::vector<Vertex> decode_tuple(std::uint64_t code, std::size_t arity,
                                 std::size_t degree);

/// A permutation group given by generators, together with a base and strong
/// generating set computed by deterministic Schreier–Sims.
///
/// Level l of the stabilizer chain stores its base point, the indices of the
/// strong generators fixing all earlier base points, and an explicit
/// transversal (point → coset representative mapping the base point there).
class GeneratedGroup
{
public:
  /// Builds the chain. `base_prefix` points are used as the first base points
  /// in the given order; further points are the smallest point moved by a
  /// generator that fixes the current base. Throws std::invalid_argument for
  /// an empty generator list, mixed degrees or out-of-range prefix points.
  static GeneratedGroup build(std::vector<Permutation> generators,
                              std::span<Vertex const> base_prefix = {});

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }
  std::vector<Permutation> const &strong_generators() const { return _strong; }

  std::vector<Vertex> base() const;
  std::size_t base_length() const { return _levels.size(); }
  std::size_t transversal_size(std::size_t level) const;

  BigInt order() const;

  bool contains(Permutation const &p) const;

  /// Sorted orbit of v under the generators.
  std::vector<Vertex> orbit_of_point(Vertex v) const;

  /// Subgroup fixing v, as a group with its own completed chain.
  GeneratedGroup point_stabilizer(Vertex v) const;

  TupleOrbit orbit_of_tuple(std::span<Vertex const> tuple) const;

  /// Every element, as products of transversal representatives. Throws
  /// std::length_error when the order exceeds `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const;

  /// Re-derives the defining properties of the chain: each strong generator
  /// fixes the earlier base points of the levels it is listed at, each
  /// transversal entry maps its base point correctly, and every generator
  /// sifts to the identity.
  bool verify_chain() const;

private:
  struct Level
  {
    Vertex base_point;
    std::vector<std::size_t> generators; // indices into _strong
    std::vector<Vertex> orbit;           // BFS order from base_point
    std::vector<std::int32_t> slot;      // point -> index into reps, or -1
    std::vector<Permutation> reps;       // reps[k](base_point) = orbit[k]
    std::vector<Permutation> rep_inverses;
    // Schreier vector: orbit[k] = edge(edge_label[k])(parent[k]), where a
    // label >= 0 indexes _strong, -1 marks the root and -2 - j is jumps[j].
    std::vector<std::int32_t> edge_label;
    std::vector<Vertex> parent;
    // Coset representatives added only to keep the tree shallow.
    std::vector<Permutation> jumps;
    std::vector<Permutation> jump_inverses;
  };

  GeneratedGroup() = default;

  void add_level(Vertex base_point);
  void rebuild_transversal(std::size_t level);
  void complete();

  Permutation representative(std::size_t level, Vertex point) const;
  Permutation const &edge(Level const &level, std::int32_t label) const;
  Permutation const &edge_inverse(Level const &level, std::int32_t label) const;

  /// p ← u⁻¹ ∘ p, where u is the representative of `point` at `level`.
  void unsift(std::size_t level, Vertex point, Permutation &p) const;

  /// Sifts p through levels starting at `from`; returns the residue and the
  /// level at which sifting stopped (base_length() if it went through).
  std::pair<Permutation, std::size_t> strip(Permutation p,
                                            std::size_t from) const;

  GeneratedGroup tail(std::size_t from_level) const;

  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<Permutation> _strong;
  std::vector<Permutation> _strong_inverses;
  std::vector<Level> _levels;
};

inline GeneratedGroup build_bsgs(std::vector<Permutation> generators)
{
  return GeneratedGroup::build(std::move(generators));
}

} // namespace csrg

#endif // CSRG_PERM_GROUP_HPP
