#ifndef CSRG_ZN_HPP
#define CSRG_ZN_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace csrg
{

/// Index of a vertex of Γ(n), i.e. of an element of Z_n×Z_n under the
/// row-major labeling (i, j) ↦ i·n + j.
using Vertex = std::uint32_t;

/// Smallest modulus for which Γ(n) is defined.
inline constexpr int min_modulus = 4;

/// An element (i, j) of Z_n×Z_n. The modulus travels with the value and is
/// checked on every binary operation.
class ZnPair
{
public:
  /// Throws std::invalid_argument unless n >= 4 and 0 <= i, j < n.
  ZnPair(int n, int i, int j);

  /// Reduces arbitrary integers (including negative ones) modulo n.
  static ZnPair reduced(int n, long long i, long long j);

  int n() const { return _n; }
  int i() const { return _i; }
  int j() const { return _j; }

  std::string to_string() const;

  friend bool operator==(ZnPair const &, ZnPair const &) = default;
  friend auto operator<=>(ZnPair const &, ZnPair const &) = default;

private:
  int _n, _i, _j;
};

std::ostream &operator<<(std::ostream &os, ZnPair const &p);

Vertex vertex_index(ZnPair const &p);

/// Inverse of vertex_index; throws std::out_of_range for v >= n².
ZnPair pair_of(Vertex v, int n);

ZnPair pair_add(ZnPair const &a, ZnPair const &b);
ZnPair pair_neg(ZnPair const &a);
ZnPair pair_sub(ZnPair const &a, ZnPair const &b);

/// Multiplies both coordinates by the scalar u (mod n).
ZnPair pair_scale(ZnPair const &a, long long u);

/// The multiplicative group Z_n^* as a sorted list of residues.
class UnitGroup
{
public:
  explicit UnitGroup(int n);

  int n() const { return _n; }
  std::vector<int> const &units() const { return _units; }
  std::size_t size() const { return _units.size(); }

  bool contains(long long u) const;

  /// Modular inverse; throws std::invalid_argument for a non-unit.
  int inverse(long long u) const;

private:
  int _n;
  std::vector<int> _units;
};

/// Throws std::invalid_argument for n < 2.
UnitGroup units(int n);

/// Euler's totient, computed by trial factorisation.
int euler_phi(int n);

bool is_prime(int n);

/// Least nontrivial divisor of n, or 0 when n is prime (or n < 4).
int smallest_proper_factor(int n);

} // namespace csrg

#endif // CSRG_ZN_HPP
