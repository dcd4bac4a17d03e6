#ifndef CSRG_NAMED_AUTOMORPHISMS_HPP
#define CSRG_NAMED_AUTOMORPHISMS_HPP

#include <array>
#include <string>

#include "csrg/cayley_graph.hpp"
#include "csrg/perm_group.hpp"
#include "csrg/permutation.hpp"

namespace csrg
{

enum class AutomorphismKind
{
  translation, // T_{a,b}: (x,y) ↦ (x+a, y+b)
  psi,         // ψ_u: (i,j) ↦ (ui, uj), u a unit
  sigma,       // σ: (i,j) ↦ (j,i)
  alpha,       // α: (i,j) ↦ (-j, i-j)
};

/// One of the explicit automorphisms of Γ(n). Construction verifies the
/// permutation against the full adjacency relation.
class NamedAutomorphism
{
public:
  AutomorphismKind kind() const { return _kind; }
  int n() const { return _n; }
  Permutation const &perm() const { return _perm; }

  /// Parameters: (a, b) for translations, (u, 0) for ψ, unused otherwise.
  std::pair<int, int> parameters() const { return _params; }

  std::string name() const;

private:
  NamedAutomorphism(CayleyGraph const &g, AutomorphismKind kind,
                    std::pair<int, int> params, Permutation perm);

  friend NamedAutomorphism translation(CayleyGraph const &, int, int);
  friend NamedAutomorphism psi(CayleyGraph const &, int);
  friend NamedAutomorphism sigma_perm(CayleyGraph const &);
  friend NamedAutomorphism alpha_perm(CayleyGraph const &);

  AutomorphismKind _kind;
  int _n;
  std::pair<int, int> _params;
  Permutation _perm;
};

NamedAutomorphism translation(CayleyGraph const &g, int a, int b);

/// Throws std::invalid_argument when gcd(u, n) != 1.
NamedAutomorphism psi(CayleyGraph const &g, int u);

NamedAutomorphism sigma_perm(CayleyGraph const &g);
NamedAutomorphism alpha_perm(CayleyGraph const &g);

// Convenience overloads that build Γ(n) first.
NamedAutomorphism translation(int n, int a, int b);
NamedAutomorphism psi(int n, int u);
NamedAutomorphism sigma_perm(int n);
NamedAutomorphism alpha_perm(int n);

/// u ~ v ⟺ p(u) ~ p(v) for all pairs. Throws std::invalid_argument on a
/// degree mismatch.
bool is_graph_automorphism(SimpleGraph const &g, Permutation const &p);

/// ⟨T_{1,0}, T_{0,1}, ψ_u (all units u), σ, α⟩. Throws for n < 4.
GeneratedGroup claimed_aut_group(CayleyGraph const &g);
GeneratedGroup claimed_aut_group(int n);

/// ⟨ψ_u (all units u), σ, α⟩.
GeneratedGroup claimed_stabilizer_zero(CayleyGraph const &g);
GeneratedGroup claimed_stabilizer_zero(int n);

/// ⟨T_{1,0}, T_{0,1}⟩, the left regular representation of Z_n×Z_n.
GeneratedGroup translation_group(CayleyGraph const &g);

/// ⟨σ, α⟩ ≅ Sym(3).
GeneratedGroup clique_permuting_group(CayleyGraph const &g);

/// Permutation of the labels {C1, C2, C3} induced by a stabilizer element:
/// image[k] = j means p(C_{k+1}) = C_{j+1}.
struct CliqueActionLabel
{
  std::array<int, 3> image;

  bool is_identity() const { return image == std::array<int, 3>{0, 1, 2}; }
  std::string to_string() const;

  friend bool operator==(CliqueActionLabel const &,
                         CliqueActionLabel const &) = default;
};

/// (a ∘ b)[k] = a[b[k]]
CliqueActionLabel compose(CliqueActionLabel const &a, CliqueActionLabel const &b);

/// Throws std::invalid_argument when p moves (0,0), or when some C_i is not
/// mapped onto a single C_j (the message names the offending vertex).
CliqueActionLabel clique_action(CayleyGraph const &g, CliqueTriple const &triple,
                                Permutation const &p);
CliqueActionLabel clique_action(CayleyGraph const &g, Permutation const &p);

} // namespace csrg

#endif // CSRG_NAMED_AUTOMORPHISMS_HPP
