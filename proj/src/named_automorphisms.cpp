#include "csrg/named_automorphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace csrg
{

NamedAutomorphism::NamedAutomorphism(CayleyGraph const &g, AutomorphismKind kind,
                                     std::pair<int, int> params, Permutation perm)
: _kind(kind), _n(g.n()), _params(params), _perm(std::move(perm))
{
  if (!is_graph_automorphism(g, _perm))
    throw std::logic_error(name() + " is not an automorphism of Γ(" +
                           std::to_string(_n) + ")");
}

std::string NamedAutomorphism::name() const
{
  switch (_kind) {
  case AutomorphismKind::translation:
    return "T_{" + std::to_string(_params.first) + "," +
           std::to_string(_params.second) + "}";
  case AutomorphismKind::psi:
    return "psi_" + std::to_string(_params.first);
  case AutomorphismKind::sigma:
    return "sigma";
  case AutomorphismKind::alpha:
    return "alpha";
  }
  return "?";
}

NamedAutomorphism translation(CayleyGraph const &g, int a, int b)
{
  int n = g.n();
  ZnPair shift = ZnPair::reduced(n, a, b);
  auto perm = permutation_from_pair_map(
    n, [&shift](ZnPair const &p) { return pair_add(p, shift); });
  return NamedAutomorphism(g, AutomorphismKind::translation,
                           {shift.i(), shift.j()}, std::move(perm));
}

NamedAutomorphism psi(CayleyGraph const &g, int u)
{
  int n = g.n();
  UnitGroup unit_group(n);
  if (!unit_group.contains(u))
    throw std::invalid_argument("psi_" + std::to_string(u) + ": " +
                                std::to_string(u) + " is not a unit mod " +
                                std::to_string(n));

  int r = ((u % n) + n) % n;
  auto perm = permutation_from_pair_map(
    n, [r](ZnPair const &p) { return pair_scale(p, r); });
  return NamedAutomorphism(g, AutomorphismKind::psi, {r, 0}, std::move(perm));
}

NamedAutomorphism sigma_perm(CayleyGraph const &g)
{
  int n = g.n();
  auto perm = permutation_from_pair_map(
    n, [n](ZnPair const &p) { return ZnPair(n, p.j(), p.i()); });
  return NamedAutomorphism(g, AutomorphismKind::sigma, {0, 0}, std::move(perm));
}

NamedAutomorphism alpha_perm(CayleyGraph const &g)
{
  int n = g.n();
  auto perm = permutation_from_pair_map(n, [n](ZnPair const &p) {
    return ZnPair::reduced(n, -static_cast<long long>(p.j()),
                           static_cast<long long>(p.i()) - p.j());
  });
  return NamedAutomorphism(g, AutomorphismKind::alpha, {0, 0}, std::move(perm));
}

NamedAutomorphism translation(int n, int a, int b)
{
  return translation(build_gamma(n), a, b);
}

NamedAutomorphism psi(int n, int u) { return psi(build_gamma(n), u); }
NamedAutomorphism sigma_perm(int n) { return sigma_perm(build_gamma(n)); }
NamedAutomorphism alpha_perm(int n) { return alpha_perm(build_gamma(n)); }

bool is_graph_automorphism(SimpleGraph const &g, Permutation const &p)
{
  if (p.degree() != g.vertex_count())
    throw std::invalid_argument("permutation degree " +
                                std::to_string(p.degree()) +
                                " does not match vertex count " +
                                std::to_string(g.vertex_count()));

  // Comparing whole rows checks edges and non-edges alike.
  Bitset mapped(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    mapped = Bitset(g.vertex_count());
    g.neighbors(u).for_each([&](std::size_t w) { mapped.set(p[static_cast<Vertex>(w)]); });
    if (mapped != g.neighbors(p[u]))
      return false;
  }
  return true;
}

namespace
{

std::vector<Permutation> stabilizer_generators(CayleyGraph const &g)
{
  std::vector<Permutation> gens;
  UnitGroup unit_group = units(g.n());
  for (int u : unit_group.units())
    gens.push_back(psi(g, u).perm());
  gens.push_back(sigma_perm(g).perm());
  gens.push_back(alpha_perm(g).perm());
  return gens;
}

} // namespace

GeneratedGroup claimed_aut_group(CayleyGraph const &g)
{
  std::vector<Permutation> gens{translation(g, 1, 0).perm(),
                                translation(g, 0, 1).perm()};
  for (auto &p : stabilizer_generators(g))
    gens.push_back(std::move(p));
  return GeneratedGroup::build(std::move(gens));
}

GeneratedGroup claimed_aut_group(int n) { return claimed_aut_group(build_gamma(n)); }

GeneratedGroup claimed_stabilizer_zero(CayleyGraph const &g)
{
  return GeneratedGroup::build(stabilizer_generators(g));
}

GeneratedGroup claimed_stabilizer_zero(int n)
{
  return claimed_stabilizer_zero(build_gamma(n));
}

GeneratedGroup translation_group(CayleyGraph const &g)
{
  return GeneratedGroup::build(
    {translation(g, 1, 0).perm(), translation(g, 0, 1).perm()});
}

GeneratedGroup clique_permuting_group(CayleyGraph const &g)
{
  return GeneratedGroup::build({sigma_perm(g).perm(), alpha_perm(g).perm()});
}

std::string CliqueActionLabel::to_string() const
{
  std::string s = "[";
  for (std::size_t k = 0; k < 3; ++k) {
    s += "C" + std::to_string(k + 1) + "->C" + std::to_string(image[k] + 1);
    if (k < 2)
      s += ", ";
  }
  return s + "]";
}

CliqueActionLabel compose(CliqueActionLabel const &a, CliqueActionLabel const &b)
{
  CliqueActionLabel result{};
  for (std::size_t k = 0; k < 3; ++k)
    result.image[k] = a.image[static_cast<std::size_t>(b.image[k])];
  return result;
}

CliqueActionLabel clique_action(CayleyGraph const &g, CliqueTriple const &triple,
                                Permutation const &p)
{
  if (p.degree() != g.vertex_count())
    throw std::invalid_argument("permutation degree does not match Γ(n)");
  if (p[0] != 0)
    throw std::invalid_argument("permutation moves (0,0) to " +
                                g.pair(p[0]).to_string());

  CliqueActionLabel label{};
  std::array<bool, 3> hit{false, false, false};

  for (std::size_t k = 0; k < 3; ++k) {
    auto const &clique = triple.c[k];
    Vertex probe = p[clique.front()];

    int target = -1;
    for (std::size_t j = 0; j < 3; ++j) {
      if (std::binary_search(triple.c[j].begin(), triple.c[j].end(), probe))
        target = static_cast<int>(j);
    }
    if (target < 0)
      throw std::invalid_argument("image " + g.pair(probe).to_string() + " of " +
                                  g.pair(clique.front()).to_string() +
                                  " lies in no clique of N((0,0))");

    auto const &dest = triple.c[static_cast<std::size_t>(target)];
    for (Vertex v : clique) {
      if (!std::binary_search(dest.begin(), dest.end(), p[v]))
        throw std::invalid_argument(
          "C" + std::to_string(k + 1) + " is not mapped onto C" +
          std::to_string(target + 1) + ": " + g.pair(v).to_string() + " goes to " +
          g.pair(p[v]).to_string());
    }

    if (hit[static_cast<std::size_t>(target)])
      throw std::invalid_argument("two cliques mapped onto C" +
                                  std::to_string(target + 1));
    hit[static_cast<std::size_t>(target)] = true;
    label.image[k] = target;
  }

  return label;
}

CliqueActionLabel clique_action(CayleyGraph const &g, Permutation const &p)
{
  return clique_action(g, zero_neighborhood_cliques(g), p);
}

} // namespace csrg
