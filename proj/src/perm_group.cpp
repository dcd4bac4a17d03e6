#include "csrg/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace csrg
{

namespace
{

// Above this degree transversals are kept as Schreier vectors instead of
// explicit coset representatives.
constexpr std::size_t explicit_transversal_limit = 2500;

} // namespace

TupleOrbit::TupleOrbit(std::size_t degree, std::size_t arity,
                       std::vector<std::uint64_t> sorted_codes)
: _degree(degree), _arity(arity), _codes(std::move(sorted_codes))
{}

bool TupleOrbit::contains(std::span<Vertex const> tuple) const
{
  if (tuple.size() != _arity)
    return false;
  for (Vertex v : tuple) {
    if (v >= _degree)
      return false;
  }
  return std::binary_search(_codes.begin(), _codes.end(),
                            encode_tuple(tuple, _degree));
}

std::vector<Vertex> TupleOrbit::min() const
{
  if (_codes.empty())
    return {};
  return decode_tuple(_codes.front(), _arity, _degree);
}

std::vector<Vertex> TupleOrbit::at(std::size_t index) const
{
  return decode_tuple(_codes.at(index), _arity, _degree);
}

std::vector<std::vector<Vertex>> TupleOrbit::members() const
{
  std::vector<std::vector<Vertex>> result;
  result.reserve(_codes.size());
  for (auto code : _codes)
    result.push_back(decode_tuple(code, _arity, _degree));
  return result;
}

std::uint64_t encode_tuple(std::span<Vertex const> tuple, std::size_t degree)
{
  std::uint64_t code = 0;
  for (Vertex v : tuple)
    code = code * degree + v;
  return code;
}

std::vector<Vertex> decode_tuple(std::uint64_t code, std::size_t arity,
                                 std::size_t degree)
{
  std::vector<Vertex> tuple(arity);
  for (std::size_t k = arity; k-- > 0;) {
    tuple[k] = static_cast<Vertex>(code % degree);
    code /= degree;
  }
  return tuple;
}

GeneratedGroup GeneratedGroup::build(std::vector<Permutation> generators,
                                     std::span<Vertex const> base_prefix)
{
  if (generators.empty())
    throw std::invalid_argument("group needs at least one generator");

  GeneratedGroup g;
  g._degree = generators.front().degree();

  for (auto const &gen : generators) {
    if (gen.degree() != g._degree)
      throw std::invalid_argument("generator degree mismatch: " +
                                  std::to_string(gen.degree()) + " vs " +
                                  std::to_string(g._degree));
  }
  g._generators = std::move(generators);

  for (auto const &gen : g._generators) {
    if (gen.is_identity())
      continue;
    if (std::find(g._strong.begin(), g._strong.end(), gen) != g._strong.end())
      continue;
    g._strong.push_back(gen);
  }
  for (auto const &s : g._strong)
    g._strong_inverses.push_back(inverse(s));

  for (Vertex b : base_prefix) {
    if (b >= g._degree)
      throw std::out_of_range("base point " + std::to_string(b) +
                              " outside degree " + std::to_string(g._degree));
    bool seen = std::any_of(g._levels.begin(), g._levels.end(),
                            [b](Level const &l) { return l.base_point == b; });
    if (!seen)
      g.add_level(b);
  }

  for (auto const &s : g._strong) {
    bool fixes_base = std::all_of(
      g._levels.begin(), g._levels.end(),
      [&s](Level const &l) { return s[l.base_point] == l.base_point; });
    if (fixes_base)
      g.add_level(s.smallest_moved_point());
  }

  for (std::size_t idx = 0; idx < g._strong.size(); ++idx) {
    for (auto &level : g._levels) {
      level.generators.push_back(idx);
      if (g._strong[idx][level.base_point] != level.base_point)
        break;
    }
  }

  for (std::size_t l = 0; l < g._levels.size(); ++l)
    g.rebuild_transversal(l);

  g.complete();
  return g;
}

void GeneratedGroup::add_level(Vertex base_point)
{
  Level level;
  level.base_point = base_point;
  _levels.push_back(std::move(level));
}

void GeneratedGroup::rebuild_transversal(std::size_t l)
{
  Level &level = _levels[l];
  bool explicit_reps = _degree <= explicit_transversal_limit;

  level.reps.clear();
  level.rep_inverses.clear();
  if (explicit_reps) {
    level.reps.push_back(Permutation::identity(_degree));
    level.rep_inverses.push_back(Permutation::identity(_degree));
  }

  auto grow = [&] {
    level.orbit.assign(1, level.base_point);
    level.slot.assign(_degree, -1);
    level.slot[level.base_point] = 0;
    level.edge_label.assign(1, -1);
    level.parent.assign(1, level.base_point);

    auto visit = [&](std::size_t k, Vertex q, std::int32_t label) {
      if (level.slot[q] >= 0)
        return;
      level.slot[q] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(q);
      level.edge_label.push_back(label);
      level.parent.push_back(level.orbit[k]);
      if (explicit_reps) {
        Permutation rep = compose(edge(level, label), level.reps[k]);
        level.rep_inverses.push_back(inverse(rep));
        level.reps.push_back(std::move(rep));
      }
    };

    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      Vertex p = level.orbit[k];
      for (std::size_t gi : level.generators)
        visit(k, _strong[gi][p], static_cast<std::int32_t>(gi));
      for (std::size_t j = 0; j < level.jumps.size(); ++j)
        visit(k, level.jumps[j][p], -2 - static_cast<std::int32_t>(j));
    }
  };

  grow();
  if (explicit_reps)
    return;

  // Path length bounds the cost of every representative and sift, so deep
  // trees get the representative of their deepest point as an extra edge.
  std::size_t max_depth = 2 * std::bit_width(level.orbit.size());
  for (int round = 0; round < 64; ++round) {
    std::vector<std::size_t> depth(level.orbit.size(), 0);
    std::size_t deepest = 0;
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      depth[k] = depth[static_cast<std::size_t>(level.slot[level.parent[k]])] + 1;
      if (depth[k] > depth[deepest])
        deepest = k;
    }
    if (depth[deepest] <= max_depth)
      break;

    Permutation jump = representative(l, level.orbit[deepest]);
    level.jump_inverses.push_back(inverse(jump));
    level.jumps.push_back(std::move(jump));
    grow();
  }
}

Permutation const &GeneratedGroup::edge(Level const &level, std::int32_t label) const
{
  if (label >= 0)
    return _strong[static_cast<std::size_t>(label)];
  return level.jumps[static_cast<std::size_t>(-2 - label)];
}

Permutation const &GeneratedGroup::edge_inverse(Level const &level,
                                                std::int32_t label) const
{
  if (label >= 0)
    return _strong_inverses[static_cast<std::size_t>(label)];
  return level.jump_inverses[static_cast<std::size_t>(-2 - label)];
}

Permutation GeneratedGroup::representative(std::size_t l, Vertex point) const
{
  Level const &level = _levels[l];
  auto k = static_cast<std::size_t>(level.slot[point]);

  if (!level.reps.empty())
    return level.reps[k];

  Permutation result = Permutation::identity(_degree);
  while (level.edge_label[k] != -1) {
    result = compose(result, edge(level, level.edge_label[k]));
    k = static_cast<std::size_t>(level.slot[level.parent[k]]);
  }
  return result;
}

void GeneratedGroup::unsift(std::size_t l, Vertex point, Permutation &p) const
{
  Level const &level = _levels[l];
  auto k = static_cast<std::size_t>(level.slot[point]);

  if (!level.reps.empty()) {
    p = compose(level.rep_inverses[k], p);
    return;
  }

  while (level.edge_label[k] != -1) {
    p = compose(edge_inverse(level, level.edge_label[k]), p);
    k = static_cast<std::size_t>(level.slot[level.parent[k]]);
  }
}

std::pair<Permutation, std::size_t>
GeneratedGroup::strip(Permutation p, std::size_t from) const
{
  for (std::size_t l = from; l < _levels.size(); ++l) {
    Vertex image = p[_levels[l].base_point];
    if (_levels[l].slot[image] < 0)
      return {std::move(p), l};
    unsift(l, image, p);
  }
  return {std::move(p), _levels.size()};
}

void GeneratedGroup::complete()
{
  std::size_t i = _levels.size();

  while (i > 0) {
    std::size_t current = i - 1;
    bool extended = false;

    Level const &level = _levels[current];
    for (std::size_t k = 0; !extended && k < level.orbit.size(); ++k) {
      Vertex p = level.orbit[k];
      Permutation rep = representative(current, p);

      for (std::size_t gi : level.generators) {
        Permutation schreier = compose(_strong[gi], rep);
        unsift(current, _strong[gi][p], schreier);
        if (schreier.is_identity())
          continue;

        auto [residue, stop] = strip(std::move(schreier), current + 1);
        if (stop == _levels.size() && residue.is_identity())
          continue;

        if (stop == _levels.size())
          add_level(residue.smallest_moved_point());

        std::size_t idx = _strong.size();
        _strong_inverses.push_back(inverse(residue));
        _strong.push_back(std::move(residue));
        for (std::size_t l = current + 1; l <= stop; ++l) {
          _levels[l].generators.push_back(idx);
          rebuild_transversal(l);
        }

        i = stop + 1;
        extended = true;
        break;
      }
    }

    if (!extended)
      --i;
  }
}

std::vector<Vertex> GeneratedGroup::base() const
{
  std::vector<Vertex> result;
  for (auto const &level : _levels)
    result.push_back(level.base_point);
  return result;
}

std::size_t GeneratedGroup::transversal_size(std::size_t level) const
{
  return _levels.at(level).orbit.size();
}

BigInt GeneratedGroup::order() const
{
  BigInt result = 1;
  for (auto const &level : _levels)
    result *= level.orbit.size();
  return result;
}

bool GeneratedGroup::contains(Permutation const &p) const
{
  if (p.degree() != _degree)
    throw std::invalid_argument("membership test degree mismatch: " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(_degree));

  auto [residue, stop] = strip(p, 0);
  return stop == _levels.size() && residue.is_identity();
}

std::vector<Vertex> GeneratedGroup::orbit_of_point(Vertex v) const
{
  if (v >= _degree)
    throw std::out_of_range("point " + std::to_string(v) +
                            " outside degree " + std::to_string(_degree));

  std::vector<bool> seen(_degree, false);
  std::vector<Vertex> orbit{v};
  seen[v] = true;

  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (auto const &gen : _generators) {
      Vertex w = gen[orbit[k]];
      if (!seen[w]) {
        seen[w] = true;
        orbit.push_back(w);
      }
    }
  }

  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

GeneratedGroup GeneratedGroup::tail(std::size_t from_level) const
{
  GeneratedGroup g;
  g._degree = _degree;

  std::vector<std::int64_t> remap(_strong.size(), -1);
  for (std::size_t l = from_level; l < _levels.size(); ++l) {
    for (std::size_t gi : _levels[l].generators) {
      if (remap[gi] < 0) {
        remap[gi] = static_cast<std::int64_t>(g._strong.size());
        g._strong.push_back(_strong[gi]);
        g._strong_inverses.push_back(_strong_inverses[gi]);
      }
    }
  }

  if (from_level < _levels.size()) {
    for (std::size_t gi : _levels[from_level].generators)
      g._generators.push_back(_strong[gi]);
  }
  if (g._generators.empty())
    g._generators.push_back(Permutation::identity(_degree));

  for (std::size_t l = from_level; l < _levels.size(); ++l) {
    Level level = _levels[l];
    for (auto &gi : level.generators)
      gi = static_cast<std::size_t>(remap[gi]);
    for (auto &label : level.edge_label) {
      if (label >= 0)
        label = static_cast<std::int32_t>(remap[static_cast<std::size_t>(label)]);
    }
    g._levels.push_back(std::move(level));
  }

  // Levels whose orbit is trivial carry no information.
  while (!g._levels.empty() && g._levels.back().orbit.size() == 1)
    g._levels.pop_back();

  return g;
}

GeneratedGroup GeneratedGroup::point_stabilizer(Vertex v) const
{
  if (v >= _degree)
    throw std::out_of_range("point " + std::to_string(v) +
                            " outside degree " + std::to_string(_degree));

  if (!_levels.empty() && _levels.front().base_point == v)
    return tail(1);

  std::vector<Permutation> gens = _strong;
  if (gens.empty())
    gens.push_back(Permutation::identity(_degree));

  Vertex prefix[] = {v};
  return build(std::move(gens), prefix).tail(1);
}

TupleOrbit GeneratedGroup::orbit_of_tuple(std::span<Vertex const> tuple) const
{
  if (tuple.empty() || tuple.size() > 3)
    throw std::invalid_argument("tuple length must be 1, 2 or 3");
  for (Vertex v : tuple) {
    if (v >= _degree)
      throw std::out_of_range("tuple entry " + std::to_string(v) +
                              " outside degree " + std::to_string(_degree));
  }

  std::size_t arity = tuple.size();
  std::uint64_t start = encode_tuple(tuple, _degree);

  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> queue{start};
  std::vector<Vertex> current(arity), image(arity);

  for (std::size_t k = 0; k < queue.size(); ++k) {
    current = decode_tuple(queue[k], arity, _degree);
    for (auto const &gen : _generators) {
      for (std::size_t t = 0; t < arity; ++t)
        image[t] = gen[current[t]];
      std::uint64_t code = encode_tuple(image, _degree);
      if (seen.insert(code).second)
        queue.push_back(code);
    }
  }

  std::sort(queue.begin(), queue.end());
  return TupleOrbit(_degree, arity, std::move(queue));
}

std::vector<Permutation> GeneratedGroup::elements(std::size_t limit) const
{
  if (order() > limit)
    throw std::length_error("group of order " + order().str() +
                            " exceeds enumeration limit " +
                            std::to_string(limit));

  std::vector<Permutation> result{Permutation::identity(_degree)};

  // g = u_0 u_1 ... u_k, so extend from the deepest level upwards.
  for (std::size_t l = _levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(result.size() * _levels[l].orbit.size());
    for (Vertex point : _levels[l].orbit) {
      Permutation rep = representative(l, point);
      for (auto const &tail_element : result)
        next.push_back(compose(rep, tail_element));
    }
    result = std::move(next);
  }

  std::sort(result.begin(), result.end());
  return result;
}

bool GeneratedGroup::verify_chain() const
{
  for (std::size_t l = 0; l < _levels.size(); ++l) {
    Level const &level = _levels[l];

    for (std::size_t gi : level.generators) {
      for (std::size_t e = 0; e < l; ++e) {
        Vertex b = _levels[e].base_point;
        if (_strong[gi][b] != b)
          return false;
      }
    }

    for (Vertex point : level.orbit) {
      if (representative(l, point)[level.base_point] != point)
        return false;
    }
  }

  return std::all_of(_generators.begin(), _generators.end(),
                     [this](Permutation const &p) { return contains(p); });
}

} // namespace csrg
