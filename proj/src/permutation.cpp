#include "csrg/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csrg
{

Permutation::Permutation(std::vector<Vertex> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);

  for (std::size_t v = 0; v < _images.size(); ++v) {
    Vertex w = _images[v];
    if (w >= _images.size())
      throw std::invalid_argument("image " + std::to_string(w) + " of " +
                                  std::to_string(v) + " exceeds degree " +
                                  std::to_string(_images.size()));
    if (seen[w])
      throw std::invalid_argument("not a bijection: " + std::to_string(w) +
                                  " is hit twice");
    seen[w] = true;
  }
}

Permutation::Permutation(std::vector<Vertex> images, unchecked_tag)
: _images(std::move(images))
{}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images), unchecked_tag{});
}

Vertex Permutation::apply(Vertex v) const
{
  if (v >= _images.size())
    throw std::out_of_range("point " + std::to_string(v) +
                            " outside permutation of degree " +
                            std::to_string(_images.size()));
  return _images[v];
}

bool Permutation::is_identity() const
{
  return smallest_moved_point() == _images.size();
}

Vertex Permutation::smallest_moved_point() const
{
  for (std::size_t v = 0; v < _images.size(); ++v) {
    if (_images[v] != v)
      return static_cast<Vertex>(v);
  }
  return static_cast<Vertex>(_images.size());
}

std::string Permutation::to_cycle_string() const
{
  std::ostringstream os;
  std::vector<bool> done(_images.size(), false);

  for (std::size_t start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;

    os << '(';
    Vertex v = static_cast<Vertex>(start);
    bool first = true;
    while (!done[v]) {
      if (!first)
        os << ' ';
      os << v;
      done[v] = true;
      v = _images[v];
      first = false;
    }
    os << ')';
  }

  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation compose(Permutation const &f, Permutation const &g)
{
  if (f.degree() != g.degree())
    throw std::invalid_argument("degree mismatch in compose: " +
                                std::to_string(f.degree()) + " vs " +
                                std::to_string(g.degree()));

  std::vector<Vertex> images(g.degree());
  for (std::size_t v = 0; v < images.size(); ++v)
    images[v] = f._images[g._images[v]];

  return Permutation(std::move(images), Permutation::unchecked_tag{});
}

Permutation inverse(Permutation const &f)
{
  std::vector<Vertex> images(f.degree());
  for (std::size_t v = 0; v < images.size(); ++v)
    images[f._images[v]] = static_cast<Vertex>(v);

  return Permutation(std::move(images), Permutation::unchecked_tag{});
}

std::size_t element_order(Permutation const &f)
{
  std::size_t result = 1;
  std::vector<bool> done(f.degree(), false);

  for (std::size_t start = 0; start < f.degree(); ++start) {
    if (done[start])
      continue;

    std::size_t len = 0;
    for (Vertex v = static_cast<Vertex>(start); !done[v]; v = f[v]) {
      done[v] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation permutation_from_pair_map(
  int n, std::function<ZnPair(ZnPair const &)> const &map)
{
  auto degree = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<Vertex> images(degree);

  for (std::size_t v = 0; v < degree; ++v) {
    ZnPair image = map(pair_of(static_cast<Vertex>(v), n));
    if (image.n() != n)
      throw std::invalid_argument("pair map changed the modulus");
    images[v] = vertex_index(image);
  }

  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ull;
  for (Vertex v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace csrg
