#ifndef CSRG_REGULARITY_HPP
#define CSRG_REGULARITY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "csrg/graph.hpp"

namespace csrg
{

/// Why an analysis declined to certify a property, with the pair of vertices
/// that exposed it when there is one.
struct Refusal
{
  std::string reason;
  std::optional<std::pair<Vertex, Vertex>> witness;
};

/// Either a certified value or a refusal.
template <typename T>
class Verdict
{
public:
  Verdict(T value) : _state(std::move(value)) {}
  Verdict(Refusal refusal) : _state(std::move(refusal)) {}

  bool ok() const { return std::holds_alternative<T>(_state); }
  explicit operator bool() const { return ok(); }

  T const &value() const
  {
    if (!ok())
      throw std::logic_error("verdict refused: " + refusal().reason);
    return std::get<T>(_state);
  }

  Refusal const &refusal() const { return std::get<Refusal>(_state); }

private:
  std::variant<T, Refusal> _state;
};

struct SrgParams
{
  long long v, k, lambda, mu;

  /// k(k - λ - 1) = (v - k - 1)μ
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }

  friend bool operator==(SrgParams const &, SrgParams const &) = default;
};

/// {b_0, ..., b_{D-1}; c_1, ..., c_D}
struct IntersectionArray
{
  std::vector<long long> b;
  std::vector<long long> c;

  int diameter() const { return static_cast<int>(c.size()); }
  std::string to_string() const;

  friend bool operator==(IntersectionArray const &,
                         IntersectionArray const &) = default;
};

/// Exhaustive λ/μ certification over all vertex pairs (bitset popcounts).
Verdict<SrgParams> check_strongly_regular(SimpleGraph const &g);

/// Counts, for every ordered pair (u, v) at distance i, the neighbours of u at
/// distance i-1 and i+1 from v, and certifies they depend only on i.
Verdict<IntersectionArray> intersection_array(SimpleGraph const &g);

/// Maximum BFS eccentricity; refuses disconnected graphs.
Verdict<int> diameter(SimpleGraph const &g);

/// All-pairs BFS distance matrix, row per source.
std::vector<std::vector<int>> distance_matrix(SimpleGraph const &g);

} // namespace csrg

#endif // CSRG_REGULARITY_HPP
