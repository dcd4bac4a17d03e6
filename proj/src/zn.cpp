#include "csrg/zn.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csrg
{

namespace
{

int mod(long long x, int n)
{
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_same_modulus(ZnPair const &a, ZnPair const &b)
{
  if (a.n() != b.n()) {
    throw std::invalid_argument("modulus mismatch: " + a.to_string() +
                                " (mod " + std::to_string(a.n()) + ") vs " +
                                b.to_string() + " (mod " +
                                std::to_string(b.n()) + ")");
  }
}

} // namespace

ZnPair::ZnPair(int n, int i, int j)
: _n(n), _i(i), _j(j)
{
  if (n < min_modulus)
    throw std::invalid_argument("modulus must be at least 4, got " +
                                std::to_string(n));

  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("residue out of range for modulus " +
                                std::to_string(n) + ": (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
}

ZnPair ZnPair::reduced(int n, long long i, long long j)
{
  if (n < min_modulus)
    throw std::invalid_argument("modulus must be at least 4, got " +
                                std::to_string(n));

  return ZnPair(n, mod(i, n), mod(j, n));
}

std::string ZnPair::to_string() const
{
  return "(" + std::to_string(_i) + "," + std::to_string(_j) + ")";
}

std::ostream &operator<<(std::ostream &os, ZnPair const &p)
{
  return os << p.to_string();
}

Vertex vertex_index(ZnPair const &p)
{
  return static_cast<Vertex>(p.i()) * static_cast<Vertex>(p.n()) +
         static_cast<Vertex>(p.j());
}

ZnPair pair_of(Vertex v, int n)
{
  if (n < min_modulus)
    throw std::invalid_argument("modulus must be at least 4, got " +
                                std::to_string(n));

  auto un = static_cast<Vertex>(n);
  if (v >= un * un)
    throw std::out_of_range("vertex index " + std::to_string(v) +
                            " out of range for modulus " + std::to_string(n));

  return ZnPair(n, static_cast<int>(v / un), static_cast<int>(v % un));
}

ZnPair pair_add(ZnPair const &a, ZnPair const &b)
{
  check_same_modulus(a, b);
  return ZnPair::reduced(a.n(), static_cast<long long>(a.i()) + b.i(),
                         static_cast<long long>(a.j()) + b.j());
}

ZnPair pair_neg(ZnPair const &a)
{
  return ZnPair::reduced(a.n(), -static_cast<long long>(a.i()),
                         -static_cast<long long>(a.j()));
}

ZnPair pair_sub(ZnPair const &a, ZnPair const &b)
{
  check_same_modulus(a, b);
  return ZnPair::reduced(a.n(), static_cast<long long>(a.i()) - b.i(),
                         static_cast<long long>(a.j()) - b.j());
}

ZnPair pair_scale(ZnPair const &a, long long u)
{
  long long s = mod(u, a.n());
  return ZnPair::reduced(a.n(), s * a.i(), s * a.j());
}

UnitGroup::UnitGroup(int n)
: _n(n)
{
  if (n < 2)
    throw std::invalid_argument("unit group needs n >= 2, got " +
                                std::to_string(n));

  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1)
      _units.push_back(u);
  }
}

bool UnitGroup::contains(long long u) const
{
  return std::binary_search(_units.begin(), _units.end(), mod(u, _n));
}

int UnitGroup::inverse(long long u) const
{
  int r = mod(u, _n);
  if (!contains(r))
    throw std::invalid_argument(std::to_string(u) + " is not a unit mod " +
                                std::to_string(_n));

  for (int v : _units) {
    if ((static_cast<long long>(r) * v) % _n == 1)
      return v;
  }

  throw std::logic_error("unit without inverse");
}

UnitGroup units(int n) { return UnitGroup(n); }

int euler_phi(int n)
{
  if (n < 1)
    throw std::invalid_argument("totient needs n >= 1");

  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0)
        m /= p;
      result -= result / p;
    }
  }
  if (m > 1)
    result -= result / m;

  return result;
}

bool is_prime(int n)
{
  if (n < 2)
    return false;

  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

int smallest_proper_factor(int n)
{
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return d;
  }
  return 0;
}

} // namespace csrg
