#ifndef CSRG_BITSET_HPP
#define CSRG_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace csrg
{

/// Fixed-size bitset sized at runtime. Bits beyond size() are always zero.
class Bitset
{
public:
  Bitset() = default;
  explicit Bitset(std::size_t size)
  : _size(size), _words((size + 63) / 64, 0)
  {}

  std::size_t size() const { return _size; }

  bool test(std::size_t bit) const
  { return (_words[bit >> 6] >> (bit & 63)) & 1u; }

  void set(std::size_t bit) { _words[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  void reset(std::size_t bit) { _words[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63)); }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto w : _words)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const
  {
    for (auto w : _words) {
      if (w)
        return false;
    }
    return true;
  }

  /// Popcount of the intersection, without materialising it.
  std::size_t and_count(Bitset const &other) const
  {
    std::size_t c = 0;
    for (std::size_t k = 0; k < _words.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(_words[k] & other._words[k]));
    return c;
  }

  Bitset &operator&=(Bitset const &other)
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] &= other._words[k];
    return *this;
  }

  Bitset &operator|=(Bitset const &other)
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] |= other._words[k];
    return *this;
  }

  /// this &= ~other
  Bitset &subtract(Bitset const &other)
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] &= ~other._words[k];
    return *this;
  }

  /// Smallest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const
  {
    if (from >= _size)
      return _size;

    std::size_t k = from >> 6;
    std::uint64_t w = _words[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w)
        return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == _words.size())
        return _size;
      w = _words[k];
    }
  }

  std::size_t find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F &&f) const
  {
    for (std::size_t k = 0; k < _words.size(); ++k) {
      std::uint64_t w = _words[k];
      while (w) {
        f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(Bitset const &, Bitset const &) = default;

private:
  std::size_t _size = 0;
  std::vector<std::uint64_t> _words;
};

} // namespace csrg

#endif // CSRG_BITSET_HPP
