#pragma once

#include <concepts>
#include <cstdint>

namespace strongcomp {

/// Access policy for the production path: every access is a plain load or
/// store and the charge hooks vanish.
struct Uncounted {
  static constexpr bool counting = false;

  template<class T>
  constexpr T const& read(T const& x) const noexcept
  {
    return x;
  }

  template<class T, class U>
  constexpr void write(T& x, U value) const noexcept
  {
    x = static_cast<T>(value);
  }

  constexpr void charge_read(std::uint64_t = 1) const noexcept {}
  constexpr void charge_write(std::uint64_t = 1) const noexcept {}
};

/// Access policy that tallies reads and writes of per-vertex and per-arc
/// words under the unit-cost memory model. Values the algorithms hold in
/// registers are accessed directly and never pass through here.
struct AccessCounter {
  static constexpr bool counting = true;

  std::uint64_t reads = 0;
  std::uint64_t writes = 0;

  template<class T>
  T const& read(T const& x) noexcept
  {
    ++reads;
    return x;
  }

  template<class T, class U>
  void write(T& x, U value) noexcept
  {
    ++writes;
    x = static_cast<T>(value);
  }

  void charge_read(std::uint64_t k = 1) noexcept { reads += k; }
  void charge_write(std::uint64_t k = 1) noexcept { writes += k; }

  [[nodiscard]] std::uint64_t total() const noexcept { return reads + writes; }
};

template<class M>
concept AccessPolicy = requires(M& m, int& x) {
  { M::counting } -> std::convertible_to<bool>;
  m.read(x);
  m.write(x, 1);
  m.charge_read();
  m.charge_write();
};

} // namespace strongcomp
