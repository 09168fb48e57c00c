#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "apap/rational.hpp"

namespace apap {

inline constexpr int kDim = 3;

constexpr int pow_dim(int rank) {
  int n = 1;
  for (int r = 0; r < rank; ++r) n *= kDim;
  return n;
}

/// Dense tensor of Rational entries over the fixed 3-element basis.
/// Index order follows argument order: a rank-4 tensor T stores
/// T(E_i,E_j,E_k,E_l) at (i,j,k,l). Value-initialized to all zeros.
template <int Rank>
class Tensor {
  static_assert(Rank >= 0 && Rank <= 4, "supported ranks are 0..4");

 public:
  static constexpr int rank = Rank;
  static constexpr int entry_count = pow_dim(Rank);
  using Index = std::array<int, Rank>;

  Tensor() = default;

  template <class... Is>
    requires(sizeof...(Is) == Rank && (std::is_convertible_v<Is, int> && ...))
  Rational& operator()(Is... is) {
    return entries_[flatten(Index{static_cast<int>(is)...})];
  }
  template <class... Is>
    requires(sizeof...(Is) == Rank && (std::is_convertible_v<Is, int> && ...))
  const Rational& operator()(Is... is) const {
    return entries_[flatten(Index{static_cast<int>(is)...})];
  }

  Rational& at(const Index& idx) { return entries_[flatten(idx)]; }
  const Rational& at(const Index& idx) const { return entries_[flatten(idx)]; }

  Rational& entry(int flat) { return entries_[check_flat(flat)]; }
  const Rational& entry(int flat) const { return entries_[check_flat(flat)]; }

  // Scalar access for rank-0 tensors (contraction results).
  const Rational& value() const
    requires(Rank == 0)
  {
    return entries_[0];
  }

  static Index unflatten(int flat) {
    Index idx{};
    for (int slot = Rank - 1; slot >= 0; --slot) {
      idx[slot] = flat % kDim;
      flat /= kDim;
    }
    return idx;
  }

  bool is_zero() const {
    for (const Rational& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (int n = 0; n < entry_count; ++n)
      out.entries_[n] = a.entries_[n] + b.entries_[n];
    return out;
  }
  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (int n = 0; n < entry_count; ++n)
      out.entries_[n] = a.entries_[n] - b.entries_[n];
    return out;
  }
  friend Tensor operator-(const Tensor& a) {
    Tensor out;
    for (int n = 0; n < entry_count; ++n) out.entries_[n] = -a.entries_[n];
    return out;
  }
  friend Tensor operator*(const Rational& c, const Tensor& a) {
    Tensor out;
    for (int n = 0; n < entry_count; ++n) out.entries_[n] = c * a.entries_[n];
    return out;
  }
  friend Tensor operator*(const Tensor& a, const Rational& c) { return c * a; }

  Tensor& operator+=(const Tensor& b) { return *this = *this + b; }
  Tensor& operator-=(const Tensor& b) { return *this = *this - b; }

  friend bool operator==(const Tensor& a, const Tensor& b) = default;

  // Nonzero entries as "T[i][j]=v; ..." for diagnostics; "0" if all zero.
  std::string describe() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n < entry_count; ++n) {
      if (entries_[n].is_zero()) continue;
      if (!first) os << "; ";
      first = false;
      os << 'T';
      for (const int i : unflatten(n)) os << '[' << i << ']';
      os << '=' << entries_[n];
    }
    return first ? std::string("0") : os.str();
  }

 private:
  static int check_flat(int flat) {
    if (flat < 0 || flat >= entry_count)
      throw std::out_of_range("tensor entry index out of range");
    return flat;
  }

  static int flatten(const Index& idx) {
    int flat = 0;
    for (const int i : idx) {
      if (i < 0 || i >= kDim)
        throw std::out_of_range("tensor index out of range");
      flat = flat * kDim + i;
    }
    return flat;
  }

  std::array<Rational, entry_count> entries_{};
};

using Vec3 = Tensor<1>;
using Mat3 = Tensor<2>;

template <int Rank, class F>
Tensor<Rank> make_tensor(F&& f) {
  Tensor<Rank> out;
  for (int n = 0; n < Tensor<Rank>::entry_count; ++n)
    out.entry(n) = f(Tensor<Rank>::unflatten(n));
  return out;
}

inline Vec3 basis_vector(int i) {
  Vec3 e;
  e(i) = Rational(1);
  return e;
}

/// Trace over two slots against the inverse metric; the basis is
/// g-orthonormal, so this is the plain index trace.
template <int Rank>
Tensor<Rank - 2> metric_contract(const Tensor<Rank>& t, int slot_a,
                                 int slot_b) {
  static_assert(Rank >= 2, "contraction needs at least two slots");
  if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= Rank ||
      slot_b >= Rank)
    throw std::invalid_argument("invalid contraction slots");
  const int lo = slot_a < slot_b ? slot_a : slot_b;
  const int hi = slot_a < slot_b ? slot_b : slot_a;
  Tensor<Rank - 2> out;
  for (int n = 0; n < Tensor<Rank - 2>::entry_count; ++n) {
    const auto rest = Tensor<Rank - 2>::unflatten(n);
    Rational sum;
    for (int i = 0; i < kDim; ++i) {
      typename Tensor<Rank>::Index full{};
      int next = 0;
      for (int slot = 0; slot < Rank; ++slot)
        full[slot] = (slot == lo || slot == hi) ? i : rest[next++];
      sum += t.at(full);
    }
    out.entry(n) = sum;
  }
  return out;
}

namespace detail {

template <int Rank>
Rational eval_impl(const Tensor<Rank>& t,
                   const std::array<const Vec3*, Rank>& args) {
  Rational total;
  for (int n = 0; n < Tensor<Rank>::entry_count; ++n) {
    const Rational& entry = t.entry(n);
    if (entry.is_zero()) continue;
    const auto idx = Tensor<Rank>::unflatten(n);
    Rational weight = entry;
    for (int slot = 0; slot < Rank; ++slot) weight *= (*args[slot])(idx[slot]);
    total += weight;
  }
  return total;
}

}  // namespace detail

/// Multilinear evaluation of a tensor on vectors, e.g. R(x,y,z,w).
template <int Rank, class... Vs>
  requires(sizeof...(Vs) == Rank &&
           (std::is_same_v<std::remove_cvref_t<Vs>, Vec3> && ...))
Rational eval(const Tensor<Rank>& t, const Vs&... vs) {
  return detail::eval_impl<Rank>(t, {&vs...});
}

}  // namespace apap
