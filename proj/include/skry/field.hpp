#pragma once

// Exact arithmetic in GF(2^k), 1 <= k <= 16, polynomial basis.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skry/error.hpp"

namespace skry {

/// Field element: coefficient bits in the polynomial basis (bit i <-> x^i).
struct Felt {
  std::uint32_t bits = 0;

  constexpr Felt() = default;
  constexpr explicit Felt(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(Felt, Felt) = default;
  friend constexpr auto operator<=>(Felt, Felt) = default;
};

/// Pinned moduli, one per degree. Every entry is a primitive polynomial, so
/// the class of x generates the multiplicative group.
inline constexpr std::array<std::uint32_t, 17> kPinnedModuli = {
    0x0,      // unused
    0x3,      // k=1: x + 1 (GF(2); reduction is never needed)
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

/// GF(2^k) with the pinned modulus. Cheap value type (two words).
class Field {
 public:
  constexpr Field() = default;  // GF(2)

  constexpr explicit Field(int k) : k_(k) {
    if (k < 1 || k > 16) throw Error(ErrorKind::InvalidArgument, "extension degree must be in 1..16");
    modulus_ = kPinnedModuli[static_cast<std::size_t>(k)];
  }

  static Field gf2() { return Field(1); }

  /// Accepts `gf2` and `gf2^k`.
  static Field parse(std::string_view name) {
    if (name == "gf2") return Field(1);
    constexpr std::string_view prefix = "gf2^";
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size())
      throw Error(ErrorKind::Parse, "unknown field '" + std::string(name) + "'");
    int k = 0;
    for (char c : name.substr(prefix.size())) {
      if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "unknown field '" + std::string(name) + "'");
      k = k * 10 + (c - '0');
      if (k > 16) break;
    }
    return Field(k);
  }

  constexpr int degree() const { return k_; }
  constexpr std::uint32_t modulus() const { return modulus_; }
  constexpr std::uint32_t order() const { return std::uint32_t{1} << k_; }
  constexpr bool is_prime() const { return k_ == 1; }

  std::string name() const { return k_ == 1 ? "gf2" : "gf2^" + std::to_string(k_); }

  constexpr bool contains(Felt a) const { return a.bits < order(); }

  Felt element(std::uint32_t bits) const {
    Felt a(bits);
    check(a);
    return a;
  }

  static constexpr Felt zero() { return Felt(0); }
  static constexpr Felt one() { return Felt(1); }

  /// The class of x; a generator of the multiplicative group for k > 1.
  Felt generator() const { return k_ == 1 ? Felt(1) : Felt(2); }

  Felt add(Felt a, Felt b) const {
    check(a);
    check(b);
    return Felt(a.bits ^ b.bits);
  }

  Felt mul(Felt a, Felt b) const {
    check(a);
    check(b);
    return mul_unchecked(a, b);
  }

  /// Caller guarantees both operands belong to this field.
  Felt mul_unchecked(Felt a, Felt b) const {
    if (k_ == 1) return Felt(a.bits & b.bits);
    std::uint32_t x = a.bits, y = b.bits, r = 0;
    const std::uint32_t top = std::uint32_t{1} << k_;
    while (y != 0) {
      if (y & 1u) r ^= x;
      y >>= 1;
      x <<= 1;
      if (x & top) x ^= modulus_;
    }
    return Felt(r);
  }

  Felt square(Felt a) const { return mul(a, a); }

  /// a^e for e >= 0; negative e requires a != 0.
  Felt pow(Felt a, long long e) const {
    check(a);
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    Felt result = one();
    while (e > 0) {
      if (e & 1) result = mul_unchecked(result, a);
      a = mul_unchecked(a, a);
      e >>= 1;
    }
    return result;
  }

  Felt inv(Felt a) const {
    check(a);
    if (a.is_zero()) throw Error(ErrorKind::ZeroInverse, "fe_inv(0)");
    // a^(2^k - 2)
    return pow(a, static_cast<long long>(order()) - 2);
  }

  /// Unique square root: a^(2^(k-1)) via k-1 squarings.
  Felt sqrt(Felt a) const {
    check(a);
    for (int i = 1; i < k_; ++i) a = mul_unchecked(a, a);
    return a;
  }

  /// All q elements in bit order.
  std::vector<Felt> elements() const {
    std::vector<Felt> out;
    out.reserve(order());
    for (std::uint32_t b = 0; b < order(); ++b) out.emplace_back(b);
    return out;
  }

  friend constexpr bool operator==(const Field&, const Field&) = default;

 private:
  void check(Felt a) const {
    if (!contains(a))
      throw Error(ErrorKind::FieldMismatch,
                  "element 0x" + to_hex(a.bits) + " does not belong to " + name());
  }

  static std::string to_hex(std::uint32_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    do {
      s.insert(s.begin(), digits[v & 0xF]);
      v >>= 4;
    } while (v != 0);
    return s;
  }

  int k_ = 1;
  std::uint32_t modulus_ = 0x3;
};

}  // namespace skry
