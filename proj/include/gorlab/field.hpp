#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gorlab {

using Scalar = mpq_class;

/// Coefficient field: the rationals, or GF(p) for a prime p.
///
/// Prime-field elements are stored as rationals in canonical form, i.e.
/// integers in [0, p). All arithmetic is done over Q and then pushed
/// through reduce().
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "q", "gf2", "gf32003", or "gfP" for any prime P.
  static Field parse(std::string_view name);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar reduce(const Scalar& x) const;
  bool is_zero(const Scalar& x) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

std::uint32_t inverse_mod(std::uint64_t a, std::uint32_t p);

}  // namespace gorlab
