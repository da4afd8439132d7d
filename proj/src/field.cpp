#include "gorlab/field.hpp"

#include <stdexcept>

namespace gorlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view name) {
  if (name == "q" || name == "Q" || name == "rationals") return rationals();
  if (name.size() > 2 && (name.substr(0, 2) == "gf" || name.substr(0, 2) == "GF")) {
    std::uint64_t p = 0;
    for (char c : name.substr(2)) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad field name: " + std::string(name));
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p > 0xffffffffULL) throw std::invalid_argument("field characteristic too large: " + std::string(name));
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("bad field name: " + std::string(name));
}

std::string Field::name() const { return is_rational() ? "q" : "gf" + std::to_string(p_); }

std::uint32_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Scalar Field::reduce(const Scalar& x) const {
  if (is_rational()) return x;
  mpz_class pz(p_);
  mpz_class num = x.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = x.get_den() % pz;
  if (den == 0) throw std::domain_error("denominator vanishes in GF(" + std::to_string(p_) + ")");
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  std::uint64_t v = (n * inverse_mod(d, p_)) % p_;
  return Scalar(static_cast<unsigned long>(v));
}

bool Field::is_zero(const Scalar& x) const { return reduce(x) == 0; }

}  // namespace gorlab
