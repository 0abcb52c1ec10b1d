#include "halphen/invariants.hpp"

#include <stdexcept>

#include "halphen/errors.hpp"

namespace halphen {

namespace {

std::int64_t integer_coefficient(const Rational& c, const char* what) {
  if (!is_integer(c))
    throw MalformedHilbertPolynomial(std::string("non-integer ") + what + " " + to_string(c));
  return to_int64(c.get_num());
}

}  // namespace

ProjectiveInvariants invariants_of(const HilbertPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("invariants_of: zero Hilbert polynomial (empty set)");
  ProjectiveInvariants inv;
  inv.dimension = *p.degree();
  switch (inv.dimension) {
    case 0:
      inv.degree = integer_coefficient(p.coefficient(0), "point count");
      break;
    case 1:
      inv.degree = integer_coefficient(p.coefficient(1), "degree");
      inv.genus = 1 - integer_coefficient(p.coefficient(0), "constant term");
      break;
    default: {
      Rational scaled = p.coefficient(inv.dimension);
      for (unsigned k = 2; k <= inv.dimension; ++k) scaled *= k;
      inv.degree = integer_coefficient(scaled, "normalized leading coefficient");
      inv.degree_is_extension = true;
      break;
    }
  }
  if (inv.degree < 1) throw MalformedHilbertPolynomial("non-positive degree");
  return inv;
}

std::int64_t plane_genus(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("plane_genus: degree must be positive");
  return (d - 1) * (d - 2) / 2;
}

HilbertPolynomial plane_hilbert_polynomial(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("plane_hilbert_polynomial: degree must be positive");
  // (m+2 choose 2) - (m-d+2 choose 2)
  return HilbertPolynomial::binomial(2, 2) - HilbertPolynomial::binomial(2 - d, 2);
}

}  // namespace halphen
