#include "syz/binomial.hpp"

#include <limits>
#include <string>

#include "syz/errors.hpp"

namespace syz {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
  }
  BigInt result = 1;
  BigInt top = a;
  for (std::int64_t j = 1; j <= b; ++j) {
    result *= top;
    result /= j;  // exact: C(a, j-1) * (a-j+1) = j * C(a, j)
    top -= 1;
  }
  return result;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) {
    throw Error("integer " + value.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace syz
