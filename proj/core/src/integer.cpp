#include "spinc/integer.hpp"

#include <sstream>

#include "spinc/error.hpp"

namespace spinc {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer div_floor(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::Internal, "mod_inverse: not invertible");
  return mod_floor(r, m);
}

bool is_unit(const Integer& a) { return a == 1 || a == -1; }

std::int64_t to_int64(const Integer& a) {
  if (!a.fits_slong_p()) fail(ErrorCode::OutOfRange, "integer does not fit in 64 bits");
  return a.get_si();
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace spinc
