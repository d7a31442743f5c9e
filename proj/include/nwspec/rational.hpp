// Exact rational arithmetic helpers on top of GMP.
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace nwspec {

using Rat = mpq_class;
using Int = mpz_class;

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of long range");
    return z.get_si();
}

// Fractional part in [0,1).
inline Rat frac_part(const Rat& r) { return r - Rat(floor_rat(r)); }

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// "a/b" or "a" when b == 1; never decimal.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace nwspec
