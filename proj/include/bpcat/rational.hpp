#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bpcat {

/// Exact rational scalar. All field coefficients, weights and exponents in
/// the workbench are mpq-backed so arithmetic never rounds.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw std::invalid_argument("to_long: not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: out of range");
    return r.get_num().get_si();
}

inline long den_long(const Rat& r) {
    if (!r.get_den().fits_slong_p()) throw std::overflow_error("den_long: out of range");
    return r.get_den().get_si();
}

/// r mod m reduced into [0, m), m > 0.
inline Rat rat_mod(const Rat& r, const Rat& m) {
    mpz_class fl;
    Rat q = r / m;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r - Rat(fl) * m;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational: " + s);
    r.canonicalize();
    return r;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace bpcat
