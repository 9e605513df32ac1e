#pragma once

// Integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mordell {

using Int = mpz_class;
using Rat = mpq_class;

// Prime -> exponent.
using Factorization = std::map<Int, unsigned>;

Int int_from_string(const std::string& s);
Rat rat_from_string(const std::string& s);
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

Int ipow(const Int& base, unsigned long e);
Int isqrt(const Int& v);           // floor sqrt, v >= 0
bool is_square(const Int& v, Int* root = nullptr);
// Exact integer cube root if v is a perfect cube.
bool is_cube(const Int& v, Int* root = nullptr);
Int icbrt_floor(const Int& v);

bool is_prime(const Int& p);

// p-adic valuation of a nonzero integer.
unsigned long ord(const Int& v, const Int& p);
// Valuation of a rational; nullopt stands for +infinity (q = 0).
// Throws NotPrime unless p is prime.
std::optional<long> valuation(const Rat& q, const Int& p);

// Natural log of |v|, v != 0, accurate for arbitrarily large v.
long double log_abs(const Int& v);
long double to_ld(const Rat& q);

// Full factorization of |n| (n != 0) by trial division, then Pollard rho.
Factorization factor(const Int& n);

std::vector<Int> divisors(const Factorization& f);  // positive divisors, sorted

bool sixth_power_free(const Int& n);

int64_t to_i64(const Int& v);
bool fits_i64(const Int& v);

}  // namespace mordell
