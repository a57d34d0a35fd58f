#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace fenchel {

// Exact arithmetic backing every lattice quantity: coordinates, volumes,
// masses, heights.  GMP keeps hull pivots and inclusion-exclusion sums exact
// at any intermediate size.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Raised on malformed user input (bad dimensions, non-faces, negative forms...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when an operation's domain precondition fails (disjoint domains,
// empty stability intersection).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when an input is structurally valid but outside what the library
// computes (unbounded stability sets and the like).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised on iterative-solver failures or tolerance violations.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when two internal computation paths of the same quantity disagree.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical form "num/den" with den > 0 and gcd 1, or "n" when den == 1.
std::string rat_to_string(const Rat& r);

// Parses "p/q", "p", or a decimal like "1.25"; throws input_error otherwise.
Rat rat_from_string(const std::string& s);

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Every binary64 value is a dyadic rational; this conversion is exact.
Rat rat_from_double(double x);

// p-adic valuation of a nonzero rational.
long padic_valuation(const Rat& r, const Int& p);

bool is_prime(const Int& p);

// Prime factorization of |num| and |den| of a nonzero rational (trial division).
std::vector<Int> support_primes(const Rat& r);

}  // namespace fenchel
