#include "fenchel/rational.hpp"

#include <cmath>
#include <vector>

namespace fenchel {

std::string rat_to_string(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) throw input_error("zero denominator in '" + s + "'");
      return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      Int den = 1;
      for (size_t i = 0; i < frac_len; ++i) den *= 10;
      return Rat(Int(digits), den);
    }
    return Rat(Int(s));
  } catch (const std::exception&) {
    throw input_error("cannot parse rational '" + s + "'");
  }
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw input_error("non-finite value");
  if (x == 0.0) return Rat(0);
  int exp2 = 0;
  double m = std::frexp(x, &exp2);  // x = m * 2^exp2, |m| in [1/2,1)
  // 53 doublings make the mantissa integral.
  Int mant = Int(std::ldexp(m, 53));
  exp2 -= 53;
  Rat r(mant);
  Int two = 2;
  if (exp2 >= 0) {
    Int p = pow(two, exp2);
    r *= Rat(p);
  } else {
    Int p = pow(two, -exp2);
    r /= Rat(p);
  }
  return r;
}

long padic_valuation(const Rat& r, const Int& p) {
  if (r == 0) throw input_error("valuation of zero");
  auto val_int = [&p](Int n) {
    long v = 0;
    n = abs(n);
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  };
  return val_int(numerator(r)) - val_int(denominator(r));
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::vector<Int> support_primes(const Rat& r) {
  if (r == 0) throw input_error("zero has no prime support");
  std::vector<Int> out;
  auto collect = [&out](Int n) {
    n = abs(n);
    for (Int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) out.push_back(n);
  };
  collect(numerator(r));
  collect(denominator(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fenchel
