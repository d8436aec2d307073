#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace od {

/// Positive integer quantity: group orders, element orders, divisors.
/// Valid range is [1, 2^64 - 1]; zero is rejected wherever a Natural is expected.
using Natural = std::uint64_t;

/// Exact intermediate for closed forms. Every result is narrowed back to
/// Natural through `narrow`, which throws instead of wrapping.
using Wide = unsigned __int128;
using SignedWide = __int128;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised when an explicit enumeration would exceed its configured bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace nt {

struct PrimePower {
    Natural prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Trial division up to sqrt(n). Ascending primes; empty for n = 1.
std::vector<PrimePower> factorize(Natural n);

Natural euler_phi(Natural n);

/// All divisors of n in ascending order.
std::vector<Natural> divisors(Natural n);

bool is_prime(Natural n);

/// n >= 4 and not prime. 1 is neither prime nor composite.
bool is_composite(Natural n);

Natural gcd(Natural a, Natural b);
Natural lcm(Natural a, Natural b);  // throws OverflowError

Natural pow_mod(Natural base, Natural exp, Natural mod);

/// Least t >= 1 with x^t = 1 (mod n). Requires gcd(x, n) = 1.
Natural multiplicative_order(Natural x, Natural n);

/// base^exp in 128 bits; throws OverflowError past 2^128 - 1.
Wide wide_pow(Natural base, unsigned exp);

Natural checked_pow(Natural base, unsigned exp);

/// Narrow an exact intermediate, throwing OverflowError when it does not fit.
Natural narrow(Wide value, const char* what);
Natural narrow(SignedWide value, const char* what);

/// num / den, asserting the remainder is zero. A nonzero remainder means an
/// identity that should hold exactly does not, so it is a logic error.
Wide exact_div(Wide num, Wide den, const char* what);

Wide checked_add(Wide a, Wide b, const char* what);
Wide checked_mul(Wide a, Wide b, const char* what);

std::string to_string(Wide value);

}  // namespace nt
}  // namespace od
