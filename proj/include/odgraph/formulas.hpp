#pragma once

#include "odgraph/group.hpp"

/// Closed-form degree, size and girth results for order-divisor graphs.
///
/// Every sum over divisors is evaluated by explicit divisor enumeration in
/// 128-bit integers, and every division in a closed form is checked to be
/// exact. Results that do not fit in 64 bits raise OverflowError.
namespace od::formulas {

/// Degree of an element of order m in OD(Z_n):
///   m - 2 phi(m) + sum_{l | n/m} phi(l m).
/// DomainError unless m | n.
Natural deg_zn(Natural n, Natural m);

/// Degree of an element of order p^i in OD(Z_{p^k}):
/// p^k + p^(i-1) - p^i for i >= 1, and p^k - 1 for i = 0.
Natural deg_zn_prime_power(Natural p, unsigned k, unsigned i);

/// Sum of all degrees in OD(Z_{p^k}): (2 p^(2k) - 2) / (p + 1).
Natural degree_sum_zn_prime_power(Natural p, unsigned k);
/// The p = 2 specialization, (2^(2k+1) - 2) / 3.
Natural degree_sum_zn_pow2(unsigned k);

/// Sum of element orders of Z_{p^k}: (p^(2k+1) + 1) / (p + 1).
Natural order_sum_prime_power(Natural p, unsigned k);
/// The p = 2 specialization, (2^(2k+1) + 1) / 3.
Natural order_sum_pow2(unsigned k);

/// Edge count of OD(Z_n): half the phi-weighted sum of deg_zn over m | n.
Natural size_zn(Natural n);

/// Edge count of OD(Z_{p^k}): (p^(2k) - 1) / (p + 1).
Natural size_zn_prime_power(Natural p, unsigned k);

/// Degree of an element of order m in OD(D_n), n >= 3. The case split is
/// m = 1, m = 2, odd m, and even m > 2 (the last only for even n).
/// DomainError unless m is in {1, 2} or divides n.
Natural deg_dn(Natural n, Natural m);

/// Edge count of OD(D_n), n >= 3, branching on the parity of n.
Natural size_dn(Natural n);

/// 3 if some realized order is composite or two distinct non-identity
/// orders are comparable under divisibility; otherwise 0.
Natural girth_of_group(const GroupSpec& spec, Natural bound = kDefaultEnumerationBound);

/// Girth of OD(E x F) from the factors alone: 3 iff E or F realizes a
/// composite order, or E realizes a prime p and F a prime q != p.
Natural girth_of_product(const GroupSpec& e, const GroupSpec& f,
                         Natural bound = kDefaultEnumerationBound);

/// Girth of OD(Z_a x Z_b) by group orders only: 3 iff a is composite,
/// b is composite, or a and b are distinct primes.
Natural girth_of_cyclic_product(Natural a, Natural b);

/// True iff every non-identity realized order is prime.
bool is_star_group(const GroupSpec& spec, Natural bound = kDefaultEnumerationBound);

}  // namespace od::formulas
