#include "odgraph/formulas.hpp"

#include <string>

namespace od::formulas {

namespace {

void require_prime_power_args(Natural p, unsigned k, const char* what) {
    if (!nt::is_prime(p)) {
        throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not prime");
    }
    if (k < 1) throw DomainError(std::string(what) + ": exponent k must be >= 1");
}

/// sum_{l | n/m} phi(l m)
Wide upper_phi_sum(Natural n, Natural m) {
    Wide sum = 0;
    for (Natural l : nt::divisors(n / m)) sum += nt::euler_phi(l * m);
    return sum;
}

/// m - 2 phi(m) + sum_{l | n/m} phi(l m); the rotation-subgroup degree.
SignedWide cyclic_degree(Natural n, Natural m) {
    return SignedWide(m) - 2 * SignedWide(nt::euler_phi(m)) + SignedWide(upper_phi_sum(n, m));
}

void require_dihedral(Natural n, const char* what) {
    if (n < 3) throw DomainError(std::string(what) + ": dihedral D_n requires n >= 3");
}

}  // namespace

Natural deg_zn(Natural n, Natural m) {
    if (n == 0 || m == 0 || n % m != 0) {
        throw DomainError("deg_zn: order " + std::to_string(m) + " does not divide " +
                          std::to_string(n));
    }
    return nt::narrow(cyclic_degree(n, m), "deg_zn");
}

Natural deg_zn_prime_power(Natural p, unsigned k, unsigned i) {
    require_prime_power_args(p, k, "deg_zn_prime_power");
    if (i > k) throw DomainError("deg_zn_prime_power: requires i <= k");
    const Wide pk = nt::wide_pow(p, k);
    if (i == 0) return nt::narrow(pk - 1, "deg_zn_prime_power");
    return nt::narrow(pk + nt::wide_pow(p, i - 1) - nt::wide_pow(p, i), "deg_zn_prime_power");
}

Natural degree_sum_zn_prime_power(Natural p, unsigned k) {
    require_prime_power_args(p, k, "degree_sum_zn_prime_power");
    const Wide p2k = nt::wide_pow(p, 2 * k);
    const Wide sum = nt::exact_div(nt::checked_mul(2, p2k, "degree sum") - 2, Wide(p) + 1,
                                   "degree_sum_zn_prime_power");
    if (p == 2 && nt::narrow(sum, "degree sum") != degree_sum_zn_pow2(k)) {
        throw std::logic_error("degree_sum_zn_prime_power: p = 2 specialization disagrees");
    }
    return nt::narrow(sum, "degree_sum_zn_prime_power");
}

Natural degree_sum_zn_pow2(unsigned k) {
    if (k < 1) throw DomainError("degree_sum_zn_pow2: exponent k must be >= 1");
    return nt::narrow(nt::exact_div(nt::wide_pow(2, 2 * k + 1) - 2, 3, "degree_sum_zn_pow2"),
                      "degree_sum_zn_pow2");
}

Natural order_sum_prime_power(Natural p, unsigned k) {
    require_prime_power_args(p, k, "order_sum_prime_power");
    const Wide top = nt::checked_add(nt::wide_pow(p, 2 * k + 1), 1, "order sum");
    const Natural sum =
        nt::narrow(nt::exact_div(top, Wide(p) + 1, "order_sum_prime_power"), "order sum");
    if (p == 2 && sum != order_sum_pow2(k)) {
        throw std::logic_error("order_sum_prime_power: p = 2 specialization disagrees");
    }
    return sum;
}

Natural order_sum_pow2(unsigned k) {
    if (k < 1) throw DomainError("order_sum_pow2: exponent k must be >= 1");
    return nt::narrow(nt::exact_div(nt::wide_pow(2, 2 * k + 1) + 1, 3, "order_sum_pow2"),
                      "order_sum_pow2");
}

Natural size_zn(Natural n) {
    if (n == 0) throw DomainError("size_zn: n must be >= 1");
    SignedWide twice = 0;
    for (Natural m : nt::divisors(n)) twice += cyclic_degree(n, m) * SignedWide(nt::euler_phi(m));
    return nt::narrow(nt::exact_div(nt::narrow(twice, "size_zn"), 2, "size_zn"), "size_zn");
}

Natural size_zn_prime_power(Natural p, unsigned k) {
    require_prime_power_args(p, k, "size_zn_prime_power");
    return nt::narrow(
        nt::exact_div(nt::wide_pow(p, 2 * k) - 1, Wide(p) + 1, "size_zn_prime_power"),
        "size_zn_prime_power");
}

Natural deg_dn(Natural n, Natural m) {
    require_dihedral(n, "deg_dn");
    if (m == 0 || (m > 2 && n % m != 0)) {
        throw DomainError("deg_dn: order " + std::to_string(m) + " is not realized in D" +
                          std::to_string(n));
    }
    if (m == 1) return nt::narrow(Wide(2) * n - 1, "deg_dn");
    if (n % 2 == 1) {
        if (m == 2) return 1;
        return nt::narrow(cyclic_degree(n, m), "deg_dn");
    }
    if (m == 2) {
        Wide sum = 0;
        for (Natural l : nt::divisors(n / 2)) sum += nt::euler_phi(2 * l);
        return nt::narrow(sum, "deg_dn");
    }
    if (m % 2 == 1) return nt::narrow(cyclic_degree(n, m), "deg_dn");
    return nt::narrow(SignedWide(n) + cyclic_degree(n, m), "deg_dn");
}

Natural size_dn(Natural n) {
    require_dihedral(n, "size_dn");
    SignedWide twice = 0;
    if (n % 2 == 1) {
        twice = 3 * SignedWide(n) - 1;
        for (Natural m : nt::divisors(n)) {
            if (m > 1) twice += cyclic_degree(n, m) * SignedWide(nt::euler_phi(m));
        }
    } else {
        Wide involution_sum = 0;
        for (Natural l : nt::divisors(n / 2)) involution_sum += nt::euler_phi(2 * l);
        twice = 2 * SignedWide(n) - 1 + (SignedWide(n) + 1) * SignedWide(involution_sum);
        for (Natural m : nt::divisors(n)) {
            const SignedWide phi = nt::euler_phi(m);
            if (m > 1 && m % 2 == 1) twice += cyclic_degree(n, m) * phi;
            if (m > 2 && m % 2 == 0) twice += (SignedWide(n) + cyclic_degree(n, m)) * phi;
        }
    }
    return nt::narrow(nt::exact_div(nt::narrow(twice, "size_dn"), 2, "size_dn"), "size_dn");
}

Natural girth_of_group(const GroupSpec& spec, Natural bound) {
    const auto orders = order_profile(spec, bound).orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (nt::is_composite(orders[i])) return 3;
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            if (orders[i] > 1 && orders[j] % orders[i] == 0) return 3;
        }
    }
    return 0;
}

Natural girth_of_product(const GroupSpec& e, const GroupSpec& f, Natural bound) {
    const auto left = order_profile(e, bound).orders();
    const auto right = order_profile(f, bound).orders();
    for (Natural a : left) {
        if (nt::is_composite(a)) return 3;
    }
    for (Natural b : right) {
        if (nt::is_composite(b)) return 3;
    }
    for (Natural a : left) {
        for (Natural b : right) {
            if (nt::is_prime(a) && nt::is_prime(b) && a != b) return 3;
        }
    }
    return 0;
}

Natural girth_of_cyclic_product(Natural a, Natural b) {
    if (a == 0 || b == 0) throw DomainError("girth_of_cyclic_product: orders must be >= 1");
    const bool distinct_primes = nt::is_prime(a) && nt::is_prime(b) && a != b;
    return nt::is_composite(a) || nt::is_composite(b) || distinct_primes ? 3 : 0;
}

bool is_star_group(const GroupSpec& spec, Natural bound) {
    for (Natural m : order_profile(spec, bound).orders()) {
        if (m != 1 && !nt::is_prime(m)) return false;
    }
    return true;
}

}  // namespace od::formulas
