#include "odgraph/numtheory.hpp"

#include <algorithm>
#include <limits>

namespace od::nt {

namespace {

void require_positive(Natural n, const char* what) {
    if (n == 0) {
        throw DomainError(std::string(what) + ": argument must be >= 1");
    }
}

}  // namespace

std::vector<PrimePower> factorize(Natural n) {
    require_positive(n, "factorize");
    std::vector<PrimePower> out;
    auto strip = [&](Natural p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    for (Natural p = 3; p <= n / p; p += 2) strip(p);
    if (n > 1) out.push_back({n, 1});
    return out;
}

Natural euler_phi(Natural n) {
    Natural phi = n;
    for (const auto& [p, e] : factorize(n)) {
        phi = phi / p * (p - 1);
    }
    return phi;
}

std::vector<Natural> divisors(Natural n) {
    require_positive(n, "divisors");
    std::vector<Natural> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t prev = out.size();
        Natural pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < prev; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(Natural n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Natural d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_composite(Natural n) { return n >= 4 && !is_prime(n); }

Natural gcd(Natural a, Natural b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

Natural lcm(Natural a, Natural b) {
    if (a == 0 || b == 0) return 0;
    return narrow(Wide(a / gcd(a, b)) * b, "lcm");
}

Natural pow_mod(Natural base, Natural exp, Natural mod) {
    require_positive(mod, "pow_mod");
    Wide result = 1 % mod;
    Wide b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<Natural>(result);
}

Natural multiplicative_order(Natural x, Natural n) {
    require_positive(n, "multiplicative_order");
    if (gcd(x % n, n) != 1 && n != 1) {
        throw DomainError("multiplicative_order: gcd(" + std::to_string(x) + ", " +
                          std::to_string(n) + ") != 1");
    }
    Natural t = euler_phi(n);
    for (const auto& [p, e] : factorize(t)) {
        for (unsigned i = 0; i < e && pow_mod(x, t / p, n) == 1 % n; ++i) t /= p;
    }
    return t;
}

Wide wide_pow(Natural base, unsigned exp) {
    Wide result = 1;
    for (unsigned i = 0; i < exp; ++i) result = checked_mul(result, base, "power");
    return result;
}

Natural checked_pow(Natural base, unsigned exp) { return narrow(wide_pow(base, exp), "power"); }

Natural narrow(Wide value, const char* what) {
    if (value > std::numeric_limits<Natural>::max()) {
        throw OverflowError(std::string(what) + ": result exceeds 64-bit range");
    }
    return static_cast<Natural>(value);
}

Natural narrow(SignedWide value, const char* what) {
    if (value < 0) {
        throw std::logic_error(std::string(what) + ": negative intermediate result");
    }
    return narrow(static_cast<Wide>(value), what);
}

Wide exact_div(Wide num, Wide den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw std::logic_error(std::string(what) + ": inexact division " + to_string(num) +
                               " / " + to_string(den));
    }
    return num / den;
}

Wide checked_add(Wide a, Wide b, const char* what) {
    if (a > std::numeric_limits<Wide>::max() - b) {
        throw OverflowError(std::string(what) + ": 128-bit overflow");
    }
    return a + b;
}

Wide checked_mul(Wide a, Wide b, const char* what) {
    if (a != 0 && b > std::numeric_limits<Wide>::max() / a) {
        throw OverflowError(std::string(what) + ": 128-bit overflow");
    }
    return a * b;
}

std::string to_string(Wide value) {
    if (value == 0) return "0";
    std::string s;
    while (value > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace od::nt
