#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "odgraph/numtheory.hpp"

using namespace od;

namespace {

Natural phi_by_scan(Natural n) {
    Natural count = 0;
    for (Natural x = 1; x <= n; ++x) count += std::gcd(x, n) == 1;
    return count;
}

Natural order_by_powers(Natural x, Natural n) {
    Natural t = 1;
    Natural acc = x % n;
    while (acc != 1 % n) {
        acc = acc * x % n;
        ++t;
    }
    return t;
}

}  // namespace

TEST_CASE("euler_phi examples") {
    CHECK(nt::euler_phi(1) == 1);
    CHECK(nt::euler_phi(6) == phi_by_scan(6));
    CHECK(nt::euler_phi(6) == 2);
    CHECK(nt::euler_phi(12) == phi_by_scan(12));
    CHECK(nt::euler_phi(12) == 4);
    CHECK_THROWS_AS(nt::euler_phi(0), DomainError);
}

TEST_CASE("euler_phi matches coprime scan") {
    for (Natural n = 1; n <= 2000; ++n) REQUIRE(nt::euler_phi(n) == phi_by_scan(n));
}

TEST_CASE("divisor sum of phi recovers n") {
    for (Natural n = 1; n <= 10'000; ++n) {
        Natural sum = 0;
        for (Natural d : nt::divisors(n)) sum += nt::euler_phi(d);
        REQUIRE(sum == n);
    }
}

TEST_CASE("euler_phi is multiplicative on coprime pairs") {
    for (Natural a = 1; a <= 300; ++a) {
        for (Natural b = 1; b <= 300; ++b) {
            if (std::gcd(a, b) != 1) continue;
            REQUIRE(nt::euler_phi(a * b) == nt::euler_phi(a) * nt::euler_phi(b));
        }
    }
}

TEST_CASE("divisors") {
    CHECK(nt::divisors(1) == std::vector<Natural>{1});
    CHECK(nt::divisors(6) == std::vector<Natural>{1, 2, 3, 6});
    CHECK(nt::divisors(8) == std::vector<Natural>{1, 2, 4, 8});

    for (Natural n = 1; n <= 3000; ++n) {
        const auto ds = nt::divisors(n);
        std::vector<Natural> scan;
        for (Natural d = 1; d <= n; ++d) {
            if (n % d == 0) scan.push_back(d);
        }
        REQUIRE(ds == scan);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            REQUIRE(ds[i] * ds[ds.size() - 1 - i] == n);
        }
    }
}

TEST_CASE("primality predicates") {
    CHECK_FALSE(nt::is_prime(1));
    CHECK_FALSE(nt::is_composite(1));
    CHECK(nt::is_prime(7));
    CHECK_FALSE(nt::is_composite(7));
    CHECK_FALSE(nt::is_prime(9));
    CHECK(nt::is_composite(9));
    CHECK(nt::is_prime(2));
    CHECK(nt::is_composite(4));

    for (Natural n = 1; n <= 2000; ++n) {
        REQUIRE(nt::is_prime(n) == (nt::divisors(n).size() == 2));
    }
    CHECK(nt::is_prime(1'000'000'007));
    CHECK(nt::is_composite(1'000'000'007ull * 3));
}

TEST_CASE("factorize reassembles n") {
    for (Natural n = 1; n <= 5000; ++n) {
        Natural prod = 1;
        for (const auto& [p, e] : nt::factorize(n)) {
            REQUIRE(nt::is_prime(p));
            prod *= nt::checked_pow(p, e);
        }
        REQUIRE(prod == n);
    }
    CHECK(nt::factorize(1).empty());
    CHECK(nt::factorize(360) == std::vector<nt::PrimePower>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("multiplicative_order examples") {
    CHECK(nt::multiplicative_order(1, 5) == 1);
    CHECK(nt::multiplicative_order(2, 7) == 3);
    CHECK(nt::multiplicative_order(3, 16) == 4);
    CHECK_THROWS_AS(nt::multiplicative_order(2, 4), DomainError);
    CHECK_THROWS_AS(nt::multiplicative_order(0, 9), DomainError);
}

TEST_CASE("multiplicative_order matches repeated multiplication and divides phi") {
    for (Natural n = 2; n <= 500; ++n) {
        const Natural phi = nt::euler_phi(n);
        for (Natural x = 1; x < n; ++x) {
            if (std::gcd(x, n) != 1) continue;
            const Natural t = nt::multiplicative_order(x, n);
            REQUIRE(t == order_by_powers(x, n));
            REQUIRE(phi % t == 0);
        }
    }
}

TEST_CASE("overflow is reported, never wrapped") {
    CHECK(nt::checked_pow(2, 63) == (Natural{1} << 63));
    CHECK_THROWS_AS(nt::checked_pow(2, 64), OverflowError);
    CHECK_THROWS_AS(nt::wide_pow(2, 128), OverflowError);
    CHECK_THROWS_AS(nt::lcm(Natural{1} << 40, (Natural{1} << 40) - 1), OverflowError);
    CHECK(nt::lcm(4, 6) == 12);
    CHECK_THROWS_AS(nt::exact_div(7, 2, "test"), std::logic_error);
    CHECK(nt::to_string(nt::wide_pow(10, 30)) == "1000000000000000000000000000000");
}
