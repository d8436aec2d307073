#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "odgraph/group.hpp"

using namespace od;

namespace {

using Profile = std::map<Natural, Natural>;

// Order of x in Z_n by repeated addition.
Natural additive_order(Natural x, Natural n) {
    Natural t = 1;
    for (Natural acc = x % n; acc != 0; acc = (acc + x) % n) ++t;
    return t;
}

std::vector<GroupSpec> sample_groups() {
    std::vector<GroupSpec> out;
    for (Natural n = 1; n <= 120; ++n) out.push_back(GroupSpec::cyclic(n));
    for (Natural n = 3; n <= 100; ++n) out.push_back(GroupSpec::dihedral(n));
    for (Natural n = 2; n <= 200; ++n) out.push_back(GroupSpec::units(n));
    for (Natural a = 1; a <= 12; ++a) {
        for (Natural b = 1; b <= 12; ++b) {
            out.push_back(GroupSpec::product({GroupSpec::cyclic(a), GroupSpec::cyclic(b)}));
        }
    }
    out.push_back(GroupSpec::product({GroupSpec::dihedral(4), GroupSpec::units(15)}));
    out.push_back(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
    out.push_back(GroupSpec::product({GroupSpec::dihedral(5), GroupSpec::cyclic(3), GroupSpec::units(8)}));
    return out;
}

}  // namespace

TEST_CASE("group_order") {
    CHECK(group_order(GroupSpec::cyclic(6)) == 6);
    CHECK(group_order(GroupSpec::dihedral(4)) == 8);
    CHECK(group_order(GroupSpec::units(24)) == 8);
    CHECK(group_order(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::dihedral(3)})) == 12);
}

TEST_CASE("family constraints") {
    CHECK_THROWS_AS(GroupSpec::cyclic(0), DomainError);
    CHECK_THROWS_AS(GroupSpec::dihedral(2), DomainError);
    CHECK_THROWS_AS(GroupSpec::units(1), DomainError);
    CHECK_THROWS_AS(GroupSpec::product({}), DomainError);
}

TEST_CASE("products are flattened") {
    const auto z2 = GroupSpec::cyclic(2);
    const auto nested = GroupSpec::product({z2, GroupSpec::product({z2, z2})});
    CHECK(nested.factors().size() == 3);
    CHECK(nested.to_string() == "Z2xZ2xZ2");
    CHECK(GroupSpec::product({z2}) == z2);
}

TEST_CASE("element_order examples") {
    CHECK(element_order({GroupSpec::cyclic(6), 2}) == 3);
    CHECK(element_order({GroupSpec::dihedral(4), 1}) == 4);  // a
    CHECK(element_order({GroupSpec::dihedral(4), 4}) == 2);  // b
    const auto z2z3 = GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)});
    CHECK(element_order({z2z3, 1 * 3 + 1}) == 6);  // (1,1)
    CHECK(element_order({GroupSpec::units(8), 1}) == 2);
    CHECK_THROWS_AS(element_order({GroupSpec::cyclic(3), 3}), DomainError);
}

TEST_CASE("cyclic element orders match repeated addition") {
    for (Natural n = 1; n <= 200; ++n) {
        const auto spec = GroupSpec::cyclic(n);
        for (Natural x = 0; x < n; ++x) REQUIRE(element_order({spec, x}) == additive_order(x, n));
    }
}

TEST_CASE("order_profile examples") {
    CHECK(order_profile(GroupSpec::cyclic(6)).entries() == Profile{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
    CHECK(order_profile(GroupSpec::dihedral(4)).entries() == Profile{{1, 1}, {2, 5}, {4, 2}});
    CHECK(order_profile(GroupSpec::dihedral(5)).entries() == Profile{{1, 1}, {2, 5}, {5, 4}});
}

TEST_CASE("enumerate_elements") {
    CHECK(enumerate_elements(GroupSpec::cyclic(3)).size() == 3);
    CHECK(enumerate_elements(GroupSpec::dihedral(3)).size() == 6);
    CHECK(units_of(8) == std::vector<Natural>{1, 3, 5, 7});
    const auto u8 = enumerate_elements(GroupSpec::units(8));
    REQUIRE(u8.size() == 4);
    for (Natural i = 0; i < 4; ++i) CHECK(u8[i].index == i);
    CHECK_THROWS_AS(enumerate_elements(GroupSpec::cyclic(11), 10), ResourceError);
}

TEST_CASE("closed-form profiles equal enumerated profiles") {
    for (const auto& g : sample_groups()) {
        CAPTURE(g.to_string());
        const auto closed = order_profile(g);
        REQUIRE(closed == order_profile_by_enumeration(g));
        REQUIRE(closed.multiplicity(1) == 1);
        REQUIRE(closed.group_order() == group_order(g));
        for (Natural m : closed.orders()) REQUIRE(group_order(g) % m == 0);
    }
}

TEST_CASE("bulk element orders agree with single-element decoding and Lagrange") {
    for (const auto& g : sample_groups()) {
        CAPTURE(g.to_string());
        const auto orders = element_orders(g);
        REQUIRE(orders.size() == group_order(g));
        for (Natural i = 0; i < orders.size(); ++i) {
            REQUIRE(orders[i] == element_order({g, i}));
            REQUIRE(group_order(g) % orders[i] == 0);
        }
    }
}

TEST_CASE("Z_n has phi(n) generators") {
    for (Natural n = 1; n <= 500; ++n) {
        const Natural gens = order_profile(GroupSpec::cyclic(n)).multiplicity(n);
        REQUIRE(gens == nt::euler_phi(n));
        REQUIRE(gens >= 1);
    }
}

TEST_CASE("large cyclic and dihedral profiles avoid enumeration") {
    const auto z = order_profile(GroupSpec::cyclic(1'000'000'000), 10);
    CHECK(z.group_order() == 1'000'000'000);
    const auto d = order_profile(GroupSpec::dihedral(999'983), 10);
    CHECK(d.multiplicity(2) == 999'983);
    CHECK_THROWS_AS(order_profile(GroupSpec::units(1009), 100), ResourceError);
}

TEST_CASE("element labels") {
    CHECK(element_label(GroupSpec::dihedral(4), 0) == "e");
    CHECK(element_label(GroupSpec::dihedral(4), 2) == "a^2");
    CHECK(element_label(GroupSpec::dihedral(4), 4) == "b");
    CHECK(element_label(GroupSpec::dihedral(4), 5) == "ab");
    CHECK(element_label(GroupSpec::dihedral(4), 7) == "a^3b");
    CHECK(element_label(GroupSpec::units(8), 2) == "5");
    const auto g = GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::dihedral(3)});
    CHECK(element_label(g, 6 + 4) == "(1,ab)");
    const auto all = element_labels(g);
    for (Natural i = 0; i < all.size(); ++i) REQUIRE(all[i] == element_label(g, i));
}
