#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "odgraph/formulas.hpp"
#include "odgraph/verify.hpp"

using namespace od;
using namespace od::verify;

namespace {

const Check* find_check(const VerificationResult& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("verify_group examples") {
    const auto z6 = verify_group(GroupSpec::cyclic(6));
    CHECK(z6.passed());
    const auto* size = find_check(z6, "size.formula_vs_oracle");
    REQUIRE(size != nullptr);
    CHECK(size->formula == "11");
    CHECK(size->oracle == "11");
    CHECK(z6.chromatic_number == 3);
    CHECK(z6.chromatic_equals_n_plus_1 == false);

    const auto d4 = verify_group(GroupSpec::dihedral(4));
    CHECK(d4.passed());
    const auto* degrees = find_check(d4, "degree.formula_vs_oracle");
    REQUIRE(degrees != nullptr);
    CHECK(degrees->formula == "{1:7,2:3,4:6}");
    CHECK(degrees->oracle == "{1:7,2:3,4:6}");
    CHECK(find_check(d4, "degree.dihedral_involutions_equal")->pass);

    const auto z1 = verify_group(GroupSpec::cyclic(1));
    CHECK(z1.passed());
    CHECK(z1.is_star);
    CHECK(find_check(z1, "structure.not_complete") == nullptr);
}

TEST_CASE("verify_group covers products and unit groups") {
    const auto p = verify_group(GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(6)}));
    CHECK(p.passed());
    CHECK(find_check(p, "girth.product_factors") != nullptr);
    CHECK(find_check(p, "girth.cyclic_product_orders") != nullptr);

    const auto u = verify_group(GroupSpec::units(24));
    CHECK(u.passed());
    CHECK(u.is_star);
    CHECK(find_check(u, "star.units_divides_24")->pass);
}

TEST_CASE("resource errors are recorded, not thrown") {
    Options options;
    options.enumeration_bound = 10;
    const auto r = verify_group(GroupSpec::cyclic(11), options);
    CHECK_FALSE(r.passed());
    REQUIRE(r.error.has_value());
    CHECK(r.error->find("enumeration bound") != std::string::npos);
}

TEST_CASE("sweep counts and ordering") {
    const auto report = sweep(SweepFamily::Dihedral, 3, 20);
    CHECK(report.results.size() == 18);
    CHECK(report.all_passed());
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        CHECK(report.results[i].spec == GroupSpec::dihedral(3 + i));
    }

    const auto products = sweep(SweepFamily::CyclicProduct, 1, 4);
    CHECK(products.results.size() == 16);
    CHECK(products.results[1].spec.to_string() == "Z1xZ2");
    CHECK(products.all_passed());

    CHECK_THROWS_AS(sweep(SweepFamily::Cyclic, 5, 3), DomainError);
    CHECK_THROWS_AS(sweep(SweepFamily::Dihedral, 2, 5), DomainError);
}

TEST_CASE("units sweep records the star set") {
    const auto report = sweep(SweepFamily::Units, 2, 60);
    CHECK(report.all_passed());
    CHECK(*report.star_instances == std::vector<Natural>{2, 3, 4, 6, 8, 12, 24});
    CHECK(*report.star_matches_divisors_of_24);
}

TEST_CASE("sweep reports are deterministic across thread counts") {
    Options one;
    one.threads = 1;
    Options many;
    many.threads = 8;
    const auto a = to_json(sweep(SweepFamily::Cyclic, 1, 40, one)).dump();
    const auto b = to_json(sweep(SweepFamily::Cyclic, 1, 40, many)).dump();
    const auto c = to_json(sweep(SweepFamily::Cyclic, 1, 40, many)).dump();
    CHECK(a == b);
    CHECK(b == c);
}

TEST_CASE("a perturbed degree formula is detected") {
    Options options;
    options.formulas.deg_zn = [](Natural n, Natural m) {
        // -phi(m) in place of -2 phi(m)
        Natural upper = 0;
        for (Natural l : nt::divisors(n / m)) upper += nt::euler_phi(l * m);
        return m - nt::euler_phi(m) + upper;
    };
    const auto report = sweep(SweepFamily::Cyclic, 1, 30, options);
    CHECK(report.failed == 30);
    const auto& z4 = report.results[3];
    REQUIRE(z4.first_mismatch.has_value());
    CHECK(z4.first_mismatch->check == "degree.formula_vs_oracle");

    Options size_fault;
    size_fault.formulas.size_dn = [](Natural n) { return formulas::size_dn(n) + (n == 12 ? 1 : 0); };
    const auto dihedral = sweep(SweepFamily::Dihedral, 3, 20, size_fault);
    CHECK(dihedral.failed == 1);
    CHECK_FALSE(dihedral.results[12 - 3].passed());
}

TEST_CASE("json report shape") {
    const auto j = to_json(sweep(SweepFamily::Cyclic, 1, 3));
    CHECK(j["family"] == "cyclic");
    CHECK(j["total"] == 3);
    CHECK(j["passed"] == 3);
    CHECK(j["results"][0]["group"] == "Z1");
    CHECK(j["results"][2]["first_mismatch"].is_null());
    CHECK(j["results"][2]["chromatic_number"] == 2);
    CHECK(parse_family("product") == SweepFamily::CyclicProduct);
    CHECK_FALSE(parse_family("symmetric").has_value());
}
