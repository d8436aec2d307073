#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "odgraph/numtheory.hpp"

namespace od {

/// Largest group order that may be enumerated element by element.
inline constexpr Natural kDefaultEnumerationBound = 100'000;

enum class Family { Cyclic, Dihedral, Units, Product };

/// Immutable description of a finite group instance.
///
/// Products are flattened on construction, so a Product always has at least
/// two factors and none of them is itself a Product. Elementary abelian groups
/// are written as products of copies of Z_p.
class GroupSpec {
public:
    static GroupSpec cyclic(Natural n);
    static GroupSpec dihedral(Natural n);  // n >= 3
    static GroupSpec units(Natural n);     // n >= 2
    /// Flattens nested products; a single factor collapses to that factor.
    static GroupSpec product(std::vector<GroupSpec> factors);

    Family family() const;
    /// Family parameter. Zero for products.
    Natural parameter() const;
    /// Factors of a product; empty for the three atomic families.
    std::span<const GroupSpec> factors() const;

    /// Canonical text, e.g. "Z6", "D4", "U24", "Z2xZ3".
    std::string to_string() const;

    bool operator==(const GroupSpec& other) const;

private:
    struct Atom {
        Family family;
        Natural n;
    };
    using Factors = std::shared_ptr<const std::vector<GroupSpec>>;

    explicit GroupSpec(Atom atom) : node_(atom) {}
    explicit GroupSpec(Factors factors) : node_(std::move(factors)) {}

    std::variant<Atom, Factors> node_;
};

/// Element of a group, addressed by canonical index in [0, |G|).
///
/// Index decoding: Z_n residue i; D_n indices [0, n) are rotations a^i and
/// [n, 2n) are reflections a^(i-n) b; U(n) index is the rank among units in
/// ascending order; products use mixed radix with the first factor most
/// significant.
struct Element {
    GroupSpec group;
    Natural index;
};

/// Element order -> number of elements with that order.
class OrderProfile {
public:
    OrderProfile() = default;
    explicit OrderProfile(std::map<Natural, Natural> entries);

    const std::map<Natural, Natural>& entries() const { return entries_; }
    /// Zero when the order is not realized.
    Natural multiplicity(Natural order) const;
    bool realizes(Natural order) const { return entries_.count(order) != 0; }
    Natural group_order() const;
    std::vector<Natural> orders() const;

    bool operator==(const OrderProfile&) const = default;

private:
    std::map<Natural, Natural> entries_;
};

/// Throws OverflowError if the order does not fit in 64 bits.
Natural group_order(const GroupSpec& spec);

Natural element_order(const Element& e);

/// Human-readable name of an element: "3", "a^2b", "(1,e)".
std::string element_label(const GroupSpec& spec, Natural index);

/// Labels of every element, indexed by canonical element index.
std::vector<std::string> element_labels(const GroupSpec& spec,
                                        Natural bound = kDefaultEnumerationBound);

/// Closed form for Z_n and D_n (no size limit); lcm-convolution of factor
/// profiles for products; enumeration for U(n).
OrderProfile order_profile(const GroupSpec& spec, Natural bound = kDefaultEnumerationBound);

/// Profile recomputed from `element_orders`; the independent route.
OrderProfile order_profile_by_enumeration(const GroupSpec& spec,
                                          Natural bound = kDefaultEnumerationBound);

std::vector<Element> enumerate_elements(const GroupSpec& spec,
                                        Natural bound = kDefaultEnumerationBound);

/// Orders of every element, indexed by canonical element index.
std::vector<Natural> element_orders(const GroupSpec& spec,
                                    Natural bound = kDefaultEnumerationBound);

/// Units modulo n in ascending order.
std::vector<Natural> units_of(Natural n);

}  // namespace od
