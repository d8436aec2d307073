#include "odgraph/group.hpp"

#include <algorithm>
#include <numeric>

namespace od {

namespace {

void check_bound(const GroupSpec& spec, Natural bound) {
    const Natural order = group_order(spec);
    if (order > bound) {
        throw ResourceError("group " + spec.to_string() + " has order " + std::to_string(order) +
                            ", above the enumeration bound " + std::to_string(bound));
    }
}

void add(std::map<Natural, Natural>& profile, Natural order, Natural count) {
    if (count != 0) profile[order] += count;
}

OrderProfile cyclic_profile(Natural n) {
    std::map<Natural, Natural> entries;
    for (Natural d : nt::divisors(n)) add(entries, d, nt::euler_phi(d));
    return OrderProfile(std::move(entries));
}

OrderProfile convolve(const OrderProfile& a, const OrderProfile& b) {
    std::map<Natural, Natural> entries;
    for (const auto& [oa, ca] : a.entries()) {
        for (const auto& [ob, cb] : b.entries()) {
            add(entries, nt::lcm(oa, ob), nt::narrow(Wide(ca) * cb, "order profile"));
        }
    }
    return OrderProfile(std::move(entries));
}

}  // namespace

// GroupSpec ---------------------------------------------------------------

GroupSpec GroupSpec::cyclic(Natural n) {
    if (n < 1) throw DomainError("cyclic group Z_n requires n >= 1");
    return GroupSpec(Atom{Family::Cyclic, n});
}

GroupSpec GroupSpec::dihedral(Natural n) {
    if (n < 3) throw DomainError("dihedral group D_n requires n >= 3");
    return GroupSpec(Atom{Family::Dihedral, n});
}

GroupSpec GroupSpec::units(Natural n) {
    if (n < 2) throw DomainError("unit group U(n) requires n >= 2");
    return GroupSpec(Atom{Family::Units, n});
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw DomainError("direct product requires at least one factor");
    std::vector<GroupSpec> flat;
    for (auto& f : factors) {
        if (f.family() == Family::Product) {
            for (const auto& g : f.factors()) flat.push_back(g);
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (flat.size() == 1) return flat.front();
    return GroupSpec(std::make_shared<const std::vector<GroupSpec>>(std::move(flat)));
}

Family GroupSpec::family() const {
    if (const auto* atom = std::get_if<Atom>(&node_)) return atom->family;
    return Family::Product;
}

Natural GroupSpec::parameter() const {
    if (const auto* atom = std::get_if<Atom>(&node_)) return atom->n;
    return 0;
}

std::span<const GroupSpec> GroupSpec::factors() const {
    if (const auto* f = std::get_if<Factors>(&node_)) return {(*f)->data(), (*f)->size()};
    return {};
}

std::string GroupSpec::to_string() const {
    switch (family()) {
        case Family::Cyclic: return "Z" + std::to_string(parameter());
        case Family::Dihedral: return "D" + std::to_string(parameter());
        case Family::Units: return "U" + std::to_string(parameter());
        case Family::Product: break;
    }
    std::string out;
    for (const auto& f : factors()) {
        if (!out.empty()) out += 'x';
        out += f.to_string();
    }
    return out;
}

bool GroupSpec::operator==(const GroupSpec& other) const {
    if (family() != other.family()) return false;
    if (family() != Family::Product) return parameter() == other.parameter();
    const auto a = factors();
    const auto b = other.factors();
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// OrderProfile ------------------------------------------------------------

OrderProfile::OrderProfile(std::map<Natural, Natural> entries) : entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        it = it->second == 0 ? entries_.erase(it) : std::next(it);
    }
}

Natural OrderProfile::multiplicity(Natural order) const {
    const auto it = entries_.find(order);
    return it == entries_.end() ? 0 : it->second;
}

Natural OrderProfile::group_order() const {
    Natural total = 0;
    for (const auto& [order, count] : entries_) total += count;
    return total;
}

std::vector<Natural> OrderProfile::orders() const {
    std::vector<Natural> out;
    out.reserve(entries_.size());
    for (const auto& [order, count] : entries_) out.push_back(order);
    return out;
}

// Group operations --------------------------------------------------------

Natural group_order(const GroupSpec& spec) {
    switch (spec.family()) {
        case Family::Cyclic: return spec.parameter();
        case Family::Dihedral: return nt::narrow(Wide(2) * spec.parameter(), "group order");
        case Family::Units: return nt::euler_phi(spec.parameter());
        case Family::Product: break;
    }
    Wide order = 1;
    for (const auto& f : spec.factors()) {
        order = nt::checked_mul(order, group_order(f), "group order");
        nt::narrow(order, "group order");
    }
    return static_cast<Natural>(order);
}

std::vector<Natural> units_of(Natural n) {
    std::vector<Natural> out;
    for (Natural x = 1; x < n; ++x) {
        if (nt::gcd(x, n) == 1) out.push_back(x);
    }
    return out;
}

Natural element_order(const Element& e) {
    const GroupSpec& g = e.group;
    const Natural size = group_order(g);
    if (e.index >= size) {
        throw DomainError("element index " + std::to_string(e.index) + " out of range for " +
                          g.to_string());
    }
    const Natural n = g.parameter();
    switch (g.family()) {
        case Family::Cyclic: return n / nt::gcd(e.index, n);
        case Family::Dihedral: return e.index < n ? n / nt::gcd(e.index, n) : 2;
        case Family::Units: {
            Natural rank = 0;
            for (Natural x = 1; x < n; ++x) {
                if (nt::gcd(x, n) != 1) continue;
                if (rank++ == e.index) return nt::multiplicative_order(x, n);
            }
            break;
        }
        case Family::Product: {
            Natural order = 1;
            Natural rest = e.index;
            const auto fs = g.factors();
            for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
                const Natural radix = group_order(*it);
                order = nt::lcm(order, element_order({*it, rest % radix}));
                rest /= radix;
            }
            return order;
        }
    }
    throw std::logic_error("element_order: unreachable");
}

std::string element_label(const GroupSpec& spec, Natural index) {
    const Natural n = spec.parameter();
    switch (spec.family()) {
        case Family::Cyclic: return std::to_string(index);
        case Family::Dihedral: {
            const Natural power = index < n ? index : index - n;
            std::string rot = power == 0 ? "" : power == 1 ? "a" : "a^" + std::to_string(power);
            if (index >= n) return rot + "b";
            return rot.empty() ? "e" : rot;
        }
        case Family::Units: return std::to_string(units_of(n).at(index));
        case Family::Product: break;
    }
    const auto fs = spec.factors();
    std::vector<std::string> parts(fs.size());
    Natural rest = index;
    for (std::size_t i = fs.size(); i-- > 0;) {
        const Natural radix = group_order(fs[i]);
        parts[i] = element_label(fs[i], rest % radix);
        rest /= radix;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out + ")";
}

std::vector<Natural> element_orders(const GroupSpec& spec, Natural bound) {
    check_bound(spec, bound);
    const Natural n = spec.parameter();
    std::vector<Natural> orders;
    switch (spec.family()) {
        case Family::Cyclic:
            orders.reserve(n);
            for (Natural i = 0; i < n; ++i) orders.push_back(n / nt::gcd(i, n));
            return orders;
        case Family::Dihedral:
            orders.reserve(2 * n);
            for (Natural i = 0; i < n; ++i) orders.push_back(n / nt::gcd(i, n));
            orders.insert(orders.end(), n, 2);
            return orders;
        case Family::Units:
            for (Natural x : units_of(n)) orders.push_back(nt::multiplicative_order(x, n));
            return orders;
        case Family::Product: break;
    }
    orders = {1};
    for (const auto& f : spec.factors()) {
        const auto inner = element_orders(f, bound);
        std::vector<Natural> next;
        next.reserve(orders.size() * inner.size());
        for (Natural outer : orders) {
            for (Natural o : inner) next.push_back(nt::lcm(outer, o));
        }
        orders = std::move(next);
    }
    return orders;
}

std::vector<std::string> element_labels(const GroupSpec& spec, Natural bound) {
    check_bound(spec, bound);
    std::vector<std::string> labels;
    switch (spec.family()) {
        case Family::Cyclic:
        case Family::Dihedral:
            for (Natural i = 0; i < group_order(spec); ++i) labels.push_back(element_label(spec, i));
            return labels;
        case Family::Units:
            for (Natural x : units_of(spec.parameter())) labels.push_back(std::to_string(x));
            return labels;
        case Family::Product: break;
    }
    std::vector<std::vector<std::string>> parts{{}};
    for (const auto& f : spec.factors()) {
        const auto inner = element_labels(f, bound);
        std::vector<std::vector<std::string>> next;
        next.reserve(parts.size() * inner.size());
        for (const auto& prefix : parts) {
            for (const auto& label : inner) {
                next.push_back(prefix);
                next.back().push_back(label);
            }
        }
        parts = std::move(next);
    }
    for (const auto& p : parts) {
        std::string out = "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ',';
            out += p[i];
        }
        labels.push_back(out + ")");
    }
    return labels;
}

std::vector<Element> enumerate_elements(const GroupSpec& spec, Natural bound) {
    check_bound(spec, bound);
    const Natural size = group_order(spec);
    std::vector<Element> out;
    out.reserve(size);
    for (Natural i = 0; i < size; ++i) out.push_back({spec, i});
    return out;
}

OrderProfile order_profile_by_enumeration(const GroupSpec& spec, Natural bound) {
    std::map<Natural, Natural> entries;
    for (Natural o : element_orders(spec, bound)) ++entries[o];
    return OrderProfile(std::move(entries));
}

OrderProfile order_profile(const GroupSpec& spec, Natural bound) {
    switch (spec.family()) {
        case Family::Cyclic: return cyclic_profile(spec.parameter());
        case Family::Dihedral: {
            auto entries = cyclic_profile(spec.parameter()).entries();
            entries[2] += spec.parameter();
            return OrderProfile(std::move(entries));
        }
        case Family::Units: return order_profile_by_enumeration(spec, bound);
        case Family::Product: break;
    }
    OrderProfile acc(std::map<Natural, Natural>{{1, 1}});
    for (const auto& f : spec.factors()) acc = convolve(acc, order_profile(f, bound));
    return acc;
}

}  // namespace od
