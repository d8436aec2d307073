#include "odgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "odgraph/formulas.hpp"

namespace od::verify {

namespace {

std::string str(Natural v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const std::map<Natural, Natural>& m) {
    std::string out = "{";
    for (const auto& [k, v] : m) {
        if (out.size() > 1) out += ',';
        out += str(k) + ':' + str(v);
    }
    return out + "}";
}

std::string str(const std::optional<Natural>& v) { return v ? str(*v) : "none"; }

class Recorder {
public:
    explicit Recorder(VerificationResult& result) : result_(result) {}

    void check(std::string name, std::string formula, std::string oracle, bool pass,
               std::string detail = {}) {
        if (!pass && !result_.first_mismatch) {
            result_.first_mismatch =
                Mismatch{name, detail.empty() ? formula + " vs " + oracle : detail};
        }
        result_.checks.push_back({std::move(name), std::move(formula), std::move(oracle), pass});
    }

private:
    VerificationResult& result_;
};

/// Degree per order class from a formula, compared against every vertex.
template <class DegreeOf>
void check_degrees(Recorder& rec, const std::string& name, const GroupSpec& spec,
                   const ODGraph& graph, const OrderProfile& profile, DegreeOf&& degree_of) {
    std::map<Natural, Natural> expected;
    std::string detail;
    bool pass = true;
    try {
        for (Natural m : profile.orders()) expected[m] = degree_of(m);
    } catch (const std::exception& e) {
        rec.check(name, std::string("error: ") + e.what(), "-", false);
        return;
    }
    std::map<Natural, Natural> observed;
    for (const auto& v : graph.vertices()) {
        const Natural deg = graph.degree(static_cast<VertexId>(v.element));
        const auto it = expected.find(v.order);
        const Natural want = it == expected.end() ? 0 : it->second;
        observed.emplace(v.order, deg);
        if (deg != want && pass) {
            pass = false;
            detail = "element " + element_label(spec, v.element) + " (order " + str(v.order) +
                     "): formula " + str(want) + ", oracle " + str(deg);
        }
    }
    rec.check(name, str(expected), str(observed), pass, detail);
}

template <class F>
std::optional<Natural> try_value(F&& f, std::string& error) {
    try {
        return f();
    } catch (const std::exception& e) {
        error = e.what();
        return std::nullopt;
    }
}

}  // namespace

FormulaSet FormulaSet::standard() {
    return {formulas::deg_zn, formulas::size_zn, formulas::deg_dn, formulas::size_dn};
}

bool VerificationResult::passed() const {
    return !error && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerificationResult verify_group(const GroupSpec& spec, const Options& options) {
    VerificationResult result(spec);
    Recorder rec(result);
    try {
        result.group_order = group_order(spec);
        const ODGraph graph = ODGraph::build(spec, options.enumeration_bound);
        const InvariantReport oracle = oracle_report(graph, options.chromatic_bound);
        const OrderProfile profile = order_profile(spec, options.enumeration_bound);
        const OrderProfile enumerated = order_profile_by_enumeration(spec, options.enumeration_bound);
        const Natural n = spec.parameter();
        const Natural order = result.group_order;

        rec.check("profile.closed_form_vs_enumeration", str(profile.entries()),
                  str(enumerated.entries()), profile == enumerated);

        check_degrees(rec, "degree.profile_vs_oracle", spec, graph, profile,
                      [&](Natural m) { return degree_via_profile(profile, m); });
        if (spec.family() == Family::Cyclic) {
            check_degrees(rec, "degree.formula_vs_oracle", spec, graph, profile,
                          [&](Natural m) { return options.formulas.deg_zn(n, m); });
        } else if (spec.family() == Family::Dihedral) {
            check_degrees(rec, "degree.formula_vs_oracle", spec, graph, profile,
                          [&](Natural m) { return options.formulas.deg_dn(n, m); });
            if (n % 2 == 0) {
                // The central involution a^(n/2) and the reflections share one order class.
                const Natural central = graph.degree(static_cast<VertexId>(n / 2));
                bool same = true;
                for (Natural i = n; i < 2 * n; ++i) same &= graph.degree(static_cast<VertexId>(i)) == central;
                rec.check("degree.dihedral_involutions_equal", str(central),
                          str(graph.degree(static_cast<VertexId>(n))), same);
            }
        }

        Natural degree_sum = 0;
        for (Natural d : oracle.degree_sequence) degree_sum += d;
        rec.check("size.handshake", str(degree_sum), str(2 * oracle.size),
                  degree_sum == 2 * oracle.size);
        const Natural profile_size = size_via_profile(profile);
        rec.check("size.profile_vs_oracle", str(profile_size), str(oracle.size),
                  profile_size == oracle.size);
        if (spec.family() == Family::Cyclic || spec.family() == Family::Dihedral) {
            std::string error;
            const auto formula_size = try_value(
                [&] {
                    return spec.family() == Family::Cyclic ? options.formulas.size_zn(n)
                                                           : options.formulas.size_dn(n);
                },
                error);
            rec.check("size.formula_vs_oracle", formula_size ? str(*formula_size) : "error: " + error,
                      str(oracle.size), formula_size == oracle.size);
        }

        const bool has_composite = std::any_of(profile.entries().begin(), profile.entries().end(),
                                               [](const auto& e) { return nt::is_composite(e.first); });
        rec.check("girth.dichotomy", "0|3", str(oracle.girth), oracle.girth == 0 || oracle.girth == 3);
        const Natural formula_girth = formulas::girth_of_group(spec, options.enumeration_bound);
        rec.check("girth.formula_vs_oracle", str(formula_girth), str(oracle.girth),
                  formula_girth == oracle.girth);
        rec.check("girth.composite_order", str(has_composite), str(oracle.girth),
                  has_composite == (oracle.girth == 3));
        if (spec.family() == Family::Product) {
            const auto fs = spec.factors();
            const GroupSpec head = fs.front();
            const GroupSpec tail = GroupSpec::product({fs.begin() + 1, fs.end()});
            const Natural by_factors = formulas::girth_of_product(head, tail, options.enumeration_bound);
            rec.check("girth.product_factors", str(by_factors), str(oracle.girth),
                      by_factors == oracle.girth);
            if (fs.size() == 2 && head.family() == Family::Cyclic && tail.family() == Family::Cyclic) {
                const Natural by_orders =
                    formulas::girth_of_cyclic_product(head.parameter(), tail.parameter());
                rec.check("girth.cyclic_product_orders", str(by_orders), str(oracle.girth),
                          by_orders == oracle.girth);
            }
        }

        // Star <=> prime orders <=> acyclic <=> bipartite.
        const bool prime_orders = formulas::is_star_group(spec, options.enumeration_bound);
        result.is_star = oracle.is_star;
        const bool chain = prime_orders == oracle.is_star && oracle.is_star == oracle.is_bipartite &&
                           oracle.is_bipartite == (oracle.girth == 0);
        rec.check("star.equivalence", "prime_orders=" + str(prime_orders),
                  "star=" + str(oracle.is_star) + ",bipartite=" + str(oracle.is_bipartite) +
                      ",acyclic=" + str(oracle.girth == 0),
                  chain);
        if (spec.family() == Family::Units) {
            const bool divides_24 = 24 % n == 0;
            rec.check("star.units_divides_24", str(divides_24), str(oracle.is_star),
                      divides_24 == oracle.is_star);
        }
        const bool small = order == 2 || order == 3;
        rec.check("path.order_2_or_3", str(small), str(oracle.is_path), small == oracle.is_path);

        // |G| = 1: a single vertex; |G| = 2: a single edge.
        const Natural want_radius = order >= 2 ? 1 : 0;
        const Natural want_diameter = order >= 3 ? 2 : order == 2 ? 1 : 0;
        rec.check("structure.radius_diameter",
                  "radius=" + str(want_radius) + ",diameter=" + str(want_diameter),
                  "radius=" + str(oracle.radius) + ",diameter=" + str(oracle.diameter),
                  oracle.radius == want_radius && oracle.diameter == want_diameter);
        if (order >= 3) {
            rec.check("structure.not_complete", "false", str(oracle.is_complete), !oracle.is_complete);
        }
        rec.check("structure.not_cycle", "false", str(oracle.is_cycle), !oracle.is_cycle);

        result.chromatic_number = oracle.chromatic_number;
        result.clique_number = oracle.clique_number;
        if (spec.family() == Family::Cyclic && oracle.chromatic_number) {
            result.chromatic_equals_n_plus_1 = *oracle.chromatic_number == n + 1;
        }
    } catch (const std::exception& e) {
        result.error = e.what();
    }
    return result;
}

std::string to_string(SweepFamily family) {
    switch (family) {
        case SweepFamily::Cyclic: return "cyclic";
        case SweepFamily::Dihedral: return "dihedral";
        case SweepFamily::Units: return "units";
        case SweepFamily::CyclicProduct: return "product";
    }
    return "?";
}

std::optional<SweepFamily> parse_family(std::string_view text) {
    for (auto f : {SweepFamily::Cyclic, SweepFamily::Dihedral, SweepFamily::Units,
                   SweepFamily::CyclicProduct}) {
        if (text == to_string(f)) return f;
    }
    return std::nullopt;
}

SweepReport sweep(SweepFamily family, Natural lo, Natural hi, const Options& options) {
    if (lo > hi) {
        throw DomainError("empty range " + str(lo) + ".." + str(hi));
    }
    const Natural min_param = family == SweepFamily::Dihedral ? 3 : family == SweepFamily::Units ? 2 : 1;
    if (lo < min_param) {
        throw DomainError(to_string(family) + " sweep requires parameters >= " + str(min_param));
    }

    std::vector<GroupSpec> instances;
    for (Natural a = lo; a <= hi; ++a) {
        switch (family) {
            case SweepFamily::Cyclic: instances.push_back(GroupSpec::cyclic(a)); break;
            case SweepFamily::Dihedral: instances.push_back(GroupSpec::dihedral(a)); break;
            case SweepFamily::Units: instances.push_back(GroupSpec::units(a)); break;
            case SweepFamily::CyclicProduct:
                for (Natural b = lo; b <= hi; ++b) {
                    instances.push_back(GroupSpec::product({GroupSpec::cyclic(a), GroupSpec::cyclic(b)}));
                }
                break;
        }
    }

    SweepReport report;
    report.family = family;
    report.lo = lo;
    report.hi = hi;
    report.results.resize(instances.size(), VerificationResult(instances.front()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            report.results[i] = verify_group(instances[i], options);
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, instances.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& r : report.results) (r.passed() ? report.passed : report.failed)++;

    if (family == SweepFamily::Units) {
        std::vector<Natural> stars;
        std::vector<Natural> divisors_of_24;
        for (const auto& r : report.results) {
            const Natural n = r.spec.parameter();
            if (!r.error && r.is_star) stars.push_back(n);
            if (24 % n == 0) divisors_of_24.push_back(n);
        }
        report.star_matches_divisors_of_24 = stars == divisors_of_24;
        report.star_instances = std::move(stars);
    }
    return report;
}

nlohmann::ordered_json to_json(const VerificationResult& r) {
    nlohmann::ordered_json j;
    j["group"] = r.spec.to_string();
    j["order"] = r.group_order;
    j["pass"] = r.passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"name", c.name}, {"formula", c.formula}, {"oracle", c.oracle}, {"pass", c.pass}});
    }
    j["first_mismatch"] = r.first_mismatch
                              ? nlohmann::ordered_json{{"check", r.first_mismatch->check},
                                                       {"detail", r.first_mismatch->detail}}
                              : nlohmann::ordered_json(nullptr);
    j["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json(nullptr);
    j["chromatic_number"] = r.chromatic_number ? nlohmann::ordered_json(*r.chromatic_number)
                                               : nlohmann::ordered_json(nullptr);
    j["clique_number"] = r.clique_number ? nlohmann::ordered_json(*r.clique_number)
                                         : nlohmann::ordered_json(nullptr);
    if (r.chromatic_equals_n_plus_1) j["chromatic_equals_n_plus_1"] = *r.chromatic_equals_n_plus_1;
    return j;
}

nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["family"] = to_string(report.family);
    j["range"] = {report.lo, report.hi};
    j["total"] = report.results.size();
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    if (report.star_instances) {
        j["star_instances"] = *report.star_instances;
        j["star_matches_divisors_of_24"] = *report.star_matches_divisors_of_24;
    }
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) j["results"].push_back(to_json(r));
    return j;
}

}  // namespace od::verify
