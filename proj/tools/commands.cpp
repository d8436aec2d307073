#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "odgraph/export.hpp"
#include "odgraph/formulas.hpp"
#include "odgraph/spec_parser.hpp"
#include "odgraph/verify.hpp"

namespace od::cli {

namespace {

using Table = std::vector<std::vector<std::string>>;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string target;  // group spec, or family for verify
    std::string range;
    std::string format = "text";
    std::string out_file;
    Natural enum_bound = kDefaultEnumerationBound;
    std::size_t max_chromatic = kDefaultChromaticBound;
    unsigned threads = 0;
    bool force_oracle = false;
};

GroupSpec parse_or_usage(const std::string& text) {
    try {
        return parse_spec(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid group spec '") + text + "': " + e.what());
    } catch (const DomainError& e) {
        throw UsageError(std::string("invalid group spec '") + text + "': " + e.what());
    }
}

std::string render_table(const Table& rows, const std::string& format) {
    std::ostringstream out;
    if (format == "csv") {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
            out << "\r\n";
        }
        return out.str();
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += std::string(width[i] - row[i].size(), ' ') + row[i];
        }
        out << line << '\n';
    }
    return out.str();
}

std::optional<Natural> formula_degree(const GroupSpec& spec, Natural m) {
    switch (spec.family()) {
        case Family::Cyclic: return formulas::deg_zn(spec.parameter(), m);
        case Family::Dihedral: return formulas::deg_dn(spec.parameter(), m);
        default: return std::nullopt;
    }
}

std::optional<Natural> formula_size(const GroupSpec& spec) {
    switch (spec.family()) {
        case Family::Cyclic: return formulas::size_zn(spec.parameter());
        case Family::Dihedral: return formulas::size_dn(spec.parameter());
        default: return std::nullopt;
    }
}

nlohmann::ordered_json opt_json(const std::optional<Natural>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string opt_str(const std::optional<Natural>& v) { return v ? std::to_string(*v) : "-"; }

std::string cmd_degrees(const Settings& s) {
    const GroupSpec spec = parse_or_usage(s.target);
    const OrderProfile profile = order_profile(spec, s.enum_bound);
    const Natural size = group_order(spec);
    if (s.force_oracle && size > s.enum_bound) {
        throw ResourceError("oracle requested for " + spec.to_string() + " of order " +
                            std::to_string(size) + ", above the enumeration bound " +
                            std::to_string(s.enum_bound));
    }

    // Oracle degree per order class; nullopt if the class is not uniform.
    std::map<Natural, std::optional<Natural>> oracle;
    bool have_oracle = size <= s.enum_bound;
    if (have_oracle) {
        const ODGraph graph = ODGraph::build(spec, s.enum_bound);
        for (const auto& v : graph.vertices()) {
            const Natural deg = graph.degree(static_cast<VertexId>(v.element));
            auto [it, inserted] = oracle.emplace(v.order, deg);
            if (!inserted && it->second != deg) it->second = std::nullopt;
        }
    }

    if (s.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = spec.to_string();
        j["order"] = size;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& [m, count] : profile.entries()) {
            j["rows"].push_back({{"order", m},
                                 {"multiplicity", count},
                                 {"formula", opt_json(formula_degree(spec, m))},
                                 {"profile", degree_via_profile(profile, m)},
                                 {"oracle", have_oracle ? opt_json(oracle.at(m)) : nullptr}});
        }
        return j.dump(2) + "\n";
    }
    Table rows{{"order", "multiplicity", "formula", "profile", "oracle"}};
    for (const auto& [m, count] : profile.entries()) {
        rows.push_back({std::to_string(m), std::to_string(count), opt_str(formula_degree(spec, m)),
                        std::to_string(degree_via_profile(profile, m)),
                        have_oracle ? opt_str(oracle.at(m)) : "-"});
    }
    return render_table(rows, s.format);
}

std::string cmd_size(const Settings& s) {
    const GroupSpec spec = parse_or_usage(s.target);
    const auto by_formula = formula_size(spec);
    const Natural size = by_formula ? *by_formula : size_via_profile(order_profile(spec, s.enum_bound));
    const std::string method = by_formula ? "formula" : "profile";
    if (s.format == "json") {
        nlohmann::ordered_json j{{"group", spec.to_string()}, {"size", size}, {"method", method}};
        return j.dump(2) + "\n";
    }
    if (s.format == "csv") return render_table({{"group", "size", "method"}, {spec.to_string(), std::to_string(size), method}}, "csv");
    return std::to_string(size) + "\n";
}

std::string cmd_girth(const Settings& s) {
    const GroupSpec spec = parse_or_usage(s.target);
    const Natural girth = formulas::girth_of_group(spec, s.enum_bound);
    if (s.format == "json") {
        return nlohmann::ordered_json{{"group", spec.to_string()}, {"girth", girth}}.dump(2) + "\n";
    }
    if (s.format == "csv") return render_table({{"group", "girth"}, {spec.to_string(), std::to_string(girth)}}, "csv");
    return std::to_string(girth) + "\n";
}

std::string cmd_classify(const Settings& s) {
    const GroupSpec spec = parse_or_usage(s.target);
    const OrderProfile profile = order_profile(spec, s.enum_bound);
    const Natural order = profile.group_order();
    const bool star = formulas::is_star_group(spec, s.enum_bound);
    // A star is bipartite and conversely; the only stars that are paths are P2 and P3.
    const bool bipartite = star;
    const bool path = order == 2 || order == 3;
    std::string profile_text;
    for (const auto& [m, count] : profile.entries()) {
        profile_text += (profile_text.empty() ? "" : " ") + std::to_string(m) + ":" + std::to_string(count);
    }
    const auto b = [](bool v) { return v ? std::string("true") : std::string("false"); };
    if (s.format == "json") {
        nlohmann::ordered_json j{{"group", spec.to_string()}, {"order", order}, {"star", star},
                                 {"bipartite", bipartite}, {"path", path}};
        j["profile"] = nlohmann::ordered_json::object();
        for (const auto& [m, count] : profile.entries()) j["profile"][std::to_string(m)] = count;
        return j.dump(2) + "\n";
    }
    if (s.format == "csv") {
        return render_table({{"group", "order", "star", "bipartite", "path", "profile"},
                             {spec.to_string(), std::to_string(order), b(star), b(bipartite), b(path), profile_text}},
                            "csv");
    }
    return "group " + spec.to_string() + "\norder " + std::to_string(order) + "\nstar=" + b(star) +
           "\nbipartite=" + b(bipartite) + "\npath=" + b(path) + "\nprofile " + profile_text + "\n";
}

std::string cmd_export(const Settings& s) {
    const GroupSpec spec = parse_or_usage(s.target);
    const LabeledGraph g = build_labeled(spec, s.enum_bound);
    if (s.format == "json") return to_json(g, oracle_report(g.graph, s.max_chromatic)).dump(2) + "\n";
    if (s.format == "csv") return to_csv(g);
    return to_dot(g);  // default format
}

std::pair<Natural, Natural> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like LO..HI, got '" + text + "'");
    const auto number = [&](std::string_view part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos || part.size() > 18) {
            throw UsageError("invalid range bound '" + std::string(part) + "'");
        }
        return static_cast<Natural>(std::stoull(std::string(part)));
    };
    const Natural lo = number(std::string_view(text).substr(0, dots));
    const Natural hi = number(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw UsageError("empty range " + text);
    return {lo, hi};
}

int cmd_verify(const Settings& s, std::string& rendered) {
    const auto family = verify::parse_family(s.target);
    if (!family) throw UsageError("unknown family '" + s.target + "' (cyclic, dihedral, units, product)");
    const auto [lo, hi] = parse_range(s.range);
    verify::Options options;
    options.enumeration_bound = s.enum_bound;
    options.chromatic_bound = s.max_chromatic;
    options.threads = s.threads;
    verify::SweepReport report;
    try {
        report = verify::sweep(*family, lo, hi, options);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    if (s.format == "json") {
        rendered = verify::to_json(report).dump(2) + "\n";
    } else {
        std::ostringstream out;
        for (const auto& r : report.results) {
            if (r.passed()) continue;
            out << "FAIL " << r.spec.to_string() << ": ";
            if (r.error) {
                out << *r.error << '\n';
            } else {
                out << r.first_mismatch->check << ": " << r.first_mismatch->detail << '\n';
            }
        }
        for (const auto& r : report.results) {
            if (r.spec.family() == Family::Cyclic && r.chromatic_number) {
                out << "chromatic " << r.spec.to_string() << " = " << *r.chromatic_number
                    << " (n + 1 = " << r.spec.parameter() + 1 << ")\n";
            }
        }
        if (report.star_instances) {
            out << "star instances:";
            for (Natural n : *report.star_instances) out << ' ' << n;
            out << "\nstar set equals divisors of 24: "
                << (*report.star_matches_divisors_of_24 ? "yes" : "no") << '\n';
        }
        out << verify::to_string(report.family) << ' ' << lo << ".." << hi << ": " << report.passed << '/'
            << report.results.size() << " pass\n";
        rendered = out.str();
    }
    const bool ok = report.all_passed() && report.star_matches_divisors_of_24.value_or(true);
    return ok ? kExitOk : kExitMismatch;
}

void emit(const std::string& text, const Settings& s, std::ostream& out) {
    if (s.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream file(s.out_file, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + s.out_file + "' for writing");
    file << text;
    if (!file.flush()) throw std::runtime_error("failed writing '" + s.out_file + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Order-divisor graphs of finite groups: closed forms, brute-force checks, export."};
    app.name(args.empty() ? "odgraph" : args.front());
    app.require_subcommand(1);

    Settings s;
    const auto common = [&](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember(formats));
        cmd->add_option("--out", s.out_file, "Write output to FILE instead of stdout");
        cmd->add_option("--enum-bound", s.enum_bound, "Largest group order to enumerate")
            ->check(CLI::PositiveNumber);
    };
    const std::string spec_help = "Group spec, e.g. Z12, D9, U24, Z2xZ3";

    auto* degrees = app.add_subcommand("degrees", "Degree of each order class: formula, profile, oracle");
    degrees->add_option("spec", s.target, spec_help)->required();
    degrees->add_flag("--oracle", s.force_oracle, "Fail if the oracle cannot run within the bound");
    common(degrees, {"text", "csv", "json"});

    auto* size = app.add_subcommand("size", "Edge count");
    size->add_option("spec", s.target, spec_help)->required();
    common(size, {"text", "csv", "json"});

    auto* girth = app.add_subcommand("girth", "Girth (0 when acyclic)");
    girth->add_option("spec", s.target, spec_help)->required();
    common(girth, {"text", "csv", "json"});

    auto* classify = app.add_subcommand("classify", "Star/bipartite/path flags and order profile");
    classify->add_option("spec", s.target, spec_help)->required();
    common(classify, {"text", "csv", "json"});

    auto* exporter = app.add_subcommand("export", "Export the explicit graph");
    exporter->add_option("spec", s.target, spec_help)->required();
    common(exporter, {"dot", "json", "csv"});
    exporter->add_option("--max", s.max_chromatic, "Largest graph for exact chromatic number");

    auto* verifier = app.add_subcommand("verify", "Sweep a family comparing formulas against the oracle");
    verifier->add_option("family", s.target, "cyclic | dihedral | units | product")->required();
    verifier->add_option("range", s.range, "Parameter range LO..HI")->required();
    verifier->add_option("--threads", s.threads, "Worker threads (0 = all cores)");
    verifier->add_option("--max", s.max_chromatic, "Largest graph for exact chromatic number");
    common(verifier, {"text", "json"});

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        std::string rendered;
        int code = kExitOk;
        if (*degrees) rendered = cmd_degrees(s);
        if (*size) rendered = cmd_size(s);
        if (*girth) rendered = cmd_girth(s);
        if (*classify) rendered = cmd_classify(s);
        if (*exporter) rendered = cmd_export(s);
        if (*verifier) code = cmd_verify(s, rendered);
        emit(rendered, s, out);
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
}

}  // namespace od::cli
