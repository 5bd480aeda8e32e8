// Command-line surface: classify lambdas and 4-sets, enumerate stabilizers,
// inspect cross-ratio orbits, and run the exhaustive finite-field scan.
// Exit codes: 0 success, 1 usage/parse error, 2 verification mismatch.

#include <projstab/projstab.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace projstab;

std::string classification_text(const Classification& c) {
    std::string out;
    out += "field:         " + c.field.spec_string() + "\n";
    out += "lambda:        " + c.lam.to_string() + "\n";
    out += "group type:    " + c.group_type.name() + " (order " +
           std::to_string(c.group_type.order) + ")\n";
    out += "theorem case:  " + theorem_case_name(c.theorem_case) + "\n";
    out += "orbit:         ";
    for (std::size_t i = 0; i < c.orbit.values.size(); ++i)
        out += (i ? ", " : "") + c.orbit.values[i].to_string();
    out += "\ndistinct:      " + std::to_string(c.orbit.distinct_count) + "\n";
    return out;
}

std::string stabilizer_text(const StabilizerGroup& g) {
    std::string out;
    out += "field:       " + g.field.spec_string() + "\n";
    out += "set:         {" + g.base_set.to_string() + "}\n";
    out += "group type:  " + g.group_type.name();
    if (g.group_type.kind == GroupKind::Infinite) {
        out += "\nwitness:     " + g.witness + "\n";
        return out;
    }
    out += " (order " + std::to_string(g.group_type.order) + ")\n";
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        const auto cs = g.elements[i].coeff_strings();
        out += "  " + g.elements[i].to_string() + "  [" + cs[0] + "," + cs[1] + "," + cs[2] +
               "," + cs[3] + "]  " + g.perms[i].cycle_string() + "\n";
    }
    return out;
}

std::string orbit_text(const Classification& c) {
    std::string out = "orbit values:     ";
    for (std::size_t i = 0; i < c.orbit.values.size(); ++i)
        out += (i ? ", " : "") + c.orbit.values[i].to_string();
    out += "\ndistinct values:  " + std::to_string(c.orbit.distinct_count);
    out += "\nstabilizer order: " + std::to_string(24 / c.orbit.distinct_count) + "\n";
    return out;
}

std::string scan_text(const ScanReport& report) {
    std::string out;
    for (const auto& row : report.rows) {
        out += row.field_spec + ": q=" + std::to_string(row.q);
        for (const auto& [name, count] : row.counts)
            out += " " + name + "=" + std::to_string(count);
        out += " mismatches=" + std::to_string(row.mismatches.size()) + "\n";
        for (const auto& m : row.mismatches)
            out += "  MISMATCH lambda=" + m.lambda + " expected=" + m.expected +
                   " brute_force=" + m.brute_force + "\n";
    }
    out += "total mismatches: " + std::to_string(report.total_mismatches()) + "\n";
    return out;
}

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(output_path);
    if (!file) {
        std::cerr << "error: cannot write to '" << output_path << "'\n";
        return 1;
    }
    file << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer groups of finite subsets of the projective line"};
    app.require_subcommand(1);

    std::string field_spec = "Q";
    std::string lambda_text;
    std::string set_text;
    std::string format = "text";
    std::string output_path;
    std::uint64_t max_p = 31;
    bool include_quadratic = false;

    auto* classify = app.add_subcommand("classify", "classify the stabilizer of a lambda or a 4-set");
    classify->add_option("--field", field_spec, "field specifier: Q, F<p>, or F<p>^2");
    auto* lam_opt = classify->add_option("--lambda", lambda_text, "lambda value (element literal)");
    auto* set_opt = classify->add_option("--set", set_text, "comma-separated points (4 of them)");
    lam_opt->excludes(set_opt);
    classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    classify->add_option("--output", output_path, "write result to a file instead of stdout");

    auto* stab = app.add_subcommand("stabilizer", "enumerate the stabilizer of a 1..4 point set");
    stab->add_option("--field", field_spec, "field specifier: Q, F<p>, or F<p>^2");
    stab->add_option("--set", set_text, "comma-separated points")->required();
    stab->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    stab->add_option("--output", output_path, "write result to a file instead of stdout");

    auto* orbit = app.add_subcommand("orbit", "print the six cross-ratio orbit values of lambda");
    orbit->add_option("--field", field_spec, "field specifier: Q, F<p>, or F<p>^2");
    orbit->add_option("--lambda", lambda_text, "lambda value (element literal)")->required();
    orbit->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    orbit->add_option("--output", output_path, "write result to a file instead of stdout");

    auto* scan = app.add_subcommand("scan",
                                    "verify the closed-form classification against brute force "
                                    "over all lambdas of all fields up to max-p");
    scan->add_option("--max-p", max_p, "largest prime field to scan")->check(CLI::Range(3, 100000));
    scan->add_flag("--include-quadratic", include_quadratic,
                   "also scan F_p^2 for p = 2 mod 3 (F4 is always scanned)");
    scan->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    scan->add_option("--output", output_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (classify->parsed()) {
            const Field K = Field::parse(field_spec);
            Classification cls = [&] {
                if (!lambda_text.empty()) return classify_lambda(K, K.parse_element(lambda_text));
                if (!set_text.empty()) return classify_set(K, PointSet::parse(K, set_text));
                throw std::invalid_argument("classify needs --lambda or --set");
            }();
            return emit(format == "json" ? to_json(cls).dump(2) + "\n" : classification_text(cls),
                        output_path);
        }
        if (stab->parsed()) {
            const Field K = Field::parse(field_spec);
            const PointSet E = PointSet::parse(K, set_text);
            const StabilizerGroup g = stabilizer(K, E);
            return emit(format == "json" ? to_json(g).dump(2) + "\n" : stabilizer_text(g),
                        output_path);
        }
        if (orbit->parsed()) {
            const Field K = Field::parse(field_spec);
            const Classification cls = classify_lambda(K, K.parse_element(lambda_text));
            return emit(format == "json" ? to_json(cls).dump(2) + "\n" : orbit_text(cls),
                        output_path);
        }
        if (scan->parsed()) {
            const ScanReport report = run_scan(max_p, include_quadratic);
            const std::string text = format == "json"  ? to_json(report).dump(2) + "\n"
                                     : format == "csv" ? scan_to_csv(report)
                                                       : scan_text(report);
            if (int rc = emit(text, output_path)) return rc;
            return report.total_mismatches() == 0 ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
