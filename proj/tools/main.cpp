// Command-line front end: spectra of Harvey-Lawson torus links,
// stability indices, Fredholm indices and expected moduli dimensions
// for special Lagrangian m-folds with conical singularities.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slcone/config_file.hpp"
#include "slcone/errors.hpp"
#include "slcone/hl_torus.hpp"
#include "slcone/moduli.hpp"
#include "slcone/rational.hpp"
#include "slcone/spectrum_file.hpp"
#include "slcone/spectrum_ops.hpp"

namespace {

using nlohmann::ordered_json;
using namespace slcone;

enum class Format { table, json, csv };

Format parse_format(const std::string& name) {
    if (name == "table")
        return Format::table;
    if (name == "json")
        return Format::json;
    return Format::csv;
}

std::string json_text(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (const char c : value) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file: " + output_path);
    out << text;
}

// ---------------------------------------------------------------------------
// key/value reports (index, moduli, fredholm): one table line per field,
// a flat JSON object, or a one-row CSV with the same values
// ---------------------------------------------------------------------------

struct Report {
    std::vector<std::pair<std::string, ordered_json>> fields;

    void add(std::string name, ordered_json value) {
        fields.emplace_back(std::move(name), std::move(value));
    }

    std::string cell(const ordered_json& value) const {
        if (value.is_null())
            return "";
        if (value.is_string())
            return value.get<std::string>();
        if (value.is_array()) {
            std::vector<std::string> parts;
            for (const auto& item : value)
                parts.push_back(item.is_string() ? item.get<std::string>()
                                                 : item.dump());
            return join(parts, "; ");
        }
        return value.dump();
    }

    std::string render(Format format) const {
        if (format == Format::json) {
            ordered_json doc;
            for (const auto& [name, value] : fields)
                doc[name] = value;
            return json_text(doc);
        }
        if (format == Format::csv) {
            std::string header, row;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i > 0) {
                    header += ',';
                    row += ',';
                }
                header += fields[i].first;
                row += csv_escape(cell(fields[i].second));
            }
            return header + "\n" + row + "\n";
        }
        std::string out;
        for (const auto& [name, value] : fields)
            out += name + ": " + cell(value) + "\n";
        return out;
    }
};

// ---------------------------------------------------------------------------
// hl-table
// ---------------------------------------------------------------------------

struct TableRow {
    int m;
    std::int64_t counting_two, mult2, index;
};

std::string render_hl_table(const std::vector<TableRow>& rows, Format format) {
    if (format == Format::json) {
        ordered_json doc;
        auto& array = doc["rows"] = ordered_json::array();
        for (const auto& row : rows)
            array.push_back({{"m", row.m},
                             {"N2", row.counting_two},
                             {"mult2", row.mult2},
                             {"s_ind", row.index}});
        return json_text(doc);
    }
    std::ostringstream out;
    if (format == Format::csv) {
        out << "m,N2,mult2,s_ind\n";
        for (const auto& row : rows)
            out << row.m << ',' << row.counting_two << ',' << row.mult2 << ','
                << row.index << '\n';
        return out.str();
    }
    out << std::setw(4) << "m" << std::setw(8) << "N(2)" << std::setw(10)
        << "mult(2)" << std::setw(8) << "s-ind" << '\n';
    for (const auto& row : rows)
        out << std::setw(4) << row.m << std::setw(8) << row.counting_two
            << std::setw(10) << row.mult2 << std::setw(8) << row.index << '\n';
    return out.str();
}

TableRow hl_table_row(int m, const EnumerationOptions& opts) {
    const StabilityReport report = stability(hl_cone(m, 2 * std::int64_t{m}, opts));
    return {m, report.counting_two, report.mult2, report.index};
}

// ---------------------------------------------------------------------------
// hl-spectrum
// ---------------------------------------------------------------------------

std::string render_spectrum(const SpectrumDocument& doc, Format format) {
    if (format == Format::json)
        return write_spectrum_document(doc);
    std::ostringstream out;
    if (format == Format::csv) {
        out << "lambda_num,lambda_den,mult\n";
        for (const auto& entry : doc.entries)
            out << entry.lambda.num() << ',' << entry.lambda.den() << ','
                << entry.mult << '\n';
        return out.str();
    }
    out << "m: " << doc.m << "\nb0: " << doc.b0 << "\ndim_g: " << doc.dim_g
        << "\ncomplete_up_to: " << doc.complete_up_to.to_string() << "\n";
    out << std::setw(12) << "lambda" << std::setw(8) << "mult" << '\n';
    for (const auto& entry : doc.entries)
        out << std::setw(12) << entry.lambda.to_string() << std::setw(8)
            << entry.mult << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

Report stability_report_fields(const ConeDescriptor& cone) {
    const StabilityReport report = stability(cone);
    Report out;
    out.add("m", cone.ambient_dim());
    out.add("b0", cone.link_components());
    out.add("dim_g", cone.sym_dim());
    out.add("N2", report.counting_two);
    out.add("mult0", report.mult0);
    out.add("mult1", report.mult1);
    out.add("mult2", report.mult2);
    out.add("s_ind", report.index);
    out.add("stable", report.stable);
    out.add("rigid", report.rigid);
    out.add("bound_violations", report.bound_violations);
    return out;
}

// ---------------------------------------------------------------------------
// moduli
// ---------------------------------------------------------------------------

ordered_json opt_int(const std::optional<std::int64_t>& value) {
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

Report moduli_report_fields(const ResolvedModuli& resolved) {
    ModuliReport report;
    std::int64_t points = static_cast<std::int64_t>(resolved.points.size());

    if (resolved.all_single()) {
        const SingularConfig config = resolved.as_singular();
        report = config.family_dim > 0
                     ? expected_moduli_dim_in_family(config, resolved.transverse)
                     : expected_moduli_dim(config);
    } else {
        // separated components: obstruction counting absorbs the
        // placement bookkeeping, the rest is unchanged
        report.deformation_dim = checked_sub(resolved.topology.b1_x_prime,
                                             resolved.topology.restriction_rank);
        report.obstruction_dim =
            obstruction_dim_separated_ends(resolved.points, resolved.m);
        report.expected_dim =
            checked_sub(report.deformation_dim, report.obstruction_dim);
        if (resolved.family_dim > 0)
            report.family_expected_dim =
                checked_add(resolved.family_dim, report.expected_dim);
        report.notes.push_back(
            "separated-components points: obstruction via per-component indices");
        if (resolved.family_dim > 0)
            report.notes.push_back(resolved.transverse
                                       ? "transverse in family: smooth near the base point"
                                       : "transversality not asserted: formal expected dimension");
        if (report.expected_dim < 0)
            report.notes.push_back("negative expected dimension: generically empty");
    }

    Report out;
    out.add("m", resolved.m);
    out.add("points", points);
    out.add("family_dim", resolved.family_dim);
    out.add("placement_dim", opt_int(report.placement_dim));
    out.add("end_constant_dim", opt_int(report.end_constant_dim));
    out.add("deformation_dim", report.deformation_dim);
    out.add("obstruction_dim", report.obstruction_dim);
    out.add("expected_dim", report.expected_dim);
    out.add("family_expected_dim", opt_int(report.family_expected_dim));
    out.add("notes", report.notes);
    return out;
}

// ---------------------------------------------------------------------------
// fredholm
// ---------------------------------------------------------------------------

std::vector<Rational> parse_rate_list(const std::string& text) {
    std::vector<Rational> rates;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        rates.push_back(Rational::parse(item));
    if (rates.empty())
        throw ConfigError("rates: expected a comma-separated list of rationals");
    return rates;
}

Rational fredholm_coverage(int m, const std::vector<Rational>& rates) {
    Rational needed(2 * std::int64_t{m});
    for (const auto& rate : rates) {
        const Rational lambda = rate * (rate + Rational(m - 2));
        if (lambda > needed)
            needed = lambda;
    }
    return needed;
}

Report fredholm_report_fields(const SingularConfig& config,
                              const std::vector<Rational>& rates) {
    const FredholmResult result = fredholm_index(config, rates);
    std::vector<std::string> rate_texts;
    for (const auto& rate : rates)
        rate_texts.push_back(rate.to_string());

    Report out;
    out.add("rates", rate_texts);
    out.add("fredholm", result.fredholm);
    out.add("index", opt_int(result.index));
    out.add("injective", result.injective);
    return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

// N(2), mult(2) and s-ind columns for m = 3..12, cross-checked against
// the enumeration by the verify command.
constexpr std::int64_t kKnownCountingTwo[10] = {13, 27, 51, 93, 169,
                                                311, 331, 201, 243, 289};
constexpr std::int64_t kKnownMultTwo[10] = {6, 12, 20, 30, 42, 126, 240, 90, 110, 132};
constexpr std::int64_t kKnownIndex[10] = {0, 6, 20, 50, 112, 238, 240, 90, 110, 132};

std::vector<VerifyCheck> run_verify(int m_max, const EnumerationOptions& opts) {
    std::vector<VerifyCheck> checks;
    std::vector<int> bad_rows, bad_forms, bad_bounds, bad_nonneg, bad_rigid_impl,
        bad_mult1, bad_stable_set, bad_rigid_set;

    for (int m = 3; m <= m_max; ++m) {
        const ConeDescriptor cone = hl_cone(m, 2 * std::int64_t{m}, opts);
        const StabilityReport report = stability(cone);
        const std::int64_t msq = std::int64_t{m} * m;

        if (m <= 12) {
            const int i = m - 3;
            if (report.counting_two != kKnownCountingTwo[i] ||
                report.mult2 != kKnownMultTwo[i] || report.index != kKnownIndex[i])
                bad_rows.push_back(m);
        }
        if (m >= 10 && (report.counting_two != 2 * msq + 1 ||
                        report.mult2 != msq - m || report.index != msq - m))
            bad_forms.push_back(m);
        for (const auto& check : check_lower_bounds(cone))
            if (!check.holds) {
                bad_bounds.push_back(m);
                break;
            }
        if (report.index < 0)
            bad_nonneg.push_back(m);
        if (report.stable && !report.rigid)
            bad_rigid_impl.push_back(m);
        if (report.mult1 != 2 * std::int64_t{m})
            bad_mult1.push_back(m);
        if (report.stable != (m == 3))
            bad_stable_set.push_back(m);
        if (report.rigid != (m != 8 && m != 9))
            bad_rigid_set.push_back(m);
    }

    const auto push = [&checks](std::string name, const std::vector<int>& bad,
                                std::string range) {
        std::string detail = std::move(range);
        if (!bad.empty()) {
            detail += "; failed at m =";
            for (const int m : bad)
                detail += " " + std::to_string(m);
        }
        checks.push_back({std::move(name), bad.empty(), std::move(detail)});
    };
    const std::string all = "m = 3.." + std::to_string(m_max);
    push("known_table_rows", bad_rows,
         "m = 3.." + std::to_string(std::min(m_max, 12)));
    if (m_max >= 10)
        push("closed_forms_high_m", bad_forms, "m = 10.." + std::to_string(m_max));
    push("eigenvalue_lower_bounds", bad_bounds, all);
    push("stability_index_nonnegative", bad_nonneg, all);
    push("stable_implies_rigid", bad_rigid_impl, all);
    push("mult1_equals_2m", bad_mult1, all);
    push("stable_iff_m_equals_3", bad_stable_set, all);
    push("rigid_iff_m_not_8_9", bad_rigid_set, all);
    return checks;
}

std::string render_verify(const std::vector<VerifyCheck>& checks, Format format) {
    bool all_passed = true;
    for (const auto& check : checks)
        all_passed = all_passed && check.passed;

    if (format == Format::json) {
        ordered_json doc;
        auto& array = doc["checks"] = ordered_json::array();
        for (const auto& check : checks)
            array.push_back({{"name", check.name},
                             {"passed", check.passed},
                             {"detail", check.detail}});
        doc["all_passed"] = all_passed;
        return json_text(doc);
    }
    std::ostringstream out;
    if (format == Format::csv) {
        out << "name,passed,detail\n";
        for (const auto& check : checks)
            out << check.name << ',' << (check.passed ? "true" : "false") << ','
                << csv_escape(check.detail) << '\n';
        return out.str();
    }
    for (const auto& check : checks)
        out << (check.passed ? "PASS " : "FAIL ") << check.name << " ("
            << check.detail << ")\n";
    out << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
    return out.str();
}

// ---------------------------------------------------------------------------

struct CommonFlags {
    std::string format = "table";
    int threads = 1;
    std::uint64_t max_points = EnumerationOptions{}.max_points;

    EnumerationOptions enumeration() const { return {threads, max_points}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--threads", threads,
                        "enumeration worker threads (0 = hardware)")
            ->check(CLI::Range(0, 1024));
        cmd->add_option("--max-points", max_points,
                        "cap on enumerated lattice nodes");
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "slcone: exact Laplace spectra of special Lagrangian torus-link cones,\n"
        "stability indices and moduli-space dimension bookkeeping"};
    app.require_subcommand(1);

    CommonFlags flags;

    int m_min = 3, m_max = 12, m = 3;
    std::int64_t lambda_max = 0, b0 = -1, dim_g = -1;
    std::string spectrum_path, config_path, rates_text, output_path;

    auto* cmd_table = app.add_subcommand(
        "hl-table", "N(2), mult(2) and s-ind of the Harvey-Lawson cones");
    cmd_table->add_option("--m-min", m_min, "first ambient dimension")
        ->required()
        ->check(CLI::Range(3, 1000000));
    cmd_table->add_option("--m-max", m_max, "last ambient dimension")
        ->required()
        ->check(CLI::Range(3, 1000000));
    flags.attach(cmd_table);

    auto* cmd_spectrum = app.add_subcommand(
        "hl-spectrum", "eigenvalue/multiplicity table of the torus link");
    cmd_spectrum->add_option("--m", m, "ambient dimension")
        ->required()
        ->check(CLI::Range(3, 1000000));
    cmd_spectrum->add_option("--lambda-max", lambda_max, "completeness bound")
        ->required()
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 62));
    cmd_spectrum->add_option("-o,--output", output_path, "write to file");
    flags.attach(cmd_spectrum);

    auto* cmd_index = app.add_subcommand(
        "index", "stability report of a cone (built-in Harvey-Lawson or file)");
    auto* index_m = cmd_index->add_option("--m", m, "built-in Harvey-Lawson cone")
                        ->check(CLI::Range(3, 1000000));
    auto* index_file =
        cmd_index->add_option("--spectrum", spectrum_path, "spectrum file");
    index_m->excludes(index_file);
    cmd_index->add_option("--b0", b0, "override link component count");
    cmd_index->add_option("--dim-g", dim_g, "override symmetry dimension");
    flags.attach(cmd_index);

    auto* cmd_moduli =
        app.add_subcommand("moduli", "dimension report for a configuration file");
    cmd_moduli->add_option("--config", config_path, "configuration file")->required();
    flags.attach(cmd_moduli);

    auto* cmd_fredholm = app.add_subcommand(
        "fredholm", "Fredholm index of the linearized operator at given rates");
    auto* fredholm_config =
        cmd_fredholm->add_option("--config", config_path, "configuration file");
    auto* fredholm_m =
        cmd_fredholm->add_option("--m", m, "single built-in Harvey-Lawson cone")
            ->check(CLI::Range(3, 1000000));
    fredholm_m->excludes(fredholm_config);
    cmd_fredholm->add_option("--rates", rates_text, "comma-separated rationals")
        ->required();
    flags.attach(cmd_fredholm);

    auto* cmd_verify =
        app.add_subcommand("verify", "run the built-in verification battery");
    cmd_verify->add_option("--m-max", m_max, "verify up to this dimension")
        ->check(CLI::Range(3, 1000000));
    flags.attach(cmd_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        const Format format = parse_format(flags.format);
        const EnumerationOptions opts = flags.enumeration();

        if (cmd_table->parsed()) {
            if (m_min > m_max)
                throw ConfigError("m-min exceeds m-max");
            std::vector<TableRow> rows;
            for (int dim = m_min; dim <= m_max; ++dim)
                rows.push_back(hl_table_row(dim, opts));
            std::cout << render_hl_table(rows, format);
        } else if (cmd_spectrum->parsed()) {
            const ConeDescriptor cone = hl_cone(m, lambda_max, opts);
            emit(render_spectrum(from_cone(cone), format), output_path);
        } else if (cmd_index->parsed()) {
            if (index_m->count() == 0 && index_file->count() == 0)
                throw ConfigError("index: one of --m or --spectrum is required");
            ConeDescriptor cone =
                index_file->count() > 0
                    ? to_cone(read_spectrum_file(spectrum_path))
                    : hl_cone(m, 2 * std::int64_t{m}, opts);
            if (b0 >= 0 || dim_g >= 0)
                cone = ConeDescriptor(cone.spectrum(),
                                      b0 >= 0 ? b0 : cone.link_components(),
                                      dim_g >= 0 ? dim_g : cone.sym_dim());
            std::cout << stability_report_fields(cone).render(format);
        } else if (cmd_moduli->parsed()) {
            const ModuliConfig config = read_config_file(config_path);
            const ResolvedModuli resolved = resolve_config(
                config, Rational(2 * std::int64_t{config.m}), opts);
            std::cout << moduli_report_fields(resolved).render(format);
        } else if (cmd_fredholm->parsed()) {
            const std::vector<Rational> rates = parse_rate_list(rates_text);
            SingularConfig config;
            if (fredholm_config->count() > 0) {
                const ModuliConfig parsed = read_config_file(config_path);
                const ResolvedModuli resolved = resolve_config(
                    parsed, fredholm_coverage(parsed.m, rates), opts);
                if (!resolved.all_single())
                    throw ConfigError(
                        "fredholm: separated-components points are not supported");
                config = resolved.as_singular();
            } else if (fredholm_m->count() > 0) {
                config.cones.push_back(
                    hl_cone(m, fredholm_coverage(m, rates).ceil(), opts));
            } else {
                throw ConfigError("fredholm: one of --m or --config is required");
            }
            std::cout << fredholm_report_fields(config, rates).render(format);
        } else if (cmd_verify->parsed()) {
            const auto checks = run_verify(m_max, opts);
            std::cout << render_verify(checks, format);
            for (const auto& check : checks)
                if (!check.passed)
                    return 1;
        }
    } catch (const SpectrumTruncated& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 3;
    } catch (const ResourceLimit& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 4;
    } catch (const ArithmeticOverflow& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 4;
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << '\n';
        return 70;
    }
    return 0;
}
