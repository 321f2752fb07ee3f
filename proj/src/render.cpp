#include "brokenstick/render.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace brokenstick {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("format must be one of: text, json, csv");
}

std::string format_significant(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

std::string render_exact_text(const ExactTable& table, bool per_k) {
    std::ostringstream out;
    out << "exact results for n = " << table.n << "\n";
    if (per_k) {
        for (const auto& row : table.per_k) {
            out << "  k = " << row.k << ": symbolic = " << row.symbolic
                << ", closed form = " << row.closed_form << " ("
                << format_significant(row.symbolic.to_double()) << ")\n";
        }
    }
    out << "ordered probability = " << table.ordered_probability << " ("
        << format_significant(table.ordered_probability.to_double()) << ")\n";
    out << "final probability   = " << table.final_probability << " ("
        << format_significant(table.final_probability.to_double()) << ")\n";
    return out.str();
}

std::string render_exact_json(const ExactTable& table, bool per_k) {
    ordered_json j;
    j["command"] = "exact";
    j["n"] = table.n;
    if (per_k) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table.per_k) {
            ordered_json r;
            r["k"] = row.k;
            r["symbolic"] = row.symbolic.to_string();
            r["closed_form"] = row.closed_form.to_string();
            r["decimal"] = row.symbolic.to_double();
            rows.push_back(std::move(r));
        }
        j["per_k"] = std::move(rows);
    }
    j["ordered_probability"] = table.ordered_probability.to_string();
    j["ordered_probability_decimal"] = table.ordered_probability.to_double();
    j["final_probability"] = table.final_probability.to_string();
    j["final_probability_decimal"] = table.final_probability.to_double();
    return j.dump(2) + "\n";
}

std::string render_exact_csv(const ExactTable& table, bool per_k) {
    std::ostringstream out;
    out << "row,n,k,symbolic,closed_form,decimal\n";
    if (per_k) {
        for (const auto& row : table.per_k) {
            out << "per_k," << table.n << "," << row.k << "," << row.symbolic << ","
                << row.closed_form << "," << format_significant(row.symbolic.to_double())
                << "\n";
        }
    }
    out << "ordered," << table.n << ",," << table.ordered_probability << ","
        << ordered_probability(table.n) << ","
        << format_significant(table.ordered_probability.to_double()) << "\n";
    out << "final," << table.n << ",," << table.final_probability << ","
        << polygon_probability(table.n) << ","
        << format_significant(table.final_probability.to_double()) << "\n";
    return out.str();
}

std::string render_mc_text(const McReport& report) {
    std::ostringstream out;
    out << "monte carlo report\n";
    out << "  n        = " << report.config.n << "\n";
    out << "  trials   = " << report.config.trials << "\n";
    out << "  seed     = " << report.config.seed << "\n";
    out << "  workers  = " << report.config.workers << "\n";
    out << "  feasible = " << report.feasible_count << "\n";
    out << "  estimate = " << format_significant(report.estimate) << "\n";
    out << "  stderr   = " << format_significant(report.standard_error) << "\n";
    out << "  per-k counts:\n";
    for (std::size_t i = 0; i < report.per_k_counts.size(); ++i)
        out << "    k = " << (i + 1) << ": " << report.per_k_counts[i] << "\n";
    return out.str();
}

std::string render_mc_json(const McReport& report) {
    ordered_json j;
    j["command"] = "mc";
    j["n"] = report.config.n;
    j["trials"] = report.config.trials;
    j["seed"] = report.config.seed;
    j["workers"] = report.config.workers;
    j["feasible_count"] = report.feasible_count;
    ordered_json counts = ordered_json::array();
    for (std::size_t i = 0; i < report.per_k_counts.size(); ++i) {
        ordered_json c;
        c["k"] = i + 1;
        c["count"] = report.per_k_counts[i];
        counts.push_back(std::move(c));
    }
    j["per_k_counts"] = std::move(counts);
    j["estimate"] = report.estimate;
    j["stderr"] = report.standard_error;
    return j.dump(2) + "\n";
}

std::string render_mc_csv(const McReport& report) {
    std::ostringstream out;
    out << "n,trials,seed,workers,k,count,feasible_count,estimate,stderr\n";
    for (std::size_t i = 0; i < report.per_k_counts.size(); ++i) {
        out << report.config.n << "," << report.config.trials << "," << report.config.seed
            << "," << report.config.workers << "," << (i + 1) << ","
            << report.per_k_counts[i] << "," << report.feasible_count << ","
            << format_significant(report.estimate) << ","
            << format_significant(report.standard_error) << "\n";
    }
    return out.str();
}

std::string render_verify_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "verify report (n = " << report.n_min << ".." << report.n_max
        << ", trials = " << report.trials << ", seed = " << report.seed
        << ", workers = " << report.workers << ")\n";
    for (const auto& row : report.per_n) {
        out << "  n = " << row.n << ": exact = " << row.exact_final << " ("
            << format_significant(row.exact_final.to_double()) << "), estimate = "
            << format_significant(row.mc_estimate) << ", stderr = "
            << format_significant(row.mc_stderr)
            << ", symbolic==closed: " << yes_no(row.symbolic_equals_closed)
            << ", sum rule: " << yes_no(row.sum_rule_holds)
            << ", mc within tolerance: " << yes_no(row.mc_within_tolerance) << "\n";
    }
    out << "overall: " << (report.overall_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string render_verify_json(const VerifyReport& report) {
    ordered_json j;
    j["command"] = "verify";
    j["n_min"] = report.n_min;
    j["n_max"] = report.n_max;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["workers"] = report.workers;
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.per_n) {
        ordered_json r;
        r["n"] = row.n;
        r["exact_final"] = row.exact_final.to_string();
        r["exact_final_decimal"] = row.exact_final.to_double();
        r["mc_estimate"] = row.mc_estimate;
        r["mc_stderr"] = row.mc_stderr;
        r["symbolic_equals_closed"] = row.symbolic_equals_closed;
        r["sum_rule_holds"] = row.sum_rule_holds;
        r["mc_within_tolerance"] = row.mc_within_tolerance;
        rows.push_back(std::move(r));
    }
    j["per_n"] = std::move(rows);
    j["overall_pass"] = report.overall_pass;
    return j.dump(2) + "\n";
}

std::string render_verify_csv(const VerifyReport& report) {
    std::ostringstream out;
    out << "n,exact_final,exact_final_decimal,mc_estimate,mc_stderr,"
           "symbolic_equals_closed,sum_rule_holds,mc_within_tolerance\n";
    for (const auto& row : report.per_n) {
        out << row.n << "," << row.exact_final << ","
            << format_significant(row.exact_final.to_double()) << ","
            << format_significant(row.mc_estimate) << ","
            << format_significant(row.mc_stderr) << ","
            << true_false(row.symbolic_equals_closed) << ","
            << true_false(row.sum_rule_holds) << ","
            << true_false(row.mc_within_tolerance) << "\n";
    }
    return out.str();
}

}  // namespace

std::string render_exact(const ExactTable& table, bool per_k, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return render_exact_text(table, per_k);
        case OutputFormat::json: return render_exact_json(table, per_k);
        case OutputFormat::csv: return render_exact_csv(table, per_k);
    }
    throw std::logic_error("unreachable");
}

std::string render_mc(const McReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return render_mc_text(report);
        case OutputFormat::json: return render_mc_json(report);
        case OutputFormat::csv: return render_mc_csv(report);
    }
    throw std::logic_error("unreachable");
}

std::string render_verify(const VerifyReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return render_verify_text(report);
        case OutputFormat::json: return render_verify_json(report);
        case OutputFormat::csv: return render_verify_csv(report);
    }
    throw std::logic_error("unreachable");
}

}  // namespace brokenstick
