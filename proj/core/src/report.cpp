#include "twistlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace twistlab::harness {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

void append_cell_json(std::ostringstream& out, const Cell& c, const std::string& indent) {
    out << indent << "{\n";
    out << indent << "  \"name\": \"" << json_escape(c.name) << "\",\n";
    out << indent << "  \"inputs\": \"" << json_escape(c.inputs) << "\",\n";
    out << indent << "  \"computed\": \"" << format_number(c.computed) << "\",\n";
    out << indent << "  \"expected\": \"" << format_number(c.expected) << "\",\n";
    out << indent << "  \"tolerance\": \"" << format_number(c.tolerance) << "\",\n";
    out << indent << "  \"relation\": \"" << relation_name(c.relation) << "\",\n";
    out << indent << "  \"pass\": " << (c.pass ? "true" : "false");
    if (!c.diagnostic.empty()) {
        out << ",\n" << indent << "  \"diagnostic\": \"" << json_escape(c.diagnostic) << "\"";
    }
    out << "\n" << indent << "}";
}

void append_result_json(std::ostringstream& out, const ScenarioResult& r,
                        const std::string& indent) {
    out << indent << "{\n";
    out << indent << "  \"name\": \"" << json_escape(r.name) << "\",\n";
    out << indent << "  \"seed\": " << r.seed << ",\n";
    out << indent << "  \"pass\": " << (r.all_pass() ? "true" : "false") << ",\n";
    out << indent << "  \"cells\": [";
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        out << (i ? ",\n" : "\n");
        append_cell_json(out, r.cells[i], indent + "    ");
    }
    out << (r.cells.empty() ? "]" : "\n" + indent + "  ]") << "\n";
    out << indent << "}";
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string to_json(const ScenarioResult& result) {
    std::ostringstream out;
    append_result_json(out, result, "");
    out << "\n";
    return out.str();
}

std::string to_json(const std::vector<ScenarioResult>& results) {
    bool all = true;
    for (const auto& r : results) all = all && r.all_pass();
    std::ostringstream out;
    out << "{\n  \"pass\": " << (all ? "true" : "false") << ",\n  \"results\": [";
    for (std::size_t i = 0; i < results.size(); ++i) {
        out << (i ? ",\n" : "\n");
        append_result_json(out, results[i], "    ");
    }
    out << (results.empty() ? "]" : "\n  ]") << "\n}\n";
    return out.str();
}

std::string to_csv(const std::vector<ScenarioResult>& results) {
    std::ostringstream out;
    out << "scenario,cell,inputs,computed,expected,tolerance,pass\n";
    for (const auto& r : results) {
        for (const auto& c : r.cells) {
            out << csv_field(r.name) << ',' << csv_field(c.name) << ',' << csv_field(c.inputs)
                << ',' << format_number(c.computed) << ',' << format_number(c.expected) << ','
                << format_number(c.tolerance) << ',' << (c.pass ? "true" : "false") << "\n";
        }
    }
    return out.str();
}

void export_report(const std::vector<ScenarioResult>& results, ReportFormat format,
                   const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open report path: " + path);
    file << (format == ReportFormat::Json ? to_json(results) : to_csv(results));
    if (!file.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace twistlab::harness
