#include "qrlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qrlab {

void VerificationReport::finalize() {
    ratio = (rhs > 0.0) ? std::optional<double>(lhs / rhs) : std::nullopt;
    applicable = true;
    for (const auto& [name, ok] : hypotheses)
        if (!ok) applicable = false;
    pass = applicable && (lhs <= rhs * (1.0 + 1e-9));
    if (!applicable && notes.find("NOT-APPLICABLE") == std::string::npos)
        notes = notes.empty() ? "NOT-APPLICABLE" : ("NOT-APPLICABLE; " + notes);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_json(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"theorem_id\":" << quote(r.theorem_id) << ",\"params\":{";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << ',';
        os << quote(r.params[i].first) << ':' << format_double(r.params[i].second);
    }
    os << "},\"lhs\":" << format_double(r.lhs) << ",\"rhs\":" << format_double(r.rhs)
       << ",\"constant\":" << format_double(r.constant_used) << ",\"ratio\":";
    if (r.ratio)
        os << format_double(*r.ratio);
    else
        os << "null";
    os << ",\"hypotheses\":{";
    for (std::size_t i = 0; i < r.hypotheses.size(); ++i) {
        if (i) os << ',';
        os << quote(r.hypotheses[i].first) << ':' << (r.hypotheses[i].second ? "true" : "false");
    }
    os << "},\"applicable\":" << (r.applicable ? "true" : "false")
       << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"grid\":{\"angles\":" << r.grid_angles
       << ",\"radial\":" << r.grid_radial << "},\"notes\":" << quote(r.notes) << "}";
    return os.str();
}

std::string to_json(const std::vector<VerificationReport>& reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += ',';
        out += to_json(reports[i]);
    }
    out += ']';
    return out;
}

namespace {

VerificationReport from_nlohmann(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    for (const auto& [key, val] : j.at("params").items())
        r.params.emplace_back(key, val.get<double>());
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.constant_used = j.at("constant").get<double>();
    if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
    for (const auto& [key, val] : j.at("hypotheses").items())
        r.hypotheses.emplace_back(key, val.get<bool>());
    r.applicable = j.at("applicable").get<bool>();
    r.pass = j.at("pass").get<bool>();
    r.grid_angles = j.at("grid").at("angles").get<int>();
    r.grid_radial = j.at("grid").at("radial").get<int>();
    r.notes = j.at("notes").get<std::string>();
    return r;
}

}  // namespace

VerificationReport report_from_json(const std::string& text) {
    return from_nlohmann(nlohmann::ordered_json::parse(text));
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<VerificationReport> out;
    if (j.is_array())
        for (const auto& item : j) out.push_back(from_nlohmann(item));
    else
        out.push_back(from_nlohmann(j));
    return out;
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
    return a.theorem_id == b.theorem_id && a.params == b.params && a.lhs == b.lhs &&
           a.rhs == b.rhs && a.constant_used == b.constant_used && a.ratio == b.ratio &&
           a.hypotheses == b.hypotheses && a.applicable == b.applicable && a.pass == b.pass &&
           a.grid_angles == b.grid_angles && a.grid_radial == b.grid_radial && a.notes == b.notes;
}

std::string csv_header() {
    return "theorem_id,params,lhs,rhs,constant,ratio,applicable,pass,angles,radial,notes";
}

std::string to_csv_row(const VerificationReport& r) {
    std::ostringstream os;
    os << r.theorem_id << ",\"";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << ' ';
        os << r.params[i].first << '=' << format_double(r.params[i].second);
    }
    os << "\"," << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.constant_used) << ',' << (r.ratio ? format_double(*r.ratio) : "")
       << ',' << (r.applicable ? 1 : 0) << ',' << (r.pass ? 1 : 0) << ',' << r.grid_angles << ','
       << r.grid_radial << ",\"" << r.notes << '"';
    return os.str();
}

}  // namespace qrlab
