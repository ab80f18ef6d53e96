#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qrlab {

// Structured outcome of one theorem or identity check.
//
// Invariants: pass = (lhs <= rhs * (1 + 1e-9)) AND all hypothesis flags true;
// ratio = lhs/rhs when rhs > 0.  Reports whose hypotheses fail are marked not
// applicable: the inequality is still measured for information but the report
// never counts as a failure.
struct VerificationReport {
    std::string theorem_id;
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant_used = 0.0;
    std::optional<double> ratio;
    std::vector<std::pair<std::string, bool>> hypotheses;
    bool applicable = true;
    bool pass = false;
    int grid_angles = 0;
    int grid_radial = 0;
    std::string notes;

    // Applies the report invariant: fills ratio, applicable and pass from the
    // measured quantities and hypothesis flags.
    void finalize();
};

// Fixed field order, every numeric value printed with 17 significant digits
// so serialized doubles round-trip exactly.
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& reports);

VerificationReport report_from_json(const std::string& text);
std::vector<VerificationReport> reports_from_json(const std::string& text);

bool reports_equal(const VerificationReport& a, const VerificationReport& b);

std::string csv_header();
std::string to_csv_row(const VerificationReport& r);

// Shared numeric formatting (17 significant digits).
std::string format_double(double v);

}  // namespace qrlab
