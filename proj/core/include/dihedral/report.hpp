#pragma once

#include "dihedral/presentations.hpp"

#include <iosfwd>
#include <string>

namespace dihedral {

// Deterministic emitters for the CSV / JSON surfaces. All CSV output uses a
// mandatory header row, LF line endings and RFC-4180 quoting.

std::string csv_field(std::string_view raw);
std::string json_escape(std::string_view raw);

std::string witness1_string(const GenSet& s, const Lambda1Witness& w);
std::string witness2_string(const GenSet& s, const Lambda2Witness& w);

/// "n,genset,class,lambda1,lambda2,diameter,witness1,witness2"
void write_lambda_csv_header(std::ostream& out);
void write_lambda_csv_row(std::ostream& out, const LambdaReport& r, std::string_view class_name);
std::string lambda_csv_row(const LambdaReport& r, std::string_view class_name);

/// Lambda schema plus "predicted_l1,predicted_l2,verdict". Bounds print as
/// "<=k", exact predictions as "k".
void write_verify_csv_header(std::ostream& out);
void write_verify_csv_row(std::ostream& out, const VerificationRecord& rec);
std::string verify_csv_row(const VerificationRecord& rec);
std::string bound_string(const Bound& b);

void write_lambda_json(std::ostream& out, const LambdaReport& r, std::string_view class_name);
void write_classify_json(std::ostream& out, const GenSet& s, const PresentationClass& cls);
void write_verify_json(std::ostream& out, const VerifyOptions& opts,
                       const std::vector<VerificationRecord>& records);
void write_sweep_json(std::ostream& out, const SweepReport& report);

} // namespace dihedral
