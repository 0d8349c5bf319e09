#include "dihedral/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace dihedral {

std::string csv_field(std::string_view raw) {
    const bool needs_quotes =
        raw.find_first_of(",\"\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(raw);
    std::string out = "\"";
    for (const char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (const char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string witness1_string(const GenSet& s, const Lambda1Witness& w) {
    return "g=" + to_string(w.g) + ";s=" + to_string(s.at(w.gen));
}

std::string witness2_string(const GenSet& s, const Lambda2Witness& w) {
    return "g=" + to_string(w.g) + ";s=" + to_string(s.at(w.gen1)) +
           ";s'=" + to_string(s.at(w.gen2));
}

void write_lambda_csv_header(std::ostream& out) {
    out << "n,genset,class,lambda1,lambda2,diameter,witness1,witness2\n";
}

std::string lambda_csv_row(const LambdaReport& r, std::string_view class_name) {
    std::ostringstream row;
    row << r.genset.n() << ',' << csv_field(r.genset.brace_string()) << ','
        << csv_field(class_name) << ',' << r.lambda1 << ',' << r.lambda2 << ','
        << r.diameter << ',' << csv_field(witness1_string(r.genset, r.witness1)) << ','
        << csv_field(witness2_string(r.genset, r.witness2));
    return row.str();
}

void write_lambda_csv_row(std::ostream& out, const LambdaReport& r,
                          std::string_view class_name) {
    out << lambda_csv_row(r, class_name) << '\n';
}

std::string bound_string(const Bound& b) {
    return b.kind == BoundKind::Exact ? std::to_string(b.value)
                                      : "<=" + std::to_string(b.value);
}

void write_verify_csv_header(std::ostream& out) {
    out << "n,genset,class,lambda1,lambda2,diameter,witness1,witness2,"
           "predicted_l1,predicted_l2,verdict\n";
}

std::string verify_csv_row(const VerificationRecord& rec) {
    std::ostringstream row;
    row << lambda_csv_row(rec.observed, rec.cls.name()) << ','
        << bound_string(rec.predicted.lambda1) << ',' << bound_string(rec.predicted.lambda2)
        << ',' << verdict_name(rec.verdict);
    return row.str();
}

void write_verify_csv_row(std::ostream& out, const VerificationRecord& rec) {
    out << verify_csv_row(rec) << '\n';
}

namespace {

void write_witness_json(std::ostream& out, const GenSet& s, const Lambda1Witness& w) {
    out << "{\"g\":\"" << json_escape(to_string(w.g)) << "\",\"s\":\""
        << json_escape(to_string(s.at(w.gen))) << "\"}";
}

void write_witness_json(std::ostream& out, const GenSet& s, const Lambda2Witness& w) {
    out << "{\"g\":\"" << json_escape(to_string(w.g)) << "\",\"s\":\""
        << json_escape(to_string(s.at(w.gen1))) << "\",\"s2\":\""
        << json_escape(to_string(s.at(w.gen2))) << "\"}";
}

} // namespace

void write_lambda_json(std::ostream& out, const LambdaReport& r, std::string_view class_name) {
    out << "{\"n\":" << r.genset.n() << ",\"genset\":\""
        << json_escape(r.genset.brace_string()) << "\",\"class\":\""
        << json_escape(class_name) << "\",\"lambda1\":" << r.lambda1
        << ",\"lambda2\":" << r.lambda2 << ",\"diameter\":" << r.diameter
        << ",\"witness1\":";
    write_witness_json(out, r.genset, r.witness1);
    out << ",\"witness2\":";
    write_witness_json(out, r.genset, r.witness2);
    out << "}\n";
}

void write_classify_json(std::ostream& out, const GenSet& s, const PresentationClass& cls) {
    out << "{\"n\":" << s.n() << ",\"genset\":\"" << json_escape(s.brace_string())
        << "\",\"class\":\"" << json_escape(cls.name()) << "\"";
    if (cls.reflections) {
        const ThreeReflectionData& d = *cls.reflections;
        out << ",\"translation\":" << d.translation << ",\"normalized\":[" << d.a << ','
            << d.b << "],\"h1\":" << d.h1 << ",\"h2\":" << d.h2 << ",\"h3\":" << d.h3
            << ",\"h1h2\":" << d.h12 << ",\"generating_pairs\":[";
        for (size_t i = 0; i < d.generating_pairs.size(); ++i) {
            if (i > 0) out << ',';
            out << d.generating_pairs[i];
        }
        out << ']';
    }
    out << "}\n";
}

void write_verify_json(std::ostream& out, const VerifyOptions& opts,
                       const std::vector<VerificationRecord>& records) {
    out << "{\"n_range\":[" << opts.n_min << ',' << opts.n_max << "],\"families\":[";
    if (opts.family == FamilyFilter::All) {
        out << "\"card2\",\"central\",\"chiral\",\"threeinv\"";
    } else {
        out << '"' << family_filter_name(opts.family) << '"';
    }
    out << "],\"checked\":" << records.size() << ",\"violations\":[";
    bool first = true;
    for (const VerificationRecord& rec : records) {
        if (rec.verdict != Verdict::Violation) continue;
        if (!first) out << ',';
        first = false;
        out << "{\"n\":" << rec.n << ",\"genset\":\"" << json_escape(rec.genset.brace_string())
            << "\",\"class\":\"" << json_escape(rec.cls.name()) << "\",\"lambda1\":"
            << rec.observed.lambda1 << ",\"lambda2\":" << rec.observed.lambda2
            << ",\"predicted_l1\":\"" << json_escape(bound_string(rec.predicted.lambda1))
            << "\",\"predicted_l2\":\"" << json_escape(bound_string(rec.predicted.lambda2))
            << "\"}";
    }
    out << "],\"max_lambda1_by_n\":{";
    int current_n = -1;
    int current_max = 0;
    bool first_entry = true;
    auto emit = [&]() {
        if (current_n < 0) return;
        if (!first_entry) out << ',';
        first_entry = false;
        out << '"' << current_n << "\":" << current_max;
    };
    for (const VerificationRecord& rec : records) {
        if (rec.n != current_n) {
            emit();
            current_n = rec.n;
            current_max = rec.observed.lambda1;
        } else {
            current_max = std::max(current_max, rec.observed.lambda1);
        }
    }
    emit();
    out << "}}\n";
}

void write_sweep_json(std::ostream& out, const SweepReport& report) {
    out << "{\"conjecture\":" << report.conjecture << ",\"n_range\":[" << report.n_min << ','
        << report.n_max << "],\"families\":[\"threeinv\"],\"checked\":" << report.total_checked
        << ",\"violations\":[";
    for (size_t i = 0; i < report.counterexamples.size(); ++i) {
        if (i > 0) out << ',';
        const SweepCounterexample& cx = report.counterexamples[i];
        out << "{\"n\":" << cx.n << ",\"genset\":\"" << json_escape(cx.genset.brace_string())
            << "\",\"detail\":\"" << json_escape(cx.detail) << "\"}";
    }
    out << "],\"" << (report.conjecture == 1 ? "max_lambda1_by_n" : "max_reflection_excess_by_n")
        << "\":{";
    for (size_t i = 0; i < report.per_n.size(); ++i) {
        if (i > 0) out << ',';
        out << '"' << report.per_n[i].n << "\":" << report.per_n[i].stat;
    }
    out << "}}\n";
}

} // namespace dihedral
