// dlambda: exact lambda1/lambda2 computation, presentation classification,
// closed-form verification runs and conjecture sweeps for dihedral groups
// with symmetric generating sets.
//
// Exit status: 0 clean, 1 domain error, 2 usage error, 3 a sweep or a
// conjectured bound found a counterexample.

#include "dihedral/morphisms.hpp"
#include "dihedral/presentations.hpp"
#include "dihedral/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dihedral;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& detail)
        : std::runtime_error("UsageError: " + detail) {}
};

struct RunConfig {
    enum class Command { Lambda, Classify, Verify, Sweep, Automorphism, Export };

    Command command = Command::Lambda;
    int n = 0;
    int n_min = 3;
    int n_max = 0;
    std::vector<std::string> gens;
    std::vector<std::string> gens2;
    std::string family = "all";
    std::string format = "text";
    std::string out_path;
    int jobs = 0;
    bool all_maps = false;
    int single_cap = 4096;
    int sweep_cap = 512;
};

void apply_hard_cap_env(RunConfig& config) {
    const char* raw = std::getenv("DLAMBDA_HARD_CAP");
    if (raw == nullptr) return;
    char* end = nullptr;
    const long cap = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || cap < 3)
        throw UsageError(std::string("DLAMBDA_HARD_CAP must be an integer >= 3, got '") +
                         raw + "'");
    config.single_cap = static_cast<int>(cap);
    config.sweep_cap = static_cast<int>(cap);
}

GenSet parse_genset(int n, const std::vector<std::string>& specs, int cap) {
    if (n < 3) throw UsageError("--n must be at least 3");
    if (n > cap)
        throw UsageError("--n " + std::to_string(n) + " exceeds the hard cap " +
                         std::to_string(cap));
    if (specs.empty()) throw UsageError("at least one --gen element is required");
    const Group g = Group::dihedral(n);
    std::vector<Element> elems;
    elems.reserve(specs.size());
    for (const std::string& text : specs) elems.push_back(parse_element(text, g));
    return GenSet::validate(g, std::move(elems));
}

void check_range(const RunConfig& config) {
    if (config.n_min < 3) throw UsageError("--n-min must be at least 3");
    if (config.n_max < config.n_min) throw UsageError("--n-max must be >= --n-min");
    if (config.n_max > config.sweep_cap)
        throw UsageError("--n-max " + std::to_string(config.n_max) +
                         " exceeds the hard cap " + std::to_string(config.sweep_cap));
}

FamilyFilter parse_family(const std::string& name) {
    if (name == "card2") return FamilyFilter::Card2;
    if (name == "central") return FamilyFilter::Central;
    if (name == "chiral") return FamilyFilter::Chiral;
    if (name == "threeinv") return FamilyFilter::ThreeInv;
    if (name == "all") return FamilyFilter::All;
    throw UsageError("unknown --family '" + name + "' (card2|central|chiral|threeinv|all)");
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
    for (const char* name : allowed)
        if (config.format == name) return;
    std::string list;
    for (const char* name : allowed) {
        if (!list.empty()) list += '|';
        list += name;
    }
    throw UsageError("unsupported --format '" + config.format + "' here (" + list + ")");
}

std::string classify_name_or_dash(const GenSet& s) {
    if (s.size() != 2 && s.size() != 3) return "-";
    return std::string(classify(s).name());
}

int run_lambda(const RunConfig& config, std::ostream& out) {
    require_format(config, {"text", "csv", "json"});
    const GenSet s = parse_genset(config.n, config.gens, config.single_cap);
    const LambdaReport report = lambda_report(s);
    const std::string cls = classify_name_or_dash(s);
    if (config.format == "csv") {
        write_lambda_csv_header(out);
        write_lambda_csv_row(out, report, cls);
    } else if (config.format == "json") {
        write_lambda_json(out, report, cls);
    } else {
        out << s.to_string() << "\n"
            << "class     " << cls << "\n"
            << "lambda1   " << report.lambda1 << "  at "
            << witness1_string(s, report.witness1) << "\n"
            << "lambda2   " << report.lambda2 << "  at "
            << witness2_string(s, report.witness2) << "\n"
            << "diameter  " << report.diameter << "\n";
    }
    return kExitOk;
}

int run_classify(const RunConfig& config, std::ostream& out) {
    require_format(config, {"text", "csv", "json"});
    const GenSet s = parse_genset(config.n, config.gens, config.single_cap);
    if (s.size() != 2 && s.size() != 3)
        throw UsageError("classify needs two or three generators");
    const PresentationClass cls = classify(s);
    if (config.format == "json") {
        write_classify_json(out, s, cls);
        return kExitOk;
    }
    if (config.format == "csv") {
        out << "n,genset,class,translation,normalized_a,normalized_b,h1,h2,h3,h1h2,"
               "generating_pairs\n";
        out << s.n() << ',' << csv_field(s.brace_string()) << ',' << cls.name();
        if (cls.reflections) {
            const ThreeReflectionData& d = *cls.reflections;
            std::string pairs;
            for (const int p : d.generating_pairs) {
                if (!pairs.empty()) pairs += ' ';
                pairs += std::to_string(p);
            }
            out << ',' << d.translation << ',' << d.a << ',' << d.b << ',' << d.h1 << ','
                << d.h2 << ',' << d.h3 << ',' << d.h12 << ',' << csv_field(pairs);
        } else {
            out << ",,,,,,,,";
        }
        out << '\n';
        return kExitOk;
    }
    out << s.to_string() << "\n" << "class " << cls.name() << "\n";
    if (cls.reflections) {
        const ThreeReflectionData& d = *cls.reflections;
        out << "normalized {f, r^" << d.a << "*f, r^" << d.b << "*f} after translation by "
            << d.translation << "\n"
            << "|H1|=" << d.h1 << " |H2|=" << d.h2 << " |H3|=" << d.h3 << " |H1H2|=" << d.h12
            << "\n";
        out << "generating pairs:";
        if (d.generating_pairs.empty()) out << " none";
        for (const int p : d.generating_pairs) {
            static constexpr const char* kPairs[] = {" (0,1)", " (0,2)", " (1,2)"};
            out << kPairs[p];
        }
        out << "\n";
    }
    return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    require_format(config, {"text", "csv", "json"});
    check_range(config);
    VerifyOptions opts;
    opts.n_min = config.n_min;
    opts.n_max = config.n_max;
    opts.family = parse_family(config.family);
    opts.jobs = config.jobs;
    const std::vector<VerificationRecord> records = verify_family(opts);

    long violations = 0;
    bool exact_violated = false;
    bool conjecture_violated = false;
    auto holds = [](const Bound& b, int value) {
        return b.kind == BoundKind::Exact ? value == b.value : value <= b.value;
    };
    for (const VerificationRecord& rec : records) {
        if (rec.verdict != Verdict::Violation) continue;
        ++violations;
        const bool l1_bad = !holds(rec.predicted.lambda1, rec.observed.lambda1);
        const bool l2_bad = !holds(rec.predicted.lambda2, rec.observed.lambda2);
        if ((l1_bad && !rec.predicted.lambda1.conjectural) ||
            (l2_bad && !rec.predicted.lambda2.conjectural))
            exact_violated = true;
        else
            conjecture_violated = true;
        err << "violation: n=" << rec.n << " S=" << rec.genset.brace_string() << " class="
            << rec.cls.name() << " lambda1=" << rec.observed.lambda1 << " (predicted "
            << bound_string(rec.predicted.lambda1) << ") lambda2=" << rec.observed.lambda2
            << " (predicted " << bound_string(rec.predicted.lambda2) << ")\n";
    }

    if (config.format == "csv") {
        write_verify_csv_header(out);
        for (const VerificationRecord& rec : records) write_verify_csv_row(out, rec);
    } else if (config.format == "json") {
        write_verify_json(out, opts, records);
    } else {
        out << "family " << family_filter_name(opts.family) << ": n in [" << opts.n_min
            << ", " << opts.n_max << "], checked " << records.size() << " sets, "
            << violations << " violations\n";
    }
    if (exact_violated) return kExitDomainError;
    if (conjecture_violated) return kExitCounterexample;
    return kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    require_format(config, {"text", "csv", "json"});
    check_range(config);
    const bool csv = config.format == "csv";
    const SweepReport first = sweep_conjecture1(config.n_max, config.jobs, csv);
    const SweepReport second = sweep_conjecture2(config.n_max, config.jobs, csv);

    if (csv) {
        write_verify_csv_header(out);
        for (const std::string& row : first.csv_rows) out << row << '\n';
        for (const std::string& row : second.csv_rows) out << row << '\n';
    } else if (config.format == "json") {
        out << "{\"conjecture1\":";
        std::ostringstream buf1, buf2;
        write_sweep_json(buf1, first);
        write_sweep_json(buf2, second);
        std::string one = buf1.str(), two = buf2.str();
        while (!one.empty() && one.back() == '\n') one.pop_back();
        while (!two.empty() && two.back() == '\n') two.pop_back();
        out << one << ",\"conjecture2\":" << two << "}\n";
    } else {
        for (const SweepReport* report : {&first, &second}) {
            out << "conjecture " << report->conjecture << ": n in [3, " << report->n_max
                << "], checked " << report->total_checked << " sets, "
                << report->counterexamples.size() << " counterexamples\n";
        }
    }

    bool found = false;
    for (const SweepReport* report : {&first, &second}) {
        for (const SweepCounterexample& cx : report->counterexamples) {
            found = true;
            err << "counterexample (conjecture " << report->conjecture << "): n=" << cx.n
                << " S=" << cx.genset.brace_string() << " " << cx.detail << "\n";
        }
    }
    return found ? kExitCounterexample : kExitOk;
}

void print_table(const AutomorphismTable& table, std::ostream& out) {
    const Group& g = table.source.group();
    out << "generator map:";
    for (int i = 0; i < table.source.size(); ++i)
        out << ' ' << to_string(table.source.at(i)) << "->"
            << to_string(table.target.at(table.generator_map[static_cast<size_t>(i)]));
    out << "\n";
    for (int idx = 0; idx < g.order(); ++idx)
        out << to_string(element_at(idx, g)) << " -> "
            << to_string(element_at(table.element_map[static_cast<size_t>(idx)], g)) << "\n";
}

void print_table_json(const AutomorphismTable& table, std::ostream& out) {
    const Group& g = table.source.group();
    out << "{\"generator_map\":{";
    for (int i = 0; i < table.source.size(); ++i) {
        if (i > 0) out << ',';
        out << '"' << json_escape(to_string(table.source.at(i))) << "\":\""
            << json_escape(to_string(table.target.at(table.generator_map[static_cast<size_t>(i)])))
            << '"';
    }
    out << "},\"elements\":{";
    for (int idx = 0; idx < g.order(); ++idx) {
        if (idx > 0) out << ',';
        out << '"' << json_escape(to_string(element_at(idx, g))) << "\":\""
            << json_escape(to_string(element_at(table.element_map[static_cast<size_t>(idx)], g)))
            << '"';
    }
    out << "}}";
}

int run_automorphism(const RunConfig& config, std::ostream& out) {
    require_format(config, {"text", "csv", "json"});
    const GenSet s1 = parse_genset(config.n, config.gens, config.single_cap);
    const GenSet s2 = parse_genset(config.n, config.gens2, config.single_cap);
    std::vector<AutomorphismTable> tables;
    if (config.all_maps) {
        tables = all_relation_preserving_maps(s1, s2);
    } else if (auto table = find_relation_preserving_map(s1, s2)) {
        tables.push_back(std::move(*table));
    }

    if (config.format == "json") {
        out << "{\"n\":" << s1.n() << ",\"source\":\"" << json_escape(s1.brace_string())
            << "\",\"target\":\"" << json_escape(s2.brace_string()) << "\",\"maps\":[";
        for (size_t i = 0; i < tables.size(); ++i) {
            if (i > 0) out << ',';
            print_table_json(tables[i], out);
        }
        out << "]}\n";
        return kExitOk;
    }
    if (config.format == "csv") {
        out << "map,element,image\n";
        for (size_t i = 0; i < tables.size(); ++i) {
            const Group& g = tables[i].source.group();
            for (int idx = 0; idx < g.order(); ++idx)
                out << i + 1 << ',' << to_string(element_at(idx, g)) << ','
                    << to_string(element_at(tables[i].element_map[static_cast<size_t>(idx)], g))
                    << '\n';
        }
        return kExitOk;
    }
    if (tables.empty()) {
        out << "no relation-preserving map: " << s1.brace_string() << " -> "
            << s2.brace_string() << "\n";
        return kExitOk;
    }
    for (size_t i = 0; i < tables.size(); ++i) {
        if (config.all_maps) out << "map " << i + 1 << " of " << tables.size() << "\n";
        print_table(tables[i], out);
    }
    return kExitOk;
}

int run_export(const RunConfig& config, std::ostream& out) {
    require_format(config, {"text", "dot"});
    const GenSet s = parse_genset(config.n, config.gens, config.single_cap);
    export_cayley(compute_lengths(s), out);
    return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case RunConfig::Command::Lambda: return run_lambda(config, out);
        case RunConfig::Command::Classify: return run_classify(config, out);
        case RunConfig::Command::Verify: return run_verify(config, out, err);
        case RunConfig::Command::Sweep: return run_sweep(config, out, err);
        case RunConfig::Command::Automorphism: return run_automorphism(config, out);
        case RunConfig::Command::Export: return run_export(config, out);
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig config;

    CLI::App app{"exact lambda perturbation toolkit for dihedral groups"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_gens) {
        cmd->add_option("--format", config.format, "text|csv|json")
            ->default_str("text");
        cmd->add_option("--out", config.out_path, "write output to a file instead of stdout");
        if (with_gens)
            cmd->add_option("--gen", config.gens, "generator element, e.g. f, r^3, r^1*f")
                ->required();
    };

    CLI::App* lambda_cmd = app.add_subcommand("lambda", "lambda1/lambda2 of one set");
    lambda_cmd->add_option("--n", config.n, "dihedral index")->required();
    add_common(lambda_cmd, true);

    CLI::App* classify_cmd = app.add_subcommand("classify", "presentation family of one set");
    classify_cmd->add_option("--n", config.n, "dihedral index")->required();
    add_common(classify_cmd, true);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare closed-form predictions against the oracle");
    verify_cmd->add_option("--n-min", config.n_min, "lower bound of the range");
    verify_cmd->add_option("--n-max", config.n_max, "upper bound of the range")->required();
    verify_cmd->add_option("--family", config.family, "card2|central|chiral|threeinv|all");
    verify_cmd->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");
    add_common(verify_cmd, false);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "counterexample sweeps for both conjectures");
    sweep_cmd->add_option("--n-max", config.n_max, "upper bound of the range")->required();
    sweep_cmd->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");
    add_common(sweep_cmd, false);

    CLI::App* morph_cmd =
        app.add_subcommand("automorphism", "relation-preserving generator bijections");
    morph_cmd->add_option("--n", config.n, "dihedral index")->required();
    morph_cmd->add_option("--gen2", config.gens2, "target set generator")->required();
    morph_cmd->add_flag("--all", config.all_maps, "list every valid bijection");
    add_common(morph_cmd, true);

    CLI::App* export_cmd = app.add_subcommand("export", "Cayley graph in DOT format");
    export_cmd->add_option("--n", config.n, "dihedral index")->required();
    add_common(export_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (lambda_cmd->parsed()) config.command = RunConfig::Command::Lambda;
    if (classify_cmd->parsed()) config.command = RunConfig::Command::Classify;
    if (verify_cmd->parsed()) config.command = RunConfig::Command::Verify;
    if (sweep_cmd->parsed()) config.command = RunConfig::Command::Sweep;
    if (morph_cmd->parsed()) config.command = RunConfig::Command::Automorphism;
    if (export_cmd->parsed()) config.command = RunConfig::Command::Export;

    try {
        apply_hard_cap_env(config);

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!config.out_path.empty()) {
            file.open(config.out_path, std::ios::binary);
            if (!file) throw SinkWriteFailure();
            out = &file;
        }
        return run(config, *out, std::cerr);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "UsageError: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}
