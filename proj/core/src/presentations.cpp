#include "dihedral/presentations.hpp"

#include "dihedral/report.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dihedral {

namespace {

Bound exact(int value) { return {BoundKind::Exact, value, false}; }

} // namespace

PredictedBounds predict(const PresentationClass& cls, int n) {
    const int half = n / 2;
    switch (cls.family) {
        case PresentationFamily::Card2:
            return {cls.family, exact(n % 2 == 1 ? n : n - 1), exact(2), "reflection-pair"};
        case PresentationFamily::TwoInvOneCentral: {
            // The generic count-down argument starts at n > 4; the direct n = 4
            // value happens to coincide with n/2.
            const int value = n == 4 ? 2 : half;
            return {cls.family, exact(value), exact(value), "central-augmented"};
        }
        case PresentationFamily::OneInvTwoCyclic: {
            const int l1 = (n % 2 == 1 || n % 4 == 0) ? half + 1 : half;
            const int l2 = (n % 4 == 0) ? half : half + 1;
            return {cls.family, exact(l1), exact(l2), "rotation-augmented"};
        }
        case PresentationFamily::ThreeInvA:
        case PresentationFamily::ThreeInvB:
        case PresentationFamily::ThreeInvC:
        case PresentationFamily::ThreeInvD: {
            const bool proved = cls.reflections &&
                                (cls.reflections->canonical == std::pair<int, int>{1, 2} ||
                                 cls.reflections->canonical == std::pair<int, int>{1, 3});
            PredictedBounds p;
            p.family = cls.family;
            p.lambda1 = Bound{BoundKind::UpperBound, half + 1, !proved};
            p.lambda2 = exact(2);
            p.provenance = proved ? "three-reflections-proved-bound"
                                  : "three-reflections-conjectured-bound";
            return p;
        }
        case PresentationFamily::NonGenerating:
            break;
    }
    throw UnsupportedClass("no prediction for non-generating sets");
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::BoundSatisfied: return "bound_satisfied";
        case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

Verdict judge(const PredictedBounds& predicted, const LambdaReport& observed) {
    auto holds = [](const Bound& b, int value) {
        return b.kind == BoundKind::Exact ? value == b.value : value <= b.value;
    };
    if (!holds(predicted.lambda1, observed.lambda1) ||
        !holds(predicted.lambda2, observed.lambda2))
        return Verdict::Violation;
    if (predicted.lambda1.kind == BoundKind::UpperBound ||
        predicted.lambda2.kind == BoundKind::UpperBound)
        return Verdict::BoundSatisfied;
    return Verdict::Match;
}

std::string_view family_filter_name(FamilyFilter f) {
    switch (f) {
        case FamilyFilter::Card2: return "card2";
        case FamilyFilter::Central: return "central";
        case FamilyFilter::Chiral: return "chiral";
        case FamilyFilter::ThreeInv: return "threeinv";
        case FamilyFilter::All: return "all";
    }
    return "?";
}

namespace {

bool family_matches(FamilyFilter filter, PresentationFamily family) {
    switch (filter) {
        case FamilyFilter::Card2: return family == PresentationFamily::Card2;
        case FamilyFilter::Central: return family == PresentationFamily::TwoInvOneCentral;
        case FamilyFilter::Chiral: return family == PresentationFamily::OneInvTwoCyclic;
        case FamilyFilter::ThreeInv:
            return family == PresentationFamily::ThreeInvA ||
                   family == PresentationFamily::ThreeInvB ||
                   family == PresentationFamily::ThreeInvC ||
                   family == PresentationFamily::ThreeInvD;
        case FamilyFilter::All: return family != PresentationFamily::NonGenerating;
    }
    return false;
}

std::vector<GenSet> candidates_for(FamilyFilter filter, int n) {
    std::vector<GenSet> sets;
    auto append = [&sets](std::vector<GenSet> extra) {
        sets.insert(sets.end(), std::make_move_iterator(extra.begin()),
                    std::make_move_iterator(extra.end()));
    };
    switch (filter) {
        case FamilyFilter::Card2: return reflection_pairs(n);
        case FamilyFilter::Central: return central_triples(n);
        case FamilyFilter::Chiral: return chiral_triples(n);
        case FamilyFilter::ThreeInv: return reflection_triples(n);
        case FamilyFilter::All:
            append(reflection_pairs(n));
            append(central_triples(n));
            append(chiral_triples(n));
            append(reflection_triples(n));
            return sets;
    }
    return sets;
}

std::vector<VerificationRecord> verify_one_n(int n, FamilyFilter filter) {
    std::vector<VerificationRecord> records;
    for (GenSet& s : candidates_for(filter, n)) {
        PresentationClass cls = classify(s);
        if (!family_matches(filter, cls.family)) continue;
        PredictedBounds predicted = predict(cls, n);
        LambdaReport observed = lambda_report(s);
        const Verdict verdict = judge(predicted, observed);
        records.push_back({n, std::move(s), std::move(cls), std::move(predicted),
                           std::move(observed), verdict});
    }
    std::sort(records.begin(), records.end(),
              [](const VerificationRecord& a, const VerificationRecord& b) {
                  return genset_less(a.genset, b.genset);
              });
    return records;
}

} // namespace

std::vector<VerificationRecord> verify_family(const VerifyOptions& opts) {
    if (opts.n_min < 3 || opts.n_max < opts.n_min)
        throw std::invalid_argument("verify_family needs 3 <= n_min <= n_max");
    const long count = opts.n_max - opts.n_min + 1;
    std::vector<std::vector<VerificationRecord>> slots(static_cast<size_t>(count));
    detail::parallel_for(count, opts.jobs, [&](long i) {
        slots[static_cast<size_t>(i)] = verify_one_n(opts.n_min + static_cast<int>(i), opts.family);
    });
    std::vector<VerificationRecord> all;
    for (auto& slot : slots)
        all.insert(all.end(), std::make_move_iterator(slot.begin()),
                   std::make_move_iterator(slot.end()));
    return all;
}

namespace {

struct SweepSlot {
    SweepPerN per_n;
    std::vector<SweepCounterexample> counterexamples;
    std::vector<std::string> csv_rows;
};

SweepReport merge_slots(int conjecture, int n_max, std::vector<SweepSlot> slots) {
    SweepReport report;
    report.conjecture = conjecture;
    report.n_min = 3;
    report.n_max = n_max;
    for (auto& slot : slots) {
        report.total_checked += slot.per_n.sets_checked;
        report.per_n.push_back(slot.per_n);
        std::move(slot.counterexamples.begin(), slot.counterexamples.end(),
                  std::back_inserter(report.counterexamples));
        std::move(slot.csv_rows.begin(), slot.csv_rows.end(),
                  std::back_inserter(report.csv_rows));
    }
    return report;
}

void check_sweep_range(int n_max) {
    if (n_max < 3) throw std::invalid_argument("sweep needs n_max >= 3");
}

} // namespace

SweepReport sweep_conjecture1(int n_max, int jobs, bool collect_rows) {
    check_sweep_range(n_max);
    std::vector<SweepSlot> slots(static_cast<size_t>(n_max - 2));
    detail::parallel_for(n_max - 2, jobs, [&](long i) {
        const int n = static_cast<int>(i) + 3;
        const int bound = n / 2 + 1;
        SweepSlot& slot = slots[static_cast<size_t>(i)];
        slot.per_n.n = n;
        for (GenSet& s : normalized_reflection_triples(n)) {
            const PresentationClass cls = classify(s);
            if (cls.family == PresentationFamily::NonGenerating) continue;
            const LengthTable table = compute_lengths(s);
            const LambdaReport report = lambda_report(table);
            ++slot.per_n.sets_checked;
            slot.per_n.stat = std::max(slot.per_n.stat, report.lambda1);
            if (report.lambda1 > bound) {
                std::ostringstream detail;
                detail << "lambda1 = " << report.lambda1 << " exceeds bound " << bound
                       << " with witness " << witness1_string(s, report.witness1);
                slot.counterexamples.push_back({n, s, detail.str()});
            }
            if (collect_rows) {
                VerificationRecord rec{n, s, cls, predict(cls, n), report, Verdict::Match};
                rec.verdict = judge(rec.predicted, rec.observed);
                slot.csv_rows.push_back(verify_csv_row(rec));
            }
        }
    });
    return merge_slots(1, n_max, std::move(slots));
}

SweepReport sweep_conjecture2(int n_max, int jobs, bool collect_rows) {
    check_sweep_range(n_max);
    std::vector<SweepSlot> slots(static_cast<size_t>(n_max - 2));
    detail::parallel_for(n_max - 2, jobs, [&](long i) {
        const int n = static_cast<int>(i) + 3;
        SweepSlot& slot = slots[static_cast<size_t>(i)];
        slot.per_n.n = n;
        slot.per_n.stat = std::numeric_limits<int>::min();
        for (GenSet& s : normalized_reflection_triples(n)) {
            if (classify(s).family == PresentationFamily::NonGenerating) continue;
            const LengthTable table = compute_lengths(s);
            int max_rotation = 0;
            for (int k = 0; k < n; ++k)
                max_rotation = std::max(max_rotation, table.length_at(k));
            int worst_m = 0;
            int max_reflection = std::numeric_limits<int>::min();
            for (int m = 1; m < n; ++m) {
                const int len = table.length_at(n + m);
                if (len > max_reflection) {
                    max_reflection = len;
                    worst_m = m;
                }
            }
            ++slot.per_n.sets_checked;
            slot.per_n.stat = std::max(slot.per_n.stat, max_reflection - max_rotation);
            if (max_reflection > max_rotation) {
                std::ostringstream detail;
                detail << "l(" << to_string(Element{worst_m, true}) << ") = " << max_reflection
                       << " exceeds max rotation length " << max_rotation;
                slot.counterexamples.push_back({n, s, detail.str()});
            }
            if (collect_rows) {
                std::ostringstream row;
                const LambdaReport report = lambda_report(table);
                row << n << ',' << csv_field(s.brace_string()) << ','
                    << classify(s).name() << ',' << report.lambda1 << ',' << report.lambda2
                    << ',' << report.diameter << ','
                    << csv_field(witness1_string(s, report.witness1)) << ','
                    << csv_field(witness2_string(s, report.witness2)) << ",,,"
                    << (max_reflection > max_rotation ? "VIOLATION" : "bound_satisfied");
                slot.csv_rows.push_back(row.str());
            }
        }
    });
    return merge_slots(2, n_max, std::move(slots));
}

} // namespace dihedral
