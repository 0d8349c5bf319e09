#pragma once

#include "dihedral/wordlen.hpp"

#include <string>
#include <vector>

namespace dihedral {

class UnsupportedClass : public Error {
public:
    explicit UnsupportedClass(const std::string& detail)
        : Error("UnsupportedClass: " + detail) {}
};

enum class BoundKind { Exact, UpperBound };

/// A predicted value or upper bound for one of the lambda quantities.
/// `conjectural` marks bounds that rest on the open conjecture rather than a
/// proved statement; the harness treats their failure as a reportable finding
/// instead of a broken build.
struct Bound {
    BoundKind kind = BoundKind::Exact;
    int value = 0;
    bool conjectural = false;
};

struct PredictedBounds {
    PresentationFamily family = PresentationFamily::NonGenerating;
    Bound lambda1;
    Bound lambda2;
    std::string provenance;
};

/// Closed-form predictions per presentation family:
///   Card2:            lambda1 = n (n odd) / n-1 (n even), lambda2 = 2
///   TwoInvOneCentral: lambda1 = lambda2 = n/2 (n = 4 handled as the direct
///                     special case; the value agrees with n/2)
///   OneInvTwoCyclic:  lambda1 = floor(n/2)+1 unless n = 2 mod 4 (then
///                     floor(n/2)); lambda2 = floor(n/2) if 4 | n else
///                     floor(n/2)+1
///   ThreeInv*:        lambda2 = 2 exact; lambda1 <= floor(n/2)+1, proved for
///                     translation classes of {f, rf, r^2 f} and
///                     {f, rf, r^3 f}, conjectural otherwise
/// Throws UnsupportedClass for NonGenerating.
PredictedBounds predict(const PresentationClass& cls, int n);

enum class Verdict { Match, BoundSatisfied, Violation };

std::string_view verdict_name(Verdict v);

/// Violation iff an exact prediction mismatches or a bound is exceeded.
Verdict judge(const PredictedBounds& predicted, const LambdaReport& observed);

struct VerificationRecord {
    int n = 0;
    GenSet genset;
    PresentationClass cls;
    PredictedBounds predicted;
    LambdaReport observed;
    Verdict verdict = Verdict::Match;
};

enum class FamilyFilter { Card2, Central, Chiral, ThreeInv, All };

std::string_view family_filter_name(FamilyFilter f);

struct VerifyOptions {
    int n_min = 3;
    int n_max = 40;
    FamilyFilter family = FamilyFilter::All;
    int jobs = 1;  // 0 = hardware concurrency
};

/// Enumerates every concrete set realizing the filtered families for each n
/// in range, compares predictions against the BFS oracle and returns records
/// ordered by (n, genset). Violations are data, not errors.
std::vector<VerificationRecord> verify_family(const VerifyOptions& opts);

struct SweepCounterexample {
    int n = 0;
    GenSet genset;
    std::string detail;
};

struct SweepPerN {
    int n = 0;
    long sets_checked = 0;
    /// Conjecture 1: max observed lambda1. Conjecture 2: max over sets of
    /// (max reflection length - max rotation length); <= 0 means the
    /// inequality held everywhere.
    int stat = 0;
};

struct SweepReport {
    int conjecture = 0;
    int n_min = 3;
    int n_max = 0;
    long total_checked = 0;
    std::vector<SweepPerN> per_n;
    std::vector<SweepCounterexample> counterexamples;
    /// CSV rows (no header) when requested; deterministic regardless of jobs.
    std::vector<std::string> csv_rows;
};

/// Checks lambda1 <= floor(n/2)+1 over every generating three-reflection set
/// {f, r^a f, r^b f}, 0 < a < b < n, for all n in [3, n_max].
SweepReport sweep_conjecture1(int n_max, int jobs = 1, bool collect_rows = false);

/// Checks l(r^m f) <= max_k l(r^k) for 0 < m < n over the same sets.
SweepReport sweep_conjecture2(int n_max, int jobs = 1, bool collect_rows = false);

} // namespace dihedral
