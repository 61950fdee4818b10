#pragma once

#include <limits>
#include <string>
#include <vector>

namespace bivage {

enum class Status { Holds, Fails, Inconclusive };

std::string to_string(Status s);

/// Grid-certified outcome of an inequality check.
///
/// A check sweeps a family of constraints g_i >= 0 and records the worst
/// signed slack. Slacks within `zero_eps` of zero count as equalities, so a
/// property holding with equality (e.g. NBU for an exponential) reports
/// Holds rather than Inconclusive.
///
///   Holds         all slacks >= -zero_eps
///   Fails         some slack < -tol (witness recorded)
///   Inconclusive  violations exist but none exceeds tol
struct Verdict {
    Status status = Status::Inconclusive;
    std::vector<double> witness; // point of worst violation, empty unless Fails
    double margin = std::numeric_limits<double>::infinity(); // worst signed slack

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }
    bool inconclusive() const { return status == Status::Inconclusive; }
};

/// Default tolerance for verdict slack.
inline constexpr double kVerdictTol = 1e-7;

/// Slacks within this of zero are treated as exact equalities.
inline constexpr double kEqualityEps = 1e-12;

/// Accumulates signed slacks from a grid sweep into a Verdict.
class VerdictSweep {
public:
    explicit VerdictSweep(double tol = kVerdictTol, double zero_eps = kEqualityEps)
        : tol_(tol), zero_eps_(zero_eps) {}

    void add(double slack) { add(slack, {}); }
    void add(double slack, std::vector<double> point);

    Verdict finish() const;

private:
    double tol_;
    double zero_eps_;
    double worst_ = std::numeric_limits<double>::infinity();
    std::vector<double> worst_point_;
    bool any_ = false;
    bool any_violation_ = false;
};

} // namespace bivage
