#include "bivage/verdict.hpp"

namespace bivage {

std::string to_string(Status s) {
    switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

void VerdictSweep::add(double slack, std::vector<double> point) {
    any_ = true;
    if (slack < -zero_eps_) any_violation_ = true;
    if (slack < worst_) {
        worst_ = slack;
        worst_point_ = std::move(point);
    }
}

Verdict VerdictSweep::finish() const {
    Verdict v;
    v.margin = worst_;
    if (!any_) {
        v.status = Status::Inconclusive;
        return v;
    }
    if (!any_violation_) {
        v.status = Status::Holds;
    } else if (worst_ < -tol_) {
        v.status = Status::Fails;
        v.witness = worst_point_;
    } else {
        v.status = Status::Inconclusive;
    }
    return v;
}

} // namespace bivage
