#pragma once

#include "diact/requirements.hpp"

namespace diact {

/// Kind selector for impact analysis; cumulative (delta_T = L * delta_f_hat)
/// exists only in the simple frame.
enum class ImpactKind { direct, indirect, transfer, cumulative };

std::string to_string(ImpactKind k);

/// A disaggregated segment of final demands (simple frame) or gross
/// outputs (composite frame).
struct DemandSegment {
    Frame frame;
    Vector delta;
};

struct ImpactResult {
    ImpactKind kind;
    Frame frame;
    Matrix delta_T;
    Vector delta_x;
};

struct UnsupportedCombinationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// delta_T* = N* * delta_f_hat and delta_x* = N* * delta_f for a segment of
/// final demands; cumulative uses L in place of N*.
ImpactResult final_demand_impact(const IoSystem& sys, const DemandSegment& seg, ImpactKind kind,
                                 bool allow_negative = false);

/// Composite counterpart: delta_T* = N* * delta_x_hat, delta_x* = N* * delta_x.
ImpactResult gross_output_impact(const IoSystem& sys, const DemandSegment& seg, Kind kind,
                                 bool allow_negative = false);

}  // namespace diact
