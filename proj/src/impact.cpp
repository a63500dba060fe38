#include "diact/impact.hpp"

namespace diact {

std::string to_string(ImpactKind k) {
    switch (k) {
        case ImpactKind::direct: return "direct";
        case ImpactKind::indirect: return "indirect";
        case ImpactKind::transfer: return "transfer";
        case ImpactKind::cumulative: return "cumulative";
    }
    return "?";
}

namespace {

void check_segment(const IoSystem& sys, const DemandSegment& seg, bool allow_negative) {
    if (seg.delta.len() != sys.n())
        throw ValidationError("segment length does not match the system's sector count");
    if (!allow_negative && !seg.delta.nonnegative())
        throw ValidationError(
            "segment has a negative entry; segments are portions of existing demand "
            "(pass the override to allow)");
}

}  // namespace

ImpactResult final_demand_impact(const IoSystem& sys, const DemandSegment& seg, ImpactKind kind,
                                 bool allow_negative) {
    if (seg.frame != Frame::simple)
        throw UnsupportedCombinationError("final-demand impact requires a simple-frame segment");
    check_segment(sys, seg, allow_negative);

    Matrix coeff = [&] {
        switch (kind) {
            case ImpactKind::cumulative: return sys.L();
            case ImpactKind::direct: return simple_requirements(sys, Kind::direct).values;
            case ImpactKind::indirect: return simple_requirements(sys, Kind::indirect).values;
            case ImpactKind::transfer: return simple_requirements(sys, Kind::transfer).values;
        }
        throw std::invalid_argument("unknown impact kind");
    }();
    return {kind, Frame::simple, coeff * diag_from(seg.delta), coeff * seg.delta};
}

ImpactResult gross_output_impact(const IoSystem& sys, const DemandSegment& seg, Kind kind,
                                 bool allow_negative) {
    if (seg.frame != Frame::composite)
        throw UnsupportedCombinationError("gross-output impact requires a composite-frame segment");
    check_segment(sys, seg, allow_negative);

    const Matrix coeff = composite_requirements(sys, kind).values;
    const ImpactKind ik = kind == Kind::direct     ? ImpactKind::direct
                          : kind == Kind::indirect ? ImpactKind::indirect
                                                   : ImpactKind::transfer;
    return {ik, Frame::composite, coeff * diag_from(seg.delta), coeff * seg.delta};
}

}  // namespace diact
