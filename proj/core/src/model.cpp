#include "tcoulomb/model.hpp"

#include <cmath>
#include <string>

#include "tcoulomb/errors.hpp"

namespace tcoulomb {

namespace {

constexpr double kPi = 3.14159265358979323846;

// scale factor taking a physical energy to the tilde frame: m r0^2 / hbar^2
double tilde_scale(const PhysicalParams& p) {
    return p.mass * p.cutoff_radius * p.cutoff_radius / (p.hbar * p.hbar);
}

void check_same_beta(const UnitFrame& a, const UnitFrame& b) {
    if (a.beta != b.beta) {
        throw UsageError("frames disagree on beta (" + std::to_string(a.beta) + " vs " +
                         std::to_string(b.beta) + "): conversions are only defined within one model");
    }
}

// energy in the tilde frame, the hub all conversions route through
double to_tilde(const Energy& e, const PhysicalParams* params) {
    switch (e.frame.kind) {
        case FrameKind::tilde: return e.value;
        case FrameKind::breve: return e.value * e.frame.beta * e.frame.beta;
        case FrameKind::physical:
            if (!params) throw UsageError("physical-frame conversion requires PhysicalParams");
            return e.value * tilde_scale(*params);
    }
    throw UsageError("unknown frame kind");
}

Energy from_tilde(double tilde_value, const UnitFrame& target, const PhysicalParams* params) {
    switch (target.kind) {
        case FrameKind::tilde: return {tilde_value, target};
        case FrameKind::breve: return {tilde_value / (target.beta * target.beta), target};
        case FrameKind::physical:
            if (!params) throw UsageError("physical-frame conversion requires PhysicalParams");
            return {tilde_value / tilde_scale(*params), target};
    }
    throw UsageError("unknown frame kind");
}

}  // namespace

void PhysicalParams::validate() const {
    if (!(mass > 0)) throw UsageError("mass must be positive");
    if (!(charge > 0)) throw UsageError("charge must be positive");
    if (atomic_number <= 0) throw UsageError("atomic number must be a positive integer");
    if (!(epsilon0 > 0)) throw UsageError("vacuum permittivity must be positive");
    if (!(cutoff_radius > 0)) throw UsageError("cutoff radius must be positive");
    if (!(hbar > 0)) throw UsageError("hbar must be positive");
}

double beta_from_physical(const PhysicalParams& p) {
    p.validate();
    return p.mass * p.cutoff_radius * p.atomic_number * p.charge * p.charge /
           (4.0 * kPi * p.epsilon0 * p.hbar * p.hbar);
}

Energy convert_energy(const Energy& e, const UnitFrame& target) {
    check_same_beta(e.frame, target);
    if (e.frame.kind == FrameKind::physical || target.kind == FrameKind::physical) {
        throw UsageError("physical-frame conversion requires PhysicalParams");
    }
    return from_tilde(to_tilde(e, nullptr), target, nullptr);
}

Energy convert_energy(const Energy& e, const UnitFrame& target, const PhysicalParams& params) {
    check_same_beta(e.frame, target);
    params.validate();
    return from_tilde(to_tilde(e, &params), target, &params);
}

}  // namespace tcoulomb
