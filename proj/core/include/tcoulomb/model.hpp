#pragma once

namespace tcoulomb {

/// Physical constants of the Hamiltonian H = -hbar^2/(2m) Lap - Ze^2/(4 pi eps0 (r + r0)).
/// All fields SI, all strictly positive.
struct PhysicalParams {
    double mass;            // reduced mass m [kg]
    double charge;          // elementary charge e [C]
    int atomic_number;      // Z
    double epsilon0;        // vacuum permittivity [F/m]
    double cutoff_radius;   // r0 [m]
    double hbar;            // reduced Planck constant [J s]

    void validate() const;  // throws UsageError on any nonpositive field
};

/// The three energy conventions: physical (SI), tilde (H scaled by m r0^2/hbar^2,
/// potential -beta/(r+1)) and breve (tilde scaled by beta^-2, hydrogen-like).
enum class FrameKind { physical, tilde, breve };

struct UnitFrame {
    FrameKind kind = FrameKind::tilde;
    double beta = 1.0;  // dimensionless coupling, > 0
};

struct Energy {
    double value = 0.0;
    UnitFrame frame;
};

/// beta = m r0 Z e^2 / (4 pi eps0 hbar^2)
double beta_from_physical(const PhysicalParams& p);

/// Convert between frames sharing the same beta. tilde <-> breve uses
/// E_tilde = beta^2 E_breve; tilde <-> physical needs the physical constants.
Energy convert_energy(const Energy& e, const UnitFrame& target);
Energy convert_energy(const Energy& e, const UnitFrame& target, const PhysicalParams& params);

}  // namespace tcoulomb
