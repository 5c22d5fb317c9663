#pragma once

#include <complex>
#include <string>
#include <vector>

namespace risamb {

// One measured operating point of the varactor-tuned unit cell.
struct CellSample {
    double voltage = 0.0;       // control voltage [V]
    double amplitude_db = 0.0;  // |r| in dB, <= 0 for a passive cell
    double phase_deg = 0.0;     // arg(r) in degrees, wrapped to (-180, 180]
};

// Arc of wrapped phases that no control voltage can reach.
struct PhaseGap {
    double lo_deg = 0.0;     // start of the unreachable arc (exclusive)
    double hi_deg = 0.0;     // end of the unreachable arc (exclusive)
    double width_deg = 0.0;  // 0 when the table covers the full circle
};

// Result of inverting the phase response.
struct VoltageSolution {
    double voltage = 0.0;
    double achieved_phase_deg = 0.0;      // wrapped
    double achieved_amplitude_db = 0.0;   // amplitude cost at that voltage
    double circular_error_deg = 0.0;      // |wrap(achieved - target)|
};

// Validity cone of the cell response model: incidence and departure angles
// must both be strictly below the bound.
struct AngularDomain {
    double max_deflection_deg = 40.0;
};

/// Voltage-controlled reflection response of one unit cell.
///
/// Holds the measured (voltage, amplitude_dB, phase) table and evaluates
/// r(v) = g0 * 10^(A(v)/20) * exp(j*phi(v)), where A and phi are
/// piecewise-linear in voltage. The phase is interpolated on its unwrapped
/// branch so that interpolation never crosses a wrap discontinuity; it is
/// re-wrapped only at the output boundary. No extrapolation outside the
/// table's voltage range.
class CellResponseModel {
public:
    // Default-constructed model is the shipped measured dataset.
    CellResponseModel() : CellResponseModel(table_i()) {}

    static CellResponseModel from_samples(std::vector<CellSample> samples, double g0 = 1.0);

    // The measured 14-row characterization of the prototype cell (0-5 V).
    static CellResponseModel table_i(double g0 = 1.0);

    // CSV with header "voltage,amplitude_db,phase_deg".
    static CellResponseModel from_csv(const std::string& path, double g0 = 1.0);

    const std::vector<CellSample>& samples() const { return samples_; }
    const std::vector<double>& unwrapped_phase_deg() const { return unwrapped_; }
    double g0() const { return g0_; }
    double min_voltage() const { return samples_.front().voltage; }
    double max_voltage() const { return samples_.back().voltage; }

    // Piecewise-linear interpolants; voltage must lie inside the table range.
    double amplitude_db_at(double voltage) const;
    double phase_deg_at(double voltage) const;          // unwrapped branch
    double wrapped_phase_deg_at(double voltage) const;

    // Complex reflection coefficient at the given control voltage.
    std::complex<double> reflection(double voltage) const;

    /// Voltage whose interpolated phase minimizes the circular distance to
    /// the target. Inside the achievable span the error is zero; inside a
    /// coverage gap the nearer achievable endpoint is returned. The choice
    /// is by phase alone; the amplitude at the chosen voltage is reported,
    /// not optimized.
    VoltageSolution voltage_for_phase(double target_phase_deg) const;

    // Widest arc of wrapped phases not attained by any voltage.
    PhaseGap achievable_phase_gap() const;

private:
    CellResponseModel(std::vector<CellSample> samples, std::vector<double> unwrapped, double g0)
        : samples_(std::move(samples)), unwrapped_(std::move(unwrapped)), g0_(g0) {}

    // Index i of the segment [v_i, v_{i+1}] containing v.
    std::size_t segment_index(double voltage) const;

    std::vector<CellSample> samples_;   // strictly increasing voltage
    std::vector<double> unwrapped_;     // minimal-jump unwrapping of phase_deg
    double g0_ = 1.0;                   // unit-cell gain
};

} // namespace risamb
