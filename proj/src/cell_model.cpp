#include "risamb/cell_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "risamb/angles.hpp"

namespace risamb {

namespace {

// Measured amplitude/phase of the prototype cell vs. control voltage,
// valid for deflection angles below 40 degrees.
const std::vector<CellSample>& table_i_samples() {
    static const std::vector<CellSample> rows = {
        {0.00, -1.517, 32.798},   {0.25, -1.807, 40.854},  {0.50, -3.156, 46.807},
        {0.75, -5.590, 53.543},   {1.00, -9.576, 70.320},  {1.25, -20.563, -167.158},
        {1.50, -6.615, -73.171},  {1.75, -3.029, -49.627}, {2.00, -1.959, -35.908},
        {2.50, -0.874, -23.263},  {3.00, -0.749, -16.087}, {3.50, -0.469, -12.663},
        {4.00, -0.528, -9.925},   {5.00, -0.439, -6.906},
    };
    return rows;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

CellResponseModel CellResponseModel::from_samples(std::vector<CellSample> samples, double g0) {
    if (samples.size() < 2) {
        throw std::invalid_argument("cell table needs at least 2 samples, got " +
                                    std::to_string(samples.size()));
    }
    if (!std::isfinite(g0) || g0 <= 0.0) {
        throw std::invalid_argument("cell gain g0 must be positive and finite");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const CellSample& s = samples[i];
        if (!std::isfinite(s.voltage) || !std::isfinite(s.amplitude_db) || !std::isfinite(s.phase_deg)) {
            throw std::invalid_argument("cell sample " + std::to_string(i) + " is not finite");
        }
        if (s.phase_deg <= -180.0 || s.phase_deg > 180.0) {
            throw std::invalid_argument("cell sample " + std::to_string(i) +
                                        " phase must lie in (-180, 180], got " +
                                        std::to_string(s.phase_deg));
        }
        if (i > 0 && samples[i].voltage <= samples[i - 1].voltage) {
            throw std::invalid_argument("cell sample " + std::to_string(i) +
                                        " voltage is not strictly increasing");
        }
    }

    // Minimal-jump unwrapping: pick the integer turn count k_i that keeps
    // each step wrap(p_i - p_{i-1}) in (-180, 180]. Storing p_i + 360*k_i
    // keeps every node within one rounding of its tabulated phase instead
    // of accumulating summation error.
    std::vector<double> unwrapped(samples.size());
    unwrapped[0] = samples[0].phase_deg;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double step = wrap_deg(samples[i].phase_deg - samples[i - 1].phase_deg);
        const double turns = std::round((unwrapped[i - 1] + step - samples[i].phase_deg) / 360.0);
        unwrapped[i] = samples[i].phase_deg + 360.0 * turns;
    }
    return CellResponseModel(std::move(samples), std::move(unwrapped), g0);
}

CellResponseModel CellResponseModel::table_i(double g0) {
    return from_samples(table_i_samples(), g0);
}

CellResponseModel CellResponseModel::from_csv(const std::string& path, double g0) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open cell table file: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("cell table file is empty: " + path);
    }
    std::string header = trim(line);
    header.erase(std::remove_if(header.begin(), header.end(),
                                [](unsigned char c) { return c == ' ' || c == '\t'; }),
                 header.end());
    if (header != "voltage,amplitude_db,phase_deg") {
        throw std::runtime_error("cell table header must be 'voltage,amplitude_db,phase_deg', got '" +
                                 trim(line) + "'");
    }
    std::vector<CellSample> samples;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = trim(line);
        if (row.empty()) continue;
        std::istringstream ss(row);
        std::string field;
        CellSample s;
        try {
            if (!std::getline(ss, field, ',')) throw std::invalid_argument("missing voltage");
            s.voltage = std::stod(field);
            if (!std::getline(ss, field, ',')) throw std::invalid_argument("missing amplitude_db");
            s.amplitude_db = std::stod(field);
            if (!std::getline(ss, field, ',')) throw std::invalid_argument("missing phase_deg");
            s.phase_deg = std::stod(field);
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": malformed cell table row (" + e.what() + ")");
        }
        samples.push_back(s);
    }
    return from_samples(std::move(samples), g0);
}

std::size_t CellResponseModel::segment_index(double voltage) const {
    if (voltage < min_voltage() || voltage > max_voltage()) {
        throw std::out_of_range("voltage " + std::to_string(voltage) +
                                " outside table range [" + std::to_string(min_voltage()) +
                                ", " + std::to_string(max_voltage()) + "]");
    }
    // upper_bound finds the first node strictly above v; the segment starts
    // one before it. The max voltage falls into the last segment.
    auto it = std::upper_bound(samples_.begin(), samples_.end(), voltage,
                               [](double v, const CellSample& s) { return v < s.voltage; });
    std::size_t i = static_cast<std::size_t>(it - samples_.begin());
    if (i == 0) i = 1;
    if (i == samples_.size()) i = samples_.size() - 1;
    return i - 1;
}

double CellResponseModel::amplitude_db_at(double voltage) const {
    const std::size_t i = segment_index(voltage);
    const double t = (voltage - samples_[i].voltage) /
                     (samples_[i + 1].voltage - samples_[i].voltage);
    return std::lerp(samples_[i].amplitude_db, samples_[i + 1].amplitude_db, t);
}

double CellResponseModel::phase_deg_at(double voltage) const {
    const std::size_t i = segment_index(voltage);
    const double t = (voltage - samples_[i].voltage) /
                     (samples_[i + 1].voltage - samples_[i].voltage);
    return std::lerp(unwrapped_[i], unwrapped_[i + 1], t);
}

double CellResponseModel::wrapped_phase_deg_at(double voltage) const {
    return wrap_deg(phase_deg_at(voltage));
}

std::complex<double> CellResponseModel::reflection(double voltage) const {
    const double magnitude = g0_ * std::pow(10.0, amplitude_db_at(voltage) / 20.0);
    return std::polar(magnitude, deg_to_rad(phase_deg_at(voltage)));
}

VoltageSolution CellResponseModel::voltage_for_phase(double target_phase_deg) const {
    const double target = wrap_deg(target_phase_deg);

    // First pass: look for an exact hit. Each segment covers a contiguous
    // interval of unwrapped phase; any 360-degree translate of the target
    // falling inside it is invertible with zero circular error. Segments are
    // scanned in voltage order, so the lowest matching voltage wins.
    for (std::size_t i = 0; i + 1 < samples_.size(); ++i) {
        const double p0 = unwrapped_[i];
        const double p1 = unwrapped_[i + 1];
        const double lo = std::min(p0, p1);
        const double hi = std::max(p0, p1);
        const double k_min = std::ceil((lo - target) / 360.0);
        const double k_max = std::floor((hi - target) / 360.0);
        if (k_min > k_max) continue;
        const double tt = target + 360.0 * k_min;
        double voltage;
        if (p1 == p0) {
            voltage = samples_[i].voltage;
        } else {
            const double t = (tt - p0) / (p1 - p0);
            voltage = std::lerp(samples_[i].voltage, samples_[i + 1].voltage, t);
        }
        VoltageSolution sol;
        sol.voltage = voltage;
        sol.achieved_phase_deg = wrapped_phase_deg_at(voltage);
        sol.achieved_amplitude_db = amplitude_db_at(voltage);
        sol.circular_error_deg = circular_distance_deg(sol.achieved_phase_deg, target);
        return sol;
    }

    // No exact hit: the target lies in a coverage gap, whose boundary is
    // always a table node. Return the node with the smallest circular error.
    std::size_t best = 0;
    double best_err = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const double err = circular_distance_deg(wrap_deg(unwrapped_[i]), target);
        if (err < best_err) {
            best_err = err;
            best = i;
        }
    }
    VoltageSolution sol;
    sol.voltage = samples_[best].voltage;
    sol.achieved_phase_deg = wrap_deg(unwrapped_[best]);
    sol.achieved_amplitude_db = samples_[best].amplitude_db;
    sol.circular_error_deg = best_err;
    return sol;
}

PhaseGap CellResponseModel::achievable_phase_gap() const {
    struct Arc {
        double start;  // in [0, 360)
        double end;    // start <= end <= start + 360
    };

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i + 1 < samples_.size(); ++i) {
        const double lo = std::min(unwrapped_[i], unwrapped_[i + 1]);
        const double hi = std::max(unwrapped_[i], unwrapped_[i + 1]);
        const double len = hi - lo;
        if (len >= 360.0) {
            return PhaseGap{0.0, 0.0, 0.0};
        }
        const double start = wrap_deg_positive(lo);
        if (start + len > 360.0) {
            // Split arcs crossing the 0/360 seam.
            arcs.push_back({start, 360.0});
            arcs.push_back({0.0, start + len - 360.0});
        } else {
            arcs.push_back({start, start + len});
        }
    }

    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
    std::vector<Arc> merged;
    for (const Arc& a : arcs) {
        if (!merged.empty() && a.start <= merged.back().end) {
            merged.back().end = std::max(merged.back().end, a.end);
        } else {
            merged.push_back(a);
        }
    }

    // Uncovered arcs: between consecutive covered arcs plus the seam-crossing
    // stretch from the last arc back around to the first.
    double best_width = 0.0;
    double best_start = 0.0;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        const double w = merged[i + 1].start - merged[i].end;
        if (w > best_width) {
            best_width = w;
            best_start = merged[i].end;
        }
    }
    const double wrap_w = merged.front().start + 360.0 - merged.back().end;
    if (wrap_w > best_width) {
        best_width = wrap_w;
        best_start = merged.back().end;
    }
    if (best_width <= 0.0) {
        return PhaseGap{0.0, 0.0, 0.0};
    }
    PhaseGap gap;
    gap.lo_deg = wrap_deg(best_start);
    gap.hi_deg = wrap_deg(best_start + best_width);
    gap.width_deg = best_width;
    return gap;
}

} // namespace risamb
