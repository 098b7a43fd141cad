#pragma once

#include <vector>

namespace ecosched {

/// Log-law power<->compute model of one resource (a CPU socket or one GPU).
///
/// The usable compute rate at electrical power P is
///     rate(P) = max(coeff_a + coeff_b * ln(P), 0)
/// so the resource delivers nothing below its idle power exp(-coeff_a/coeff_b)
/// and the marginal compute per watt shrinks as P grows.
struct ResourcePowerModel {
    double coeff_a = 0.0; ///< dimensionless offset (negative in practice)
    double coeff_b = 1.0; ///< dimensionless scale, > 0
    double p_max = 0.0;   ///< watts at the highest operating point
    double p_idle = 0.0;  ///< watts at zero compute, cached exp(-a/b)

    static ResourcePowerModel make(double coeff_a, double coeff_b, double p_max);

    /// Dual-socket CPU tray of one node: a=-602, b=134, 300 W max.
    static ResourcePowerModel cpu_default();
    /// One GPU: a=-27.1, b=7.3, 300 W max.
    static ResourcePowerModel gpu_default();

    /// Rate delivered at full operating power.
    double rate_at_p_max() const;

    void validate() const; // throws ConfigError
};

/// Compute rate (units/s) drawn from `power` watts. Throws std::domain_error
/// for power <= 0. Clamps to zero at or below p_idle.
double compute_rate(const ResourcePowerModel& model, double power_w);

/// Inverse of compute_rate: watts needed to deliver `rate`. rate == 0 maps to
/// p_idle. Throws InfeasibleRateError above rate_at_p_max().
double power_for_rate(const ResourcePowerModel& model, double rate);

/// Discrete DVFS operating points as fractions of p_max, ascending, ending at 1.0.
struct DvfsLadder {
    std::vector<double> steps;

    static DvfsLadder default_ladder(); // 0.50, 0.55, ..., 1.00

    double min_fraction() const { return steps.front(); }
    int max_index() const { return static_cast<int>(steps.size()) - 1; }
    double fraction(int index) const { return steps[static_cast<size_t>(index)]; }

    void validate() const; // throws ConfigError
};

/// One node-wide DVFS setting.
struct DvfsState {
    double power_fraction = 1.0;
};

/// Rate available at a DVFS operating point: compute_rate at fraction * p_max.
double rate_at_dvfs(const ResourcePowerModel& model, const DvfsState& state);

/// Power drawn by a resource that delivers `rate` while capped at the
/// operating point `ceiling_power_w` (= fraction * p_max). Saturated resources
/// draw exactly the operating-point power; this keeps cap arithmetic exact at
/// ladder points instead of round-tripping through exp(ln(.)).
double resource_power(const ResourcePowerModel& model, double rate, double ceiling_power_w);

} // namespace ecosched
