#pragma once

#include <vector>

namespace rlv {

class AtmosphereModel {
public:
    virtual ~AtmosphereModel() = default;
    virtual double pressure(double altitude) const = 0;  // Pa
    virtual double density(double altitude) const = 0;   // kg/m^3
};

/// 1976 US Standard Atmosphere, pressure and density interpolated
/// exponentially between 1 km nodes up to 86 km. Above the last node both
/// decay with the scale height of the top interval; below 0 m the first
/// interval is extended.
class StandardAtmosphere final : public AtmosphereModel {
public:
    StandardAtmosphere();
    double pressure(double altitude) const override;
    double density(double altitude) const override;

    static constexpr double kTopAltitude = 86000.0;

private:
    double interpolate(const std::vector<double>& log_values, double altitude) const;

    double step_ = 1000.0;
    std::vector<double> log_p_;
    std::vector<double> log_rho_;
};

/// Same pressure and density at every altitude. ConstantAtmosphere(0, 0)
/// is vacuum.
class ConstantAtmosphere final : public AtmosphereModel {
public:
    ConstantAtmosphere(double pressure, double density) : p_(pressure), rho_(density) {}
    double pressure(double) const override { return p_; }
    double density(double) const override { return rho_; }

private:
    double p_;
    double rho_;
};

const StandardAtmosphere& standard_atmosphere();

}  // namespace rlv
