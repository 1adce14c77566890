#include "rlv/atmosphere.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rlv/constants.hpp"

namespace rlv {

namespace {

constexpr double kEarthRadius = 6356766.0;  // m, USSA76 effective radius
constexpr double kGasConstant = 287.053;    // J/(kg K), dry air

struct Layer {
    double h;      // geopotential base altitude, m
    double lapse;  // K/m
};

constexpr std::array kLayers{
    Layer{0.0, -0.0065},   Layer{11000.0, 0.0},    Layer{20000.0, 0.001},
    Layer{32000.0, 0.0028}, Layer{47000.0, 0.0},   Layer{51000.0, -0.0028},
    Layer{71000.0, -0.002}, Layer{84852.0, 0.0},
};

// Exact layer formulas, used only to fill the node table.
void ussa76(double z, double& p, double& rho) {
    const double h = kEarthRadius * z / (kEarthRadius + z);
    double t = 288.15;
    p = kSeaLevelPressure;
    for (std::size_t i = 0; i < kLayers.size(); ++i) {
        const double top = i + 1 < kLayers.size() ? kLayers[i + 1].h : 1e9;
        const double dh = std::min(h, top) - kLayers[i].h;
        const double lapse = kLayers[i].lapse;
        if (lapse == 0.0) {
            p *= std::exp(-kG0 * dh / (kGasConstant * t));
        } else {
            const double t1 = t + lapse * dh;
            p *= std::pow(t / t1, kG0 / (kGasConstant * lapse));
            t = t1;
        }
        if (h <= top) break;
    }
    rho = p / (kGasConstant * t);
}

}  // namespace

StandardAtmosphere::StandardAtmosphere() {
    const int n = static_cast<int>(kTopAltitude / step_);
    for (int i = 0; i <= n; ++i) {
        double p = 0.0;
        double rho = 0.0;
        ussa76(i * step_, p, rho);
        log_p_.push_back(std::log(p));
        log_rho_.push_back(std::log(rho));
    }
}

double StandardAtmosphere::interpolate(const std::vector<double>& v, double altitude) const {
    const double x = altitude / step_;
    const auto last = static_cast<double>(v.size() - 1);
    const double i = std::clamp(std::floor(x), 0.0, last - 1.0);
    const auto k = static_cast<std::size_t>(i);
    const double w = x - i;
    return std::exp((1.0 - w) * v[k] + w * v[k + 1]);
}

double StandardAtmosphere::pressure(double altitude) const { return interpolate(log_p_, altitude); }
double StandardAtmosphere::density(double altitude) const { return interpolate(log_rho_, altitude); }

const StandardAtmosphere& standard_atmosphere() {
    static const StandardAtmosphere atm;
    return atm;
}

}  // namespace rlv
