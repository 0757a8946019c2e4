#include "solow/params.hpp"

#include "solow/errors.hpp"

#include <cmath>
#include <sstream>

namespace solow {

void ModelParams::validate() const {
    std::ostringstream why;
    if (!(std::isfinite(p) && p > 0.0)) why << " p must be > 0;";
    if (!(std::isfinite(q) && q > 0.0)) why << " q must be > 0;";
    if (!(mu > 0.0 && mu < 1.0)) why << " mu must lie in (0, 1);";
    if (!(alpha > 0.0 && alpha <= 1.0)) why << " alpha must lie in (0, 1];";
    if (!(std::isfinite(k0) && k0 > 0.0)) why << " k0 must be > 0;";
    const std::string msg = why.str();
    if (!msg.empty()) {
        throw InvalidArgument("invalid model parameters:" + msg.substr(0, msg.size() - 1));
    }
}

double growth_rate(const ModelParams& params, double k) {
    return params.p * std::pow(k, params.mu) - params.q * k;
}

double steady_state(const ModelParams& params) {
    return std::pow(params.p / params.q, 1.0 / (1.0 - params.mu));
}

}  // namespace solow
