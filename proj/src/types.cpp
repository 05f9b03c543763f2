#include "spectral/types.hpp"

namespace spectral {

double duration_s(const TimeSeries& ts) {
    if (ts.sample_rate_hz <= 0.0)
        throw ParamError("duration_s: sample rate must be positive");
    return static_cast<double>(ts.samples.size()) / ts.sample_rate_hz;
}

double mean_power(const TimeSeries& ts) {
    if (ts.samples.empty())
        throw ParamError("mean_power: empty signal");
    double acc = 0.0;
    for (double x : ts.samples) acc += x * x;
    return acc / static_cast<double>(ts.samples.size());
}

}  // namespace spectral
