#include "magphon/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace magphon {

std::vector<double> kramers_kronig_real(const FrequencyGrid& grid,
                                        const std::vector<double>& im) {
    const std::size_t n = grid.size();
    if (im.size() != n) throw std::invalid_argument("kramers_kronig_real: size mismatch");
    const double h = grid.omega_step;
    std::vector<double> re(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double yi = im[i];
        // trapezoid of the regular part f(j) = (im_j - im_i)/(w_j - w_i),
        // with the diagonal replaced by the derivative
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double f;
            if (j == i) {
                if (i == 0)
                    f = (im[1] - im[0]) / h;
                else if (i + 1 == n)
                    f = (im[n - 1] - im[n - 2]) / h;
                else
                    f = (im[i + 1] - im[i - 1]) / (2.0 * h);
            } else {
                f = (im[j] - yi) / (h * (static_cast<double>(j) - static_cast<double>(i)));
            }
            s += (j == 0 || j + 1 == n) ? 0.5 * f : f;
        }
        s *= h;
        // analytic PV of the constant part over [w_0, w_{n-1}]
        if (i > 0 && i + 1 < n)
            s += yi * std::log(static_cast<double>(n - 1 - i) / static_cast<double>(i));
        re[i] = s / std::numbers::pi;
    }
    return re;
}

} // namespace magphon
