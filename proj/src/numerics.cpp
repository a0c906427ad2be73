#include "credal/numerics.hpp"

#include <boost/math/special_functions/beta.hpp>

namespace credal::num {

double ibeta_reg(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return boost::math::ibeta(a, b, x);
}

}  // namespace credal::num
