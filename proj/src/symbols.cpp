#include "ocmg/symbols.hpp"

#include <cmath>

namespace ocmg {

namespace {
constexpr double kPi = 3.14159265358979323846;

double reduce(double t) {
    // Into (-pi/2, 3pi/2] by shifting whole periods.
    while (t > 1.5 * kPi) t -= 2.0 * kPi;
    while (t <= -0.5 * kPi) t += 2.0 * kPi;
    return t;
}
}  // namespace

Frequency Frequency::canonical() const { return {reduce(theta1), reduce(theta2)}; }

bool Frequency::is_low() const {
    const Frequency c = canonical();
    return c.theta1 >= -0.5 * kPi && c.theta1 < 0.5 * kPi &&
           c.theta2 >= -0.5 * kPi && c.theta2 < 0.5 * kPi;
}

std::pair<double, double> symbols_1d(double theta, double h) {
    if (h <= 0.0) throw std::invalid_argument("symbols_1d: h must be positive");
    const double c = std::cos(theta);
    return {(2.0 / h) * (1.0 - c), (h / 3.0) * (2.0 + c)};
}

ScalarSymbols symbols_2d(Frequency theta, double h) {
    if (h <= 0.0) throw std::invalid_argument("symbols_2d: h must be positive");
    const double c1 = std::cos(theta.theta1);
    const double c2 = std::cos(theta.theta2);
    ScalarSymbols s;
    s.a = (h * h / 9.0) * (4.0 + 2.0 * c1 + 2.0 * c2 + c1 * c2);
    s.b = (2.0 / 3.0) * (4.0 - c1 - c2 - 2.0 * c1 * c2);
    const double t = 4.0 - 2.0 * c1 - 2.0 * c2;  // scale-free five-point symbol
    s.a_fd = t / (h * h);
    s.a_D = 4.0 * h * h / 9.0;
    s.singular = t < 1e-14;
    return s;
}

ComplexMatrix symbol_saddle(Frequency theta, double beta, double h) {
    const ScalarSymbols s = symbols_2d(theta, h);
    ComplexMatrix L(3);
    L(0, 0) = 2.0 * beta * s.a;
    L(0, 2) = -s.a;
    L(1, 1) = s.a;
    L(1, 2) = s.b;
    L(2, 0) = -s.a;
    L(2, 1) = s.b;
    return L;
}

namespace {
ComplexMatrix preconditioner_symbol(const ScalarSymbols& s, double beta, double alpha,
                                    double c_sym) {
    ComplexMatrix K(3);
    K(0, 0) = alpha * 2.0 * beta * c_sym;
    K(0, 2) = -s.a;
    K(1, 1) = alpha * c_sym;
    K(1, 2) = s.b;
    K(2, 0) = -s.a;
    K(2, 1) = s.b;
    return K;
}
}  // namespace

ComplexMatrix symbol_Kf(Frequency theta, double beta, double h, double alpha) {
    const ScalarSymbols s = symbols_2d(theta, h);
    return preconditioner_symbol(s, beta, alpha, s.a_hat());
}

ComplexMatrix symbol_KD(Frequency theta, double beta, double h, double alpha) {
    const ScalarSymbols s = symbols_2d(theta, h);
    return preconditioner_symbol(s, beta, alpha, s.a_D);
}

}  // namespace ocmg
