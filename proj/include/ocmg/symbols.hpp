/// @file symbols.hpp
/// @brief Fourier symbols of the discrete operators: scalar stencil symbols,
/// the 3x3 saddle-operator symbol, and the 3x3 Braess-Sarazin preconditioner
/// symbols (stiffness and diag variants).

#ifndef OCMG_SYMBOLS_HPP
#define OCMG_SYMBOLS_HPP

#include <stdexcept>
#include <utility>

#include "ocmg/eig.hpp"

namespace ocmg {

/// Raised when a symbol that involves 1/A_fd is requested at theta = (0,0)
/// (mod 2pi), where the five-point symbol vanishes.
struct singular_frequency : std::runtime_error {
    singular_frequency() : std::runtime_error("singular frequency: theta = (0,0) mod 2pi") {}
};

struct Frequency {
    double theta1 = 0.0;
    double theta2 = 0.0;

    /// Reduces both components to the canonical range (-pi/2, 3pi/2].
    Frequency canonical() const;
    /// Low frequencies are [-pi/2, pi/2)^2 within the canonical square.
    bool is_low() const;
};

/// Scalar symbols at one frequency: a = mass, b = stiffness, a_fd =
/// five-point Laplacian, a_D = diag(M) = 4h^2/9. All real for these
/// symmetric stencils.
struct ScalarSymbols {
    double a = 0.0;
    double b = 0.0;
    double a_fd = 0.0;
    double a_D = 0.0;
    bool singular = false;  // theta = (0,0) mod 2pi: a_fd vanishes

    /// 1/a_fd; throws singular_frequency where a_fd vanishes.
    double a_hat() const {
        if (singular) throw singular_frequency{};
        return 1.0 / a_fd;
    }
};

/// 1D symbols (K1, M1) = ((2/h)(1-cos t), (h/3)(2+cos t)).
std::pair<double, double> symbols_1d(double theta, double h);

ScalarSymbols symbols_2d(Frequency theta, double h);

/// [[2 beta a, 0, -a], [0, a, b], [-a, b, 0]].
ComplexMatrix symbol_saddle(Frequency theta, double beta, double h);

/// Stiffness-variant preconditioner symbol
/// [[alpha 2 beta a_hat, 0, -a], [0, alpha a_hat, b], [-a, b, 0]].
ComplexMatrix symbol_Kf(Frequency theta, double beta, double h, double alpha);

/// Diag-variant preconditioner symbol: a_hat replaced by a_D.
ComplexMatrix symbol_KD(Frequency theta, double beta, double h, double alpha);

}  // namespace ocmg

#endif  // OCMG_SYMBOLS_HPP
