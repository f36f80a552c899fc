#include "opstft/types.hpp"

#include <cmath>
#include <stdexcept>

namespace opstft {

Complex root_of_unity(long long num, int n) {
    long long r = num % n;
    if (r < 0) r += n;
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
}

void require_square(const OperatorMatrix& m, const char* what) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_dim(Eigen::Index actual, Eigen::Index expected, const char* what) {
    if (actual != expected) {
        throw std::invalid_argument(std::string(what) + ": expected dimension N=" +
                                    std::to_string(expected) + ", got " + std::to_string(actual));
    }
}

Lattice::Lattice(int alpha_, int beta_, int n_) : alpha(alpha_), beta(beta_), n(n_) {
    if (n < 2) throw std::invalid_argument("Lattice: N must be at least 2");
    if (alpha < 1 || beta < 1 || n % alpha != 0 || n % beta != 0) {
        throw std::invalid_argument("Lattice: steps (" + std::to_string(alpha) + "," +
                                    std::to_string(beta) + ") must divide N=" + std::to_string(n));
    }
}

}  // namespace opstft
