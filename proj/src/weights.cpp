#include "opstft/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace opstft {

namespace {
// relative slack absorbing pow() rounding in exhaustive scans
constexpr double kScanSlack = 1e-12;
}  // namespace

Weight::Weight(RealGrid grid) : grid_(std::move(grid)) {
    if (grid_.rows() != grid_.cols() || grid_.rows() == 0)
        throw std::invalid_argument("Weight: grid must be square and nonempty");
    if (!(grid_ > 0.0).all())
        throw std::invalid_argument("Weight: values must be strictly positive");
}

Weight Weight::ones(int n) { return Weight(RealGrid::Ones(n, n)); }

Weight Weight::reciprocal() const { return Weight(grid_.inverse()); }

int wrap_distance(PhasePoint z, int n) {
    int k = mod_n(z.k, n), l = mod_n(z.l, n);
    return std::min(k, n - k) + std::min(l, n - l);
}

Weight polynomial_weight(double s, int n) {
    if (s < 0.0) throw std::invalid_argument("polynomial_weight: order must be >= 0");
    RealGrid grid(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            grid(k, l) = std::pow(1.0 + wrap_distance({k, l}, n), s);
    return Weight(std::move(grid));
}

SubmultReport check_submultiplicative(const Weight& v) {
    const int n = v.dim();
    for (int a = 0; a < n * n; ++a)
        for (int b = 0; b < n * n; ++b) {
            PhasePoint z1{a / n, a % n}, z2{b / n, b % n};
            double lhs = v.at(pp_add(z1, z2, n));
            double rhs = v.at(z1) * v.at(z2);
            if (lhs > rhs * (1.0 + kScanSlack)) return {false, z1, z2};
        }
    return {};
}

ModerateCertificate check_moderate(const Weight& m, const Weight& v) {
    const int n = m.dim();
    if (v.dim() != n) throw std::invalid_argument("check_moderate: weight dimension mismatch");
    ModerateCertificate cert;
    for (int a = 0; a < n * n; ++a)
        for (int b = 0; b < n * n; ++b) {
            PhasePoint z1{a / n, a % n}, z2{b / n, b % n};
            double lhs = m.at(pp_add(z1, z2, n));
            double rhs = v.at(z1) * m.at(z2);
            if (lhs > rhs * (1.0 + kScanSlack)) cert.violations.push_back({z1, z2});
        }
    cert.moderate = cert.violations.empty();
    cert.constant = 1.0;
    for (int a = 0; a < n * n; ++a) {
        PhasePoint z{a / n, a % n};
        double ratio = std::max(m.at(z) / v.at(z), 1.0 / (m.at(z) * v.at(z)));
        cert.constant = std::max(cert.constant, ratio);
    }
    return cert;
}

}  // namespace opstft
