// python surface: thin adapters over the core, numpy in and out.
// Operator fields cross the boundary as (N, N, N, N) complex arrays
// indexed [k, l, :, :].  Weights are plain (N, N) real grids; None
// means the flat weight.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opstft/coorbit.hpp"
#include "opstft/gframe.hpp"
#include "opstft/hs_algebra.hpp"
#include "opstft/norms.hpp"
#include "opstft/op_stft.hpp"
#include "opstft/phase_space.hpp"
#include "opstft/weights.hpp"

#include <optional>

namespace py = pybind11;
using namespace opstft;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::array_t<Complex> field_to_array(const OperatorField& psi) {
    const int n = psi.dim();
    py::array_t<Complex> out({n, n, n, n});
    auto w = out.mutable_unchecked<4>();
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const OperatorMatrix& cell = psi.at(k, l);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) w(k, l, i, j) = cell(i, j);
        }
    return out;
}

OperatorField field_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 4) throw std::invalid_argument("operator field: expected a 4-d array");
    const auto n = arr.shape(0);
    for (int d = 1; d < 4; ++d)
        if (arr.shape(d) != n)
            throw std::invalid_argument("operator field: expected shape (N, N, N, N)");
    OperatorField psi(static_cast<int>(n));
    auto r = arr.unchecked<4>();
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            OperatorMatrix& cell = psi.at(k, l);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) cell(i, j) = r(k, l, i, j);
        }
    return psi;
}

Weight weight_or_flat(const std::optional<RealGrid>& grid, int n) {
    return grid ? Weight(*grid) : Weight::ones(n);
}

PhasePoint as_point(std::pair<int, int> z) { return PhasePoint{z.first, z.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "operator-valued short-time Fourier analysis on Z_N x Z_N";

    // ── phase space ──────────────────────────────────────────────────
    m.def(
        "tf_shift_matrix",
        [](std::pair<int, int> z, int n) { return tf_shift_matrix(as_point(z), n); },
        py::arg("z"), py::arg("n"),
        "matrix of the time-frequency shift pi(z) = M_l T_k on C^n");
    m.def(
        "cocycle",
        [](std::pair<int, int> z, std::pair<int, int> zp, int n) {
            return cocycle(as_point(z), as_point(zp), n);
        },
        py::arg("z"), py::arg("zp"), py::arg("n"),
        "phase relating pi(z)* pi(zp)* to pi(z - zp)*");
    m.def("fstft", &fstft, py::arg("g"), py::arg("f"),
          "scalar short-time Fourier transform of f against window g, (N, N) grid");
    m.def("fstft_adjoint", &fstft_adjoint, py::arg("g"), py::arg("field"),
          "adjoint of fstft: synthesize a signal from an (N, N) coefficient grid");
    m.def("hs_inner", &hs_inner, py::arg("s"), py::arg("t"),
          "Hilbert-Schmidt inner product, linear in the first argument");
    m.def("schatten_norm", &schatten_norm, py::arg("t"), py::arg("p"),
          "Schatten p-norm; p may be float('inf')");

    // ── the operator transform ───────────────────────────────────────
    m.def(
        "op_stft",
        [](const OperatorMatrix& s, const OperatorMatrix& t) {
            return field_to_array(op_stft(s, t));
        },
        py::arg("window"), py::arg("target"),
        "operator short-time Fourier transform, (N, N, N, N) field");
    m.def(
        "op_stft_adjoint",
        [](const OperatorMatrix& s, const ComplexArray& psi) {
            return op_stft_adjoint(s, field_from_array(psi));
        },
        py::arg("window"), py::arg("field"), "adjoint transform: field back to one operator");
    m.def(
        "moyal_orthogonality",
        [](const OperatorMatrix& s, const OperatorMatrix& t, const OperatorMatrix& q,
           const OperatorMatrix& r) {
            MoyalPair pair = moyal_orthogonality(s, t, q, r);
            return py::make_tuple(pair.lhs, pair.rhs);
        },
        py::arg("s"), py::arg("t"), py::arg("q"), py::arg("r"),
        "(transform-side inner product, operator-side product) pair");
    m.def(
        "spectrogram",
        [](const OperatorMatrix& s, const OperatorMatrix& t) { return spectrogram(s, t); },
        py::arg("window"), py::arg("target"), "(N, N) grid of cell Hilbert-Schmidt norms");
    m.def(
        "kernel_project",
        [](const OperatorMatrix& s, const ComplexArray& psi) {
            return field_to_array(kernel_project(s, field_from_array(psi)));
        },
        py::arg("window"), py::arg("field"),
        "project a field onto the reproducing image of the window");
    m.def(
        "membership_check",
        [](const ComplexArray& psi, const OperatorMatrix& s, double tol_scale) {
            MembershipResult r = membership_check(field_from_array(psi), s, tol_scale);
            return py::make_tuple(r.is_member, r.residual);
        },
        py::arg("field"), py::arg("window"), py::arg("tol_scale") = 1e-9,
        "(is_member, relative residual) against the reproducing image");
    m.def(
        "twisted_conv",
        [](const ComplexArray& f, const ComplexArray& h) {
            return field_to_array(twisted_conv(field_from_array(f), field_from_array(h)));
        },
        py::arg("f"), py::arg("h"), "twisted convolution of two operator fields");

    // ── weights and norms ────────────────────────────────────────────
    m.def(
        "polynomial_weight",
        [](double s, int n) { return polynomial_weight(s, n).grid(); }, py::arg("s"),
        py::arg("n"), "(1 + wrap-around distance)^s grid, submultiplicative");
    m.def(
        "mixed_norm",
        [](const ComplexArray& psi, double p, double q, const std::optional<RealGrid>& m) {
            OperatorField field = field_from_array(psi);
            return mixed_norm(field, p, q, weight_or_flat(m, field.dim()));
        },
        py::arg("field"), py::arg("p"), py::arg("q"), py::arg("m") = py::none(),
        "weighted mixed (p, q) norm of an operator field");

    // ── coorbit machinery ────────────────────────────────────────────
    m.def("gaussian_window", &gaussian_window, py::arg("n"),
          "periodized unit gaussian signal on Z_n");
    m.def("default_window", &default_window, py::arg("n"),
          "rank-one window built from the gaussian signal");
    m.def(
        "admissibility",
        [](const OperatorMatrix& s, const std::optional<RealGrid>& v) {
            return admissibility(s, weight_or_flat(v, static_cast<int>(s.rows())));
        },
        py::arg("window"), py::arg("v") = py::none(),
        "weighted self-transform norm of a window");
    m.def(
        "coorbit_norm",
        [](const OperatorMatrix& t, const OperatorMatrix& window, double p, double q,
           const std::optional<RealGrid>& m, const std::optional<RealGrid>& v) {
            const int n = static_cast<int>(window.rows());
            return coorbit_norm(
                t, make_coorbit_params(window, p, q, weight_or_flat(m, n), weight_or_flat(v, n)));
        },
        py::arg("target"), py::arg("window"), py::arg("p"), py::arg("q"),
        py::arg("m") = py::none(), py::arg("v") = py::none(),
        "mixed-norm size of the transform of target against window");
    m.def(
        "toeplitz",
        [](const OperatorMatrix& s, const ScalarField& f, const OperatorMatrix& t) {
            return toeplitz(s, f, t);
        },
        py::arg("window"), py::arg("mask"), py::arg("target"),
        "transform, multiply by a phase-space mask, transform back");

    // ── lattices and frames ──────────────────────────────────────────
    m.def(
        "frame_bounds",
        [](const OperatorMatrix& s, int alpha, int beta) {
            FrameReport r = frame_bounds(s, Lattice(alpha, beta, static_cast<int>(s.rows())));
            py::dict out;
            out["lower"] = r.lower;
            out["upper"] = r.upper;
            out["is_frame"] = r.is_frame;
            out["condition"] = r.condition;
            return out;
        },
        py::arg("window"), py::arg("alpha"), py::arg("beta"),
        "extreme frame constants of the lattice translates of a window");
    m.def(
        "canonical_dual_apply",
        [](const OperatorMatrix& s, int alpha, int beta, const OperatorMatrix& t) {
            return canonical_dual_apply(s, Lattice(alpha, beta, static_cast<int>(s.rows())), t);
        },
        py::arg("window"), py::arg("alpha"), py::arg("beta"), py::arg("target"),
        "reconstruct target from canonical-dual frame coefficients");
    m.def(
        "localization_op",
        [](const Signal& phi, const ScalarField& h) { return localization_op(phi, h); },
        py::arg("phi"), py::arg("symbol"),
        "multiply scalar transform coefficients by a symbol, then synthesize");
}
