#pragma once

#include "opstft/types.hpp"

#include <functional>
#include <vector>

namespace opstft {

// Dense grid over Z_N x Z_N of N x N operator cells (Psi(z) per z).
// Dense storage is the desk-scale representation (N <= 16); operations
// that only consume cells also accept a FieldEvaluator so larger fields
// can be streamed without materializing.
class OperatorField {
public:
    OperatorField() = default;
    explicit OperatorField(int n)
        : n_(n), cells_(static_cast<size_t>(n) * n, OperatorMatrix::Zero(n, n)) {}

    int dim() const { return n_; }

    OperatorMatrix& at(int k, int l) { return cells_[index(k, l)]; }
    const OperatorMatrix& at(int k, int l) const { return cells_[index(k, l)]; }
    OperatorMatrix& at(PhasePoint z) { return at(z.k, z.l); }
    const OperatorMatrix& at(PhasePoint z) const { return at(z.k, z.l); }

    // z -> ||Psi(z)||_HS.
    RealGrid hs_norm_field() const;
    double max_cell_norm() const;

    OperatorField& operator+=(const OperatorField& other);
    OperatorField& operator-=(const OperatorField& other);
    OperatorField& operator*=(Complex scale);

    friend OperatorField operator+(OperatorField a, const OperatorField& b) { return a += b; }
    friend OperatorField operator-(OperatorField a, const OperatorField& b) { return a -= b; }
    friend OperatorField operator*(Complex scale, OperatorField a) { return a *= scale; }

private:
    size_t index(int k, int l) const { return static_cast<size_t>(mod_n(k, n_)) * n_ + mod_n(l, n_); }

    int n_ = 0;
    std::vector<OperatorMatrix> cells_;
};

// Streaming source of cells for fields that are never materialized.
using FieldEvaluator = std::function<OperatorMatrix(PhasePoint)>;

// Adapter: evaluate a dense field cell by cell.
FieldEvaluator as_evaluator(const OperatorField& field);

}  // namespace opstft
