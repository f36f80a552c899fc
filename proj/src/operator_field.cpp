#include "opstft/operator_field.hpp"

#include <stdexcept>

namespace opstft {

RealGrid OperatorField::hs_norm_field() const {
    RealGrid grid(n_, n_);
    for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) grid(k, l) = at(k, l).norm();
    return grid;
}

double OperatorField::max_cell_norm() const {
    double best = 0.0;
    for (const auto& cell : cells_) best = std::max(best, cell.norm());
    return best;
}

OperatorField& OperatorField::operator+=(const OperatorField& other) {
    require_dim(other.dim(), n_, "OperatorField::operator+=");
    for (size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
    return *this;
}

OperatorField& OperatorField::operator-=(const OperatorField& other) {
    require_dim(other.dim(), n_, "OperatorField::operator-=");
    for (size_t i = 0; i < cells_.size(); ++i) cells_[i] -= other.cells_[i];
    return *this;
}

OperatorField& OperatorField::operator*=(Complex scale) {
    for (auto& cell : cells_) cell *= scale;
    return *this;
}

FieldEvaluator as_evaluator(const OperatorField& field) {
    return [&field](PhasePoint z) { return field.at(z); };
}

}  // namespace opstft
