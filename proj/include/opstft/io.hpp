#pragma once

// File formats:
//   matrix  JSON  {"n": N, "data": [[ [re, im], ... ] x N rows ]}
//   field   JSON  {"n": N, "cells": {"k,l": matrix document, ...}}
//   grid    CSV   N rows x N columns of reals (row k, column l)
//   signal  CSV   N rows "re,im"
// Complex numbers are always [re, im] pairs; values survive a write /
// read cycle bit-exactly.  Readers throw std::runtime_error with the
// offending path in the message; writers reject non-finite entries.

#include "opstft/operator_field.hpp"
#include "opstft/types.hpp"

#include <cstdint>
#include <string>

namespace opstft {

void write_matrix_json(const std::string& path, const OperatorMatrix& m);
OperatorMatrix read_matrix_json(const std::string& path);

void write_field_json(const std::string& path, const OperatorField& field);
OperatorField read_field_json(const std::string& path);

void write_real_grid_csv(const std::string& path, const RealGrid& grid);
RealGrid read_real_grid_csv(const std::string& path);

void write_signal_csv(const std::string& path, const Signal& signal);
Signal read_signal_csv(const std::string& path);

uint64_t fnv1a64(const std::string& bytes);
// "fnv1a64:<16 hex digits>" over the file's bytes
std::string file_digest(const std::string& path);

}  // namespace opstft
