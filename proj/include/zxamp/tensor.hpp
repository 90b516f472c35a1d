// Copyright 2026 The zxamp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <vector>

#include "zxamp/diagram.hpp"

namespace zxamp {

// Dense evaluation of the linear map a diagram denotes. Index layout: flat,
// with boundary order outputs-then-inputs and the first boundary as the most
// significant bit, so a closed diagram yields a single entry.
//
// This is the semantic ground truth for the rewrite and decomposition tests:
// plain sequential contraction, deliberately free of cleverness.
struct DenseTensor {
    size_t num_outputs = 0;
    size_t num_inputs = 0;
    std::vector<std::complex<double>> data;

    size_t rank() const { return num_outputs + num_inputs; }
    const std::complex<double>& at(size_t flat) const { return data[flat]; }
};

// guard: at most 16 open wires; intermediate contraction tables capped
DenseTensor to_tensor(const Diagram& d);

// max |a - b| over entries; tensors must have identical shape
double tensor_distance(const DenseTensor& a, const DenseTensor& b);

} // namespace zxamp
