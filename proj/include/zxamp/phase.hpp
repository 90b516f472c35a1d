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

#include <cstdint>

namespace zxamp {

// Spider phase as an integer multiple of pi/4, stored mod 8.
class Phase {
  public:
    constexpr Phase() = default;
    constexpr explicit Phase(int eighths) : v_(static_cast<uint8_t>(((eighths % 8) + 8) % 8)) {}

    constexpr int eighths() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool is_clifford() const { return (v_ & 1) == 0; }
    constexpr bool is_proper_clifford() const { return v_ == 0 || v_ == 4; } // 0 or pi
    constexpr bool is_t_like() const { return (v_ & 1) == 1; }
    constexpr bool is_half_turn() const { return v_ == 2 || v_ == 6; } // +-pi/2

    friend constexpr Phase operator+(Phase a, Phase b) { return Phase(a.v_ + b.v_); }
    friend constexpr Phase operator-(Phase a, Phase b) { return Phase(a.v_ - b.v_ + 8); }
    constexpr Phase operator-() const { return Phase(8 - v_); }
    Phase& operator+=(Phase o) { return *this = *this + o; }
    friend constexpr bool operator==(Phase a, Phase b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Phase a, Phase b) { return a.v_ != b.v_; }

  private:
    uint8_t v_ = 0;
};

} // namespace zxamp
