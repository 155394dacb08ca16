// SPDX-License-Identifier: Apache-2.0
//
// mmkpi: millimetre-wave 5G KPI assessment toolkit
// Copyright (C) 2026 mmkpi developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

namespace mmkpi {

// Speed of light pinned to 4 significant digits so hand checks stay
// bit-stable across every module.
inline constexpr double kSpeedOfLightMps = 2.998e8;

// Boltzmann constant, J/K (2019 SI exact value).
inline constexpr double kBoltzmannJPerK = 1.380649e-23;

inline constexpr double kPi = 3.14159265358979323846;

} // namespace mmkpi
