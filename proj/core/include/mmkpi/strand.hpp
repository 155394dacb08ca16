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

/// The two analysis regimes. FixedBandwidth scales antenna counts with
/// frequency at fixed bandwidth; FixedAntennas keeps the array fixed and
/// scales bandwidth per frequency instead.
enum class Strand {
    FixedBandwidth = 1,
    FixedAntennas = 2,
};

inline int strand_id(Strand s) { return static_cast<int>(s); }

} // namespace mmkpi
