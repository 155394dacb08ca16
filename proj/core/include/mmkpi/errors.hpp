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

#include <stdexcept>
#include <string>

namespace mmkpi {

/// Base class for configuration problems. Subclasses keep the CLI exit-code
/// contract honest: every config failure maps to exit code 2, with the class
/// naming what went wrong.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Config file missing or unreadable.
class ConfigIoError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Config file is not valid JSON.
class ConfigSyntaxError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Structurally valid JSON that violates the schema: unknown key, wrong
/// type, missing required key. Messages carry the JSON path of the offender.
class ConfigSchemaError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Schema-valid value that breaks a domain invariant (negative radius,
/// exponent out of range, ...). Messages name the offending field.
class ConfigInvariantError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

} // namespace mmkpi
