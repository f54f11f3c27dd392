// Copyright 2026 The chiralwind Authors
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

#include <functional>
#include <string>
#include <string_view>

namespace chiral {

enum class Severity { Info, Warning };

using DiagnosticSink = std::function<void(Severity, std::string_view)>;

/// Installs a process-wide sink for non-fatal diagnostics and returns the
/// previous one. The default sink writes warnings to stderr.
DiagnosticSink set_diagnostic_sink(DiagnosticSink sink);

void report(Severity severity, std::string_view message);

inline void warn(std::string_view message) { report(Severity::Warning, message); }

}  // namespace chiral
