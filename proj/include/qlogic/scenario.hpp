// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qlogic/config.hpp"
#include "qlogic/report.hpp"

namespace qlogic {

/// Runs the checks of c.scenario. The report depends only on the config
/// (including seed); `threads` changes wall time, not output.
///
/// Module errors are rethrown as Error with the scenario name prefixed.
Report run_scenario(const Config& c, unsigned threads = 1);

}  // namespace qlogic
