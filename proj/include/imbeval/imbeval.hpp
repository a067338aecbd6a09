// Copyright 2026 The imbeval authors
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

#include "imbeval/auc.hpp"
#include "imbeval/audit.hpp"
#include "imbeval/core.hpp"
#include "imbeval/csv.hpp"
#include "imbeval/curve.hpp"
#include "imbeval/curves.hpp"
#include "imbeval/metrics.hpp"
#include "imbeval/prior_shift.hpp"
#include "imbeval/probit.hpp"
#include "imbeval/report.hpp"
#include "imbeval/runner.hpp"
#include "imbeval/svg.hpp"
