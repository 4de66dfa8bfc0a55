// Copyright 2026 The gadmm Authors
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

#include "gadmm/baselines.hpp"
#include "gadmm/bench.hpp"
#include "gadmm/benchmark_terms.hpp"
#include "gadmm/certificates.hpp"
#include "gadmm/diagnostics.hpp"
#include "gadmm/errors.hpp"
#include "gadmm/gadmm_m.hpp"
#include "gadmm/instance.hpp"
#include "gadmm/linops.hpp"
#include "gadmm/matrix_market.hpp"
#include "gadmm/problem.hpp"
#include "gadmm/prox.hpp"
#include "gadmm/residual.hpp"
#include "gadmm/sgs.hpp"
#include "gadmm/smooth.hpp"
#include "gadmm/spectral.hpp"
#include "gadmm/subproblem.hpp"
