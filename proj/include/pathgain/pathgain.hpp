// SPDX-License-Identifier: Apache-2.0
//
// pathgain: closed-form average path gain laws for common radio environments
// Copyright (C) 2026 The pathgain authors
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

#ifndef PATHGAIN_PATHGAIN_HPP
#define PATHGAIN_PATHGAIN_HPP

#include "pathgain/canyon_los.hpp"
#include "pathgain/common.hpp"
#include "pathgain/config.hpp"
#include "pathgain/data_fit.hpp"
#include "pathgain/diffuse_halfspace.hpp"
#include "pathgain/models.hpp"
#include "pathgain/morphology.hpp"
#include "pathgain/oracles.hpp"
#include "pathgain/presets.hpp"
#include "pathgain/reference_models.hpp"
#include "pathgain/surface_em.hpp"
#include "pathgain/verify.hpp"

#endif
