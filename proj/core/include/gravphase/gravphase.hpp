// Copyright 2026 The Gravphase Authors
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

#include "gravphase/branch.hpp"
#include "gravphase/compensated_sum.hpp"
#include "gravphase/constants.hpp"
#include "gravphase/density_matrix.hpp"
#include "gravphase/errors.hpp"
#include "gravphase/gravity_model.hpp"
#include "gravphase/protocol.hpp"
#include "gravphase/rng.hpp"
#include "gravphase/sensing.hpp"
#include "gravphase/statevector.hpp"
