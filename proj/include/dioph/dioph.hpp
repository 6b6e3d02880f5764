// Copyright 2026 The dioph Authors
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

#ifndef DIOPH_DIOPH_HPP
#define DIOPH_DIOPH_HPP

// Library umbrella. The command-line layer (dioph/cli.hpp) is separate
// because it pulls in CLI11.

#include "dioph/error.hpp"
#include "dioph/numeric.hpp"
#include "dioph/ball.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/real_source.hpp"
#include "dioph/hp_real.hpp"
#include "dioph/expansion.hpp"
#include "dioph/polynomial.hpp"
#include "dioph/gpoly.hpp"
#include "dioph/witness.hpp"
#include "dioph/counting.hpp"
#include "dioph/schedule.hpp"
#include "dioph/alpha_spec.hpp"

#endif  // DIOPH_DIOPH_HPP
