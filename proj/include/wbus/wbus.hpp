// Copyright 2026 The wbus Authors
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

#ifndef WBUS_WBUS_HPP_
#define WBUS_WBUS_HPP_

#include "wbus/analysis.hpp"
#include "wbus/device_model.hpp"
#include "wbus/dynamics.hpp"
#include "wbus/effective_model.hpp"
#include "wbus/errors.hpp"
#include "wbus/numerics.hpp"
#include "wbus/reporting.hpp"
#include "wbus/run_config.hpp"

#endif  // WBUS_WBUS_HPP_
