/*
 * Copyright 2026 The cakecut authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef CAKECUT_CAKECUT_HPP
#define CAKECUT_CAKECUT_HPP

#include "cakecut/efficiency.hpp"
#include "cakecut/interval_set.hpp"
#include "cakecut/measure.hpp"
#include "cakecut/procedures.hpp"
#include "cakecut/properties.hpp"
#include "cakecut/rational.hpp"
#include "cakecut/report.hpp"
#include "cakecut/scenario.hpp"
#include "cakecut/simplex.hpp"

#endif  // CAKECUT_CAKECUT_HPP
