/*
 * Copyright 2026 The gbgame Authors
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

#pragma once

#include "gbgame/arena.hpp"
#include "gbgame/attractor.hpp"
#include "gbgame/brute_force.hpp"
#include "gbgame/decomposition.hpp"
#include "gbgame/game_graph.hpp"
#include "gbgame/genbuchi.hpp"
#include "gbgame/gr1.hpp"
#include "gbgame/io.hpp"
#include "gbgame/objective.hpp"
#include "gbgame/oracle.hpp"
#include "gbgame/progress_measure.hpp"
#include "gbgame/reductions.hpp"
#include "gbgame/rng.hpp"
#include "gbgame/strategies.hpp"
#include "gbgame/types.hpp"
