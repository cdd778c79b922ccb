// Copyright 2026 The SwarmAttack Authors.
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

#ifndef SWARMATTACK_SWARMATTACK_HPP_
#define SWARMATTACK_SWARMATTACK_HPP_

#include "swarmattack/attack.hpp"
#include "swarmattack/corpus.hpp"
#include "swarmattack/errors.hpp"
#include "swarmattack/exhaustive.hpp"
#include "swarmattack/genetic.hpp"
#include "swarmattack/greedy.hpp"
#include "swarmattack/lexicon.hpp"
#include "swarmattack/log.hpp"
#include "swarmattack/metrics.hpp"
#include "swarmattack/pso.hpp"
#include "swarmattack/random.hpp"
#include "swarmattack/remote_victim.hpp"
#include "swarmattack/sentence.hpp"
#include "swarmattack/space.hpp"
#include "swarmattack/subprocess.hpp"
#include "swarmattack/text.hpp"
#include "swarmattack/victim.hpp"

#endif  // SWARMATTACK_SWARMATTACK_HPP_
