// Copyright 2026 The svaforge Authors
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

#ifndef SVAFORGE_SVAFORGE_HPP_
#define SVAFORGE_SVAFORGE_HPP_

#include "svaforge/ast.hpp"
#include "svaforge/contaminate.hpp"
#include "svaforge/equiv.hpp"
#include "svaforge/eval.hpp"
#include "svaforge/evaluate.hpp"
#include "svaforge/generate.hpp"
#include "svaforge/lex.hpp"
#include "svaforge/mutate.hpp"
#include "svaforge/ngram.hpp"
#include "svaforge/parse.hpp"
#include "svaforge/pool.hpp"
#include "svaforge/preprocess.hpp"
#include "svaforge/print.hpp"
#include "svaforge/rng.hpp"
#include "svaforge/sim.hpp"
#include "svaforge/synth.hpp"
#include "svaforge/util.hpp"

#endif  // SVAFORGE_SVAFORGE_HPP_
