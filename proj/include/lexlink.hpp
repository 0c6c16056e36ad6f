// Copyright 2026 The lexlink Authors
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

#ifndef LEXLINK_LEXLINK_HPP
#define LEXLINK_LEXLINK_HPP

// Library umbrella header. The CLI front end lives in lexlink/cli.hpp and
// is not included here.
#include "lexlink/bidict.hpp"
#include "lexlink/common.hpp"
#include "lexlink/density.hpp"
#include "lexlink/linker.hpp"
#include "lexlink/manifest.hpp"
#include "lexlink/normalizer.hpp"
#include "lexlink/rational.hpp"
#include "lexlink/report.hpp"
#include "lexlink/taxonomy.hpp"

#endif  // LEXLINK_LEXLINK_HPP
