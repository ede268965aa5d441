// Copyright 2026 The t2fuzzy Authors
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

#include "t2fuzzy/rational.hpp"
#include "t2fuzzy/piecewise.hpp"
#include "t2fuzzy/envelope.hpp"
#include "t2fuzzy/serialization.hpp"
#include "t2fuzzy/report.hpp"
#include "t2fuzzy/connectives.hpp"
#include "t2fuzzy/lattice.hpp"
#include "t2fuzzy/convolution.hpp"
#include "t2fuzzy/star.hpp"
#include "t2fuzzy/convolution_ops.hpp"
#include "t2fuzzy/fixtures.hpp"
#include "t2fuzzy/generator.hpp"
#include "t2fuzzy/axioms.hpp"
#include "t2fuzzy/separation.hpp"
#include "t2fuzzy/svg.hpp"
