// Copyright 2026 The kcompress Authors
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

#pragma once

#include "kcompress/compressibility.hpp"
#include "kcompress/config.hpp"
#include "kcompress/epsilon.hpp"
#include "kcompress/errors.hpp"
#include "kcompress/gadgets.hpp"
#include "kcompress/io.hpp"
#include "kcompress/matrix.hpp"
#include "kcompress/number_set.hpp"
#include "kcompress/polynomial.hpp"
#include "kcompress/rational.hpp"
#include "kcompress/reduction.hpp"
#include "kcompress/search.hpp"
#include "kcompress/tour.hpp"
#include "kcompress/vandermonde.hpp"
