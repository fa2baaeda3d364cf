/*
   Copyright 2026 The Skyburst Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "skyburst/errors.hpp"
#include "skyburst/moments.hpp"
#include "skyburst/polynomial.hpp"
#include "skyburst/recurrences.hpp"
#include "skyburst/scalar.hpp"
#include "skyburst/skypoly.hpp"
#include "skyburst/zeros.hpp"
