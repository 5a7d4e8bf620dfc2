// Copyright 2026 The convexham Authors
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

#ifndef CONVEXHAM_CONVEXHAM_HPP
#define CONVEXHAM_CONVEXHAM_HPP

#include "convexham/generators.hpp"
#include "convexham/graph.hpp"
#include "convexham/ham_cycle.hpp"
#include "convexham/ham_path.hpp"
#include "convexham/interval_view.hpp"
#include "convexham/oracle.hpp"
#include "convexham/properties.hpp"
#include "convexham/sequence.hpp"
#include "convexham/text_format.hpp"

#endif  // CONVEXHAM_CONVEXHAM_HPP
