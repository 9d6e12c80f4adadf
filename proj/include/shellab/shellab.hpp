// Copyright 2026 The Authors.
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

#pragma once

#include "shellab/face.hpp"
#include "shellab/complex.hpp"
#include "shellab/search.hpp"
#include "shellab/shelling.hpp"
#include "shellab/codim_graph.hpp"
#include "shellab/h_assignment.hpp"
#include "shellab/classes.hpp"
#include "shellab/monomial.hpp"
#include "shellab/poset.hpp"
#include "shellab/io.hpp"
