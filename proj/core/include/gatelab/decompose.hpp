// Copyright 2026 The gatelab developers
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

#include <vector>

#include "gatelab/network.hpp"

namespace gatelab {

/// Factors an n x n unitary into beam splitters and phase shifters by Givens
/// elimination, placed on the given physical mode indices (modes[k] hosts
/// matrix index k). Composing the returned elements reproduces u exactly up
/// to roundoff.
std::vector<Element> decompose_unitary(const ComplexMatrix& u, const std::vector<int>& modes);

}  // namespace gatelab
