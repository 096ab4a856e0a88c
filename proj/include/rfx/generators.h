// Copyright 2026 The rfx Authors
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

#ifndef RFX_GENERATORS_H_
#define RFX_GENERATORS_H_

#include "rfx/forest.h"
#include "rfx/tree.h"

namespace rfx {

// Complete tree of depth n computing x1 xor ... xor xn.
DecisionTree parity_tree(int var_count);

// k copies of the parity tree, k copies of its negation and a constant-1
// tree: 2k + 1 trees, valid (constantly 1). Every instance has t_x as its
// only majoritary reason while the empty term is its only sufficient reason.
RandomForest parity_forest(int var_count, int copies);

}  // namespace rfx

#endif  // RFX_GENERATORS_H_
