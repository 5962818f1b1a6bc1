// Copyright 2026 The qpca Authors.
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

#ifndef QPCA_QPCA_HPP
#define QPCA_QPCA_HPP

#include "qpca/dataset.hpp"
#include "qpca/errors.hpp"
#include "qpca/image_io.hpp"
#include "qpca/model_io.hpp"
#include "qpca/noise.hpp"
#include "qpca/orthonormalize.hpp"
#include "qpca/pipeline.hpp"
#include "qpca/qmatrix.hpp"
#include "qpca/quaternion.hpp"
#include "qpca/qvector.hpp"
#include "qpca/real_rep.hpp"
#include "qpca/rng.hpp"
#include "qpca/solver.hpp"

#endif  // QPCA_QPCA_HPP
