// Copyright 2026 The fpsearch Authors
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

#ifndef FPSEARCH_ERRORS_H
#define FPSEARCH_ERRORS_H

#include <stdexcept>
#include <string>

namespace fpsearch {

/// Raised when a request exceeds a configured size cap (qubit count,
/// recursion depth, register width). Domain errors use std::invalid_argument.
class ResourceError : public std::runtime_error {
   public:
    explicit ResourceError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace fpsearch

#endif
