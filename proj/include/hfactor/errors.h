// Copyright 2026 The hfactor Authors
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

#ifndef HFACTOR_ERRORS_H_
#define HFACTOR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hfactor {

// An exhaustive routine refused an instance above its configured size cap.
// Never replaced by an approximation.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, int limit, int actual)
      : std::runtime_error("instance too large for " + cap + ": " +
                           std::to_string(actual) + " > cap " +
                           std::to_string(limit)),
        cap_(std::move(cap)),
        limit_(limit),
        actual_(actual) {}

  const std::string& cap() const { return cap_; }
  int limit() const { return limit_; }
  int actual() const { return actual_; }

 private:
  std::string cap_;
  int limit_;
  int actual_;
};

}  // namespace hfactor

#endif  // HFACTOR_ERRORS_H_
