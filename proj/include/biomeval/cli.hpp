// Copyright 2026 The biomeval Authors
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

#include <iostream>
#include <string>
#include <vector>

#include "biomeval/error.hpp"

namespace biomeval {

// Exit codes: 0 success, 1 usage or malformed input, 2 referential
// integrity failure, 3 empty or degenerate protocol, 4 protocol violation.
int exit_code_for(ErrorCode code);

// Runs the command line given the arguments after the program name.
int run_cli(const std::vector<std::string>& args,
            std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace biomeval
