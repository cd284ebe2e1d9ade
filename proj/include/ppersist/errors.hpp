/* Copyright (c) 2026 The ppersist Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef PPERSIST_ERRORS_HPP
#define PPERSIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppersist {

/// Invalid input: malformed files, violated preconditions, failed axiom
/// checks. Mapped to exit code 1 by the CLI.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check the library performs on its own results failed (e.g. a
/// sublevel set disagreeing with its closed-form description). Mapped to
/// exit code 2 by the CLI; reaching this is a bug, not a user error.
class internal_check_error : public std::logic_error {
  public:
    explicit internal_check_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ppersist

#endif
