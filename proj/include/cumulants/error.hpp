/*
 Copyright 2026 The cumulants authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cumulants {

// Failure classes. The C layer maps them 1:1 onto status codes.
enum class ErrorKind {
    invalid_argument,  // precondition violated by the caller
    resource_limit,    // size above a configured or hard limit
    parse,             // malformed textual input
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::invalid_argument, what) {}
};

class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& what) : Error(ErrorKind::resource_limit, what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::parse, what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline void require(bool condition, const char* message) {
    if (!condition) throw InvalidArgument(message);
}

inline void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidArgument(message);
}

inline void require_limit(int value, int limit, const std::string& what) {
    if (value > limit)
        throw ResourceLimit(what + ": n=" + std::to_string(value) + " exceeds limit " + std::to_string(limit));
}

}  // namespace cumulants
