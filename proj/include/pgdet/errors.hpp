/*
 * Copyright 2026 The pgdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PGDET_ERRORS_HPP
#define PGDET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pgdet {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arena, out-of-range vertex, or a violated operation precondition.
class GameError : public Error
{
public:
    using Error::Error;
};

/// A strategy lacks a choice at a vertex where one is required.
class StrategyError : public Error
{
public:
    StrategyError(std::size_t vertex, const std::string& what)
        : Error(what), vertex_(vertex) { }

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, std::string reason)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
          line_(line), column_(column), reason_(std::move(reason)) { }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

/// The exhaustive oracle refused a game whose strategy-profile count is too large.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

/// A property every correct run maintains failed at runtime. Always an implementation bug.
class CertificationFailure : public Error
{
public:
    using Error::Error;
};

}

#endif
