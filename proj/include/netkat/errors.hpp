// Copyright 2026 The NetKAT authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETKAT_ERRORS_HPP_
#define NETKAT_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "netkat/ast.hpp"

namespace netkat {

// Location of a token in source text. Line and column are 1-based.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 1;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A located syntax error. what() includes the "line:col:" prefix.
class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + message),
        span_(span),
        message_(message) {}

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Why a summand fails the hop-by-hop shape check.
enum class HbhReason {
  kContainsStar,
  kContainsDup,
  kContainsNegation,
  kNotPositiveTest,
  kNestedUnion,
  kAssignmentNotOnPortField,
  kMultipleAssignments,
  kNoAssignment,
  kAssignmentNotLast,
};

const char* to_string(HbhReason reason);

class NotHbH : public ValidationError {
 public:
  NotHbH(std::size_t summand_index, HbhReason reason)
      : ValidationError("policy is not hop-by-hop: summand " +
                        std::to_string(summand_index) + ": " +
                        to_string(reason)),
        summand_index_(summand_index),
        reason_(reason) {}

  std::size_t summand_index() const { return summand_index_; }
  HbhReason reason() const { return reason_; }

 private:
  std::size_t summand_index_;
  HbhReason reason_;
};

class NotTopology : public ValidationError {
 public:
  NotTopology(std::size_t summand_index, const std::string& reason)
      : ValidationError("term is not a topology: summand " +
                        std::to_string(summand_index) + ": " + reason),
        summand_index_(summand_index),
        reason_(reason) {}

  std::size_t summand_index() const { return summand_index_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t summand_index_;
  std::string reason_;
};

class NotInOut : public ValidationError {
 public:
  explicit NotInOut(const std::string& reason)
      : ValidationError("predicate is not a sum of positive test sequences: " +
                        reason),
        reason_(reason) {}

  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

// A term uses a value outside the declared domain of its field.
class DomainError : public ValidationError {
 public:
  DomainError(Field field, Value value)
      : ValidationError("value " + std::to_string(value) +
                        " is not in the declared domain of field '" + field +
                        "'"),
        field_(std::move(field)),
        value_(value) {}

  const Field& field() const { return field_; }
  Value value() const { return value_; }

 private:
  Field field_;
  Value value_;
};

class UndeclaredField : public Error {
 public:
  explicit UndeclaredField(Field field)
      : Error("field '" + field + "' is not declared"),
        field_(std::move(field)) {}

  const Field& field() const { return field_; }

 private:
  Field field_;
};

// A modification writes a value outside its field's domain during evaluation.
class DomainViolation : public Error {
 public:
  DomainViolation(Field field, Value value)
      : Error("modification writes " + std::to_string(value) +
              " outside the domain of field '" + field + "'"),
        field_(std::move(field)),
        value_(value) {}

  const Field& field() const { return field_; }
  Value value() const { return value_; }

 private:
  Field field_;
  Value value_;
};

// dup under star with no iteration bound: the semantic union is infinite.
class UnboundedStar : public Error {
 public:
  UnboundedStar() : Error("star over a policy containing dup needs a bound") {}
};

// Word expansion exceeded the configured budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : Error("word expansion exceeded the budget of " +
              std::to_string(limit) + " words"),
        limit_(limit) {}

  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

// A word-level pass met a term it cannot flatten (negation, dup, star).
class UnsupportedAtom : public Error {
 public:
  explicit UnsupportedAtom(const std::string& what_kind)
      : Error("cannot flatten " + what_kind + " into a word") {}
};

}  // namespace netkat

#endif  // NETKAT_ERRORS_HPP_
