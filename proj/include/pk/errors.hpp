/*
 * Copyright 2026 The pk Authors
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

#ifndef PK_ERRORS_HPP
#define PK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pk {

/// Base class for failures of a mathematical precondition or construction.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero in cyclotomic field") {}
  explicit DivisionByZero(const std::string& what) : MathError(what) {}
};

class NoTraceOne : public MathError {
 public:
  NoTraceOne() : MathError("no element of trace one exists") {}
  explicit NoTraceOne(const std::string& what) : MathError(what) {}
};

class NotGalois : public MathError {
 public:
  NotGalois() : MathError("no partial Galois coordinates exist") {}
  explicit NotGalois(const std::string& what) : MathError(what) {}
};

class NotACocycle : public MathError {
 public:
  NotACocycle() : MathError("cochain is not a 1-cocycle") {}
  explicit NotACocycle(const std::string& what) : MathError(what) {}
};

class SumNotS : public MathError {
 public:
  SumNotS() : MathError("the character modules do not span the algebra") {}
  explicit SumNotS(const std::string& what) : MathError(what) {}
};

class RankNotOne : public MathError {
 public:
  RankNotOne() : MathError("module is not of rank one over the base") {}
  explicit RankNotOne(const std::string& what) : MathError(what) {}
};

class PhiNotLinear : public MathError {
 public:
  PhiNotLinear() : MathError("contraction map is not linear over the base") {}
  explicit PhiNotLinear(const std::string& what) : MathError(what) {}
};

class NotSaturated : public MathError {
 public:
  NotSaturated() : MathError("index set is not saturated") {}
  explicit NotSaturated(const std::string& what) : MathError(what) {}
};

/// A search space exceeded its configured bound.
class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input; `line` is 0 when no position is known.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pk

#endif  // PK_ERRORS_HPP
