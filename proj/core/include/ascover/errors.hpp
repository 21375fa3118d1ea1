// Copyright 2026 The Authors.
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

#ifndef ASCOVER_ERRORS_HPP_
#define ASCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ascover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conditioning or posterior queries on a realization outside the support.
class ZeroProbabilityRealization : public Error {
 public:
  using Error::Error;
};

// Extending a partial realization with an item it already observes.
class ItemAlreadyObserved : public Error {
 public:
  using Error::Error;
};

// The utility cannot reach its quota on some realization in the support.
class CoverabilityViolation : public Error {
 public:
  using Error::Error;
};

// A policy stopped proposing items before its objective was covered, or
// proposed an item that was already observed.
class PolicyStuck : public Error {
 public:
  using Error::Error;
};

// Expanding a product distribution would exceed the enumeration cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

// An exact computation was requested on an instance above its size cap.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// Integer item costs were required but a fractional cost was supplied.
class NonIntegralCosts : public Error {
 public:
  using Error::Error;
};

// A set cover instance leaves some ground element uncovered.
class UncoverableElement : public Error {
 public:
  using Error::Error;
};

// Two hypotheses respond identically to every test, so no policy can
// distinguish them.
class UnidentifiableInstance : public Error {
 public:
  using Error::Error;
};

// Mixing utilities with different quotas where a common quota is required.
class MismatchedQuota : public Error {
 public:
  using Error::Error;
};

// An execution trace or empirical law is internally inconsistent.
class InvalidTrace : public Error {
 public:
  using Error::Error;
};

// Malformed instance or distribution files.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ascover

#endif  // ASCOVER_ERRORS_HPP_
