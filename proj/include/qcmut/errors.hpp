// Copyright 2026 The qcmut authors
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

#include <stdexcept>
#include <string>

namespace qcmut {

// Base class for all toolkit errors. Everything thrown on a well-defined
// failure path derives from this; anything else escaping the library is a
// bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- circuit construction and editing ---

class InvalidCircuit : public Error {
 public:
  using Error::Error;
};

class InvalidInstruction : public Error {
 public:
  using Error::Error;
};

class InvalidPosition : public Error {
 public:
  using Error::Error;
};

class PlaceholderNotFound : public Error {
 public:
  using Error::Error;
};

class AmbiguousPlaceholder : public Error {
 public:
  using Error::Error;
};

class InvalidSubstitution : public Error {
 public:
  using Error::Error;
};

// --- gate catalog ---

class UnknownGate : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

// --- mutation operators ---

class RetryExhausted : public Error {
 public:
  using Error::Error;
};

class IllegalTarget : public Error {
 public:
  using Error::Error;
};

class SingletonClass : public Error {
 public:
  using Error::Error;
};

class NoAttributeFreedom : public Error {
 public:
  using Error::Error;
};

// --- budgets and coverage audits ---

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InconsistentRecords : public Error {
 public:
  using Error::Error;
};

// --- simulation ---

class PlaceholderPresent : public Error {
 public:
  using Error::Error;
};

class TooManyQubits : public Error {
 public:
  using Error::Error;
};

// --- kill analysis ---

class OracleIncomplete : public Error {
 public:
  using Error::Error;
};

class NoDifference : public Error {
 public:
  using Error::Error;
};

// --- persistence and interchange ---

class LoadError : public Error {
 public:
  using Error::Error;
};

class UnsupportedQasm : public Error {
 public:
  using Error::Error;
};

}  // namespace qcmut
