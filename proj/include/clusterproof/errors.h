// Copyright 2026 The clusterproof Authors
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

#ifndef CLUSTERPROOF_ERRORS_H
#define CLUSTERPROOF_ERRORS_H

#include <stdexcept>
#include <string>

namespace clusterproof {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Mismatched lengths, out-of-range vertices, malformed inputs.
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// A requested register would exceed the simulator qubit cap.
class CapacityExceeded : public Error {
   public:
    using Error::Error;
};

class UncoverableVertex : public Error {
   public:
    explicit UncoverableVertex(int vertex)
        : Error("vertex " + std::to_string(vertex) + " lies in no triangle"), vertex(vertex) {}
    int vertex;
};

class NotATriangle : public Error {
   public:
    using Error::Error;
};

class ImaginaryResidue : public Error {
   public:
    using Error::Error;
};

class NormUnderflow : public Error {
   public:
    using Error::Error;
};

class JunkDegenerate : public Error {
   public:
    using Error::Error;
};

class DomainError : public Error {
   public:
    using Error::Error;
};

class MissingParameter : public Error {
   public:
    using Error::Error;
};

}  // namespace clusterproof

#endif
