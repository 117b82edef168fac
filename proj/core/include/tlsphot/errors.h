// Copyright 2026 The tlsphot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TLSPHOT_ERRORS_H
#define TLSPHOT_ERRORS_H

#include <stdexcept>
#include <string>

namespace tlsphot {

/// Grid too coarse or window too narrow for the requested pulse.
class ResolutionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Amplitudes living on different grids were combined.
class GridMismatchError : public std::invalid_argument {
   public:
    GridMismatchError() : std::invalid_argument("amplitudes are defined on different spectral grids") {
    }
};

/// Argument outside the domain of a closed-form expression.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class AsymmetricAmplitudeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The matching condition has no sign change on the searched interval.
class NoCrossingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operation was handed a state outside the subspace it is defined on.
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class CarrierMismatchError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The structured two-photon representation cannot express the requested map.
class UnsupportedOperation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace tlsphot

#endif
