/*
   Copyright 2026 The Skyburst Authors

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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace skyburst {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A denominator (Pochhammer product, moment, or rational coefficient) vanished.
class PoleError : public Error {
public:
    PoleError(std::string where, std::string detail)
        : Error(where + ": pole (" + detail + ")"), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

// The orthogonality system is singular, so no monic polynomial exists.
class ExistenceError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(std::string what, std::vector<std::complex<double>> best)
        : Error(std::move(what)), best_(std::move(best)) {}

    const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }

private:
    std::vector<std::complex<double>> best_;
};

class TrackingError : public Error {
public:
    TrackingError(std::string what, double omega) : Error(std::move(what)), omega_(omega) {}

    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

}  // namespace skyburst
