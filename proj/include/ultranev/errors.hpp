// Copyright 2026 the ultranev authors
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

#ifndef ULTRANEV_ERRORS_HPP
#define ULTRANEV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ultranev {

// Common base so callers can catch everything raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct out_of_domain : error {
    explicit out_of_domain(const std::string& m) : error("out of domain: " + m) {}
};

struct domain_mismatch : error {
    explicit domain_mismatch(const std::string& m) : error("domain mismatch: " + m) {}
};

struct zero_polynomial : error {
    explicit zero_polynomial(const std::string& m) : error("zero polynomial: " + m) {}
};

struct zero_denominator : error {
    explicit zero_denominator(const std::string& m) : error("zero denominator: " + m) {}
};

struct pole_at_point : error {
    explicit pole_at_point(const std::string& m) : error("pole at point: " + m) {}
};

// Raised when a root or splitting element lives outside the declared field.
struct needs_extension : error {
    explicit needs_extension(const std::string& m) : error("needs extension: " + m) {}
};

struct precision_exhausted : error {
    explicit precision_exhausted(const std::string& m) : error("precision exhausted: " + m) {}
};

struct not_a_chi_power : error {
    std::size_t index;
    not_a_chi_power(std::size_t idx, const std::string& m)
        : error("not a chi power at index " + std::to_string(idx) + ": " + m), index(idx) {}
};

struct all_zero_up_to_order : error {
    explicit all_zero_up_to_order(const std::string& m) : error("all zero up to order: " + m) {}
};

struct beyond_certified_radius : error {
    explicit beyond_certified_radius(const std::string& m)
        : error("beyond certified radius: " + m) {}
};

struct non_unit_reciprocal : error {
    explicit non_unit_reciprocal(const std::string& m) : error("non-unit reciprocal: " + m) {}
};

struct degenerate_composition : error {
    explicit degenerate_composition(const std::string& m)
        : error("degenerate composition: " + m) {}
};

struct uncertified_divisor : error {
    explicit uncertified_divisor(const std::string& m) : error("uncertified divisor: " + m) {}
};

struct unresolved_multiplicity : error {
    explicit unresolved_multiplicity(const std::string& m)
        : error("unresolved multiplicity: " + m) {}
};

struct hypothesis_violated : error {
    std::string which;
    explicit hypothesis_violated(const std::string& w)
        : error("hypothesis violated: " + w), which(w) {}
};

// Internal consistency failure in the local factorization data; unreachable
// when the condition report it was derived from is fully verified.
struct factorization_mismatch : error {
    explicit factorization_mismatch(const std::string& m)
        : error("factorization mismatch: " + m) {}
};

struct parse_error : error {
    std::size_t position;
    parse_error(std::size_t pos, const std::string& m)
        : error("parse error at position " + std::to_string(pos) + ": " + m), position(pos) {}
};

struct field_error : error {
    explicit field_error(const std::string& m) : error("field error: " + m) {}
};

// Valuation ties that the declared field data cannot resolve.
struct ambiguous_valuation : error {
    explicit ambiguous_valuation(const std::string& m)
        : error("ambiguous valuation: " + m) {}
};

}  // namespace ultranev

#endif  // ULTRANEV_ERRORS_HPP
