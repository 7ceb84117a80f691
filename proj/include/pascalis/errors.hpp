/*
   Copyright 2026 The pascalis authors

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

#ifndef PASCALIS_ERRORS_HPP
#define PASCALIS_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pascalis {

/// Failure conditions surfaced by the engine. Exit-code mapping lives in the CLI.
enum class errc {
    mixed_fields,
    division_by_zero,
    non_prime_modulus,
    ambient_mismatch,
    arity_mismatch,
    exponent_overflow,
    not_square,
    singular_linear_part,
    singular_matrix,
    not_inverse,
    degenerate_map,
    not_homogeneous,
    not_strongly_nilpotent,
    resource_limit,
    unknown_example,
    unsupported,
    syntax_error,
    unknown_variable,
    non_natural_exponent,
    zero_denominator,
};

inline const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::mixed_fields: return "MixedFields";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::non_prime_modulus: return "NonPrimeModulus";
        case errc::ambient_mismatch: return "AmbientMismatch";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::exponent_overflow: return "ExponentOverflow";
        case errc::not_square: return "NotSquare";
        case errc::singular_linear_part: return "SingularLinearPart";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::not_inverse: return "NotInverse";
        case errc::degenerate_map: return "DegenerateMap";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::not_strongly_nilpotent: return "NotStronglyNilpotent";
        case errc::resource_limit: return "ResourceLimit";
        case errc::unknown_example: return "UnknownExample";
        case errc::unsupported: return "Unsupported";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::non_natural_exponent: return "NonNaturalExponent";
        case errc::zero_denominator: return "ZeroDenominator";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

/// Thrown when a tableau step exceeds the configured term ceiling; carries the step reached.
class resource_limit_error : public error {
   public:
    resource_limit_error(std::uint64_t step, std::size_t terms, std::size_t ceiling)
        : error(errc::resource_limit,
                "step " + std::to_string(step) + " holds " + std::to_string(terms) +
                    " terms, ceiling " + std::to_string(ceiling)),
          step_(step),
          terms_(terms) {}

    std::uint64_t step_reached() const noexcept { return step_; }
    std::size_t terms() const noexcept { return terms_; }

   private:
    std::uint64_t step_;
    std::size_t terms_;
};

/// 1-based position of a token in a map file.
struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
    bool operator==(const SourcePos&) const = default;
};

class parse_error : public error {
   public:
    parse_error(errc code, SourcePos pos, const std::string& what)
        : error(code, "line " + std::to_string(pos.line) + ", column " +
                          std::to_string(pos.column) + ": " + what),
          pos_(pos) {}

    SourcePos position() const noexcept { return pos_; }

   private:
    SourcePos pos_;
};

}  // namespace pascalis

#endif
