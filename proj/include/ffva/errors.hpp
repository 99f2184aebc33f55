#pragma once

#include <stdexcept>
#include <string>

namespace ffva {

struct InvertNonUnit : std::domain_error {
    InvertNonUnit() : std::domain_error("series has zero constant term and is not invertible") {}
};

struct SpeciesMismatch : std::invalid_argument {
    SpeciesMismatch(int a, int b)
        : std::invalid_argument("species count mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b)) {}
};

struct InvalidMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyCharacter : std::invalid_argument {
    EmptyCharacter() : std::invalid_argument("Whittaker character must have nonzero chi_plus and chi_minus") {}
};

struct NotProportional : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ffva
