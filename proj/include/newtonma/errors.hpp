#pragma once

#include <stdexcept>
#include <string>

namespace newtonma {

/* Malformed user input: syntax errors, dimension mismatches, out-of-range
   variable indices.  CLI maps this to exit code 2. */
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/* Structurally valid input that violates a documented precondition:
   degenerate systems, non-exhaustive weights, lower-dimensional polytopes
   where full dimension is required.  CLI maps this to exit code 3. */
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace newtonma
