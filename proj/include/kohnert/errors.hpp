#pragma once

#include <stdexcept>
#include <string>

namespace kohnert {

struct parse_error : std::invalid_argument {
    int line;
    parse_error(int line_no, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// raised when the guards on the flagged Schur oracle would be exceeded
struct scale_limit_error : precondition_error {
    using precondition_error::precondition_error;
};

// a computed identity failed to hold
struct verification_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct not_key_positive : verification_error {
    using verification_error::verification_error;
};

}  // namespace kohnert
