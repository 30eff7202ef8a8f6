#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace statel {

// 1-based position of a token in parser input.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 0;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(SourceSpan where, std::string message,
               std::vector<std::string> expected_tokens = {})
        : Error(std::move(message)), span(where), expected(std::move(expected_tokens)) {}

    SourceSpan span;
    std::vector<std::string> expected;
};

// Conditional bounds outside 0 <= l <= u <= 1.
class BoundsError : public Error {
public:
    using Error::Error;
};

// A concept with negation reached an EL-only pipeline.
class NotInElFragment : public Error {
public:
    using Error::Error;
};

// A conditional with upper bound < 1 reached the necessity pipeline.
class NotOpenMinded : public Error {
public:
    using Error::Error;
};

// conditionalToGci on bounds other than [1,1].
class NotDeterministic : public Error {
public:
    using Error::Error;
};

// Midpoint/bisection over a query whose condition has count 0.
class DenominatorEmpty : public Error {
public:
    using Error::Error;
};

// Bisection target outside the two input ratios.
class TargetOutOfRange : public Error {
public:
    using Error::Error;
};

// A configured enumeration/pivot/size limit was exceeded.
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

// p-entailment on an inconsistent knowledge base.
class KbInconsistent : public Error {
public:
    using Error::Error;
};

// integerize() on a row that is not scale-robust.
class ScaleClassViolation : public Error {
public:
    using Error::Error;
};

}  // namespace statel
