#ifndef CJONES_ERRORS_HPP
#define CJONES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cjones {

// Raised by the knot-expression and braid-word parsers.  `offset` is the byte
// position in the input text; the CLI renders it as "error at <offset>: <message>".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("error at " + std::to_string(offset) + ": " + message),
          offset_(offset), message_(message) {}

    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

// Everything that is well-formed input but outside what the library can
// evaluate: domain restrictions, branch degenerations, evaluations without a
// formula, rules that cannot be derived, numerical failures.  The CLI maps
// all of these to exit code 3.
class MathError : public std::runtime_error {
public:
    enum class Kind {
        Domain,              // argument outside a stated domain (e.g. cone angle >= 2pi/3)
        DegeneratePoint,     // evaluation point where a required quantity vanishes
        BranchDegeneration,  // A-polynomial branch collision along a continuation path
        OutOfDomain,         // continuation target outside the guarded search box
        Unsupported,         // no evaluation formula for the requested object
        UnsupportedLink,     // braid closure is a multi-component link
        NoRule,              // delta rule engine has no applicable rule
        RuleNotDerivable,    // delta rule hypotheses not satisfied / mixed classes
        Structural,          // ill-formed expression for the requested operation
        QuadratureFailure,   // integration did not converge within the halving budget
        SingularFit,         // rank-deficient least-squares design
        Shape,               // matrix shape mismatch
    };

    MathError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace cjones

#endif
