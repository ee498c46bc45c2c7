#ifndef CCM_ERRORS_HPP
#define CCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccm {

/// Input file does not conform to a documented format.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A documented precondition or domain restriction was violated by the caller.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact search exceeded its node budget; no verdict was produced.
class SearchBudgetExhausted : public std::runtime_error {
public:
    explicit SearchBudgetExhausted(uint64_t budget)
        : std::runtime_error("search node budget exhausted (" + std::to_string(budget) +
                             " nodes); raise RAMSEY_NODE_BUDGET to continue") {}
};

/// A guarantee that the underlying theorems make unconditional failed on a
/// concrete instance. Never expected to fire; carries enough to reproduce.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(std::string stage, std::string detail, std::string coloring_text)
        : std::runtime_error(stage + ": " + detail),
          stage_(std::move(stage)),
          detail_(std::move(detail)),
          coloring_text_(std::move(coloring_text)) {}

    const std::string& stage() const { return stage_; }
    const std::string& detail() const { return detail_; }
    /// Serialized coloring reproducing the violation.
    const std::string& coloring_text() const { return coloring_text_; }

private:
    std::string stage_;
    std::string detail_;
    std::string coloring_text_;
};

}  // namespace ccm

#endif
