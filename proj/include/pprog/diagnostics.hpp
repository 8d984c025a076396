#ifndef PPROG_DIAGNOSTICS_HPP
#define PPROG_DIAGNOSTICS_HPP

#include <exception>
#include <sstream>
#include <string>
#include <vector>

namespace pprog {

struct SourceLoc {
    int line = 0;  // 1-based; 0 = no location
    int col = 0;

    bool valid() const { return line > 0; }
    friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class DiagCode {
    SyntaxError,
    UndefinedVariable,
    ShadowedVariable,
    ComponentCoverageError,
    DuplicateContextName,
    DuplicateComponentName,
    BadDirective,
    InvalidBias,
    UnknownVariable,
    HeaderMismatch,
    DuplicateEdge,
    CyclicSchema,
    InconsistentMarginals,
    VariableOverlap,
    MissingContextTable,
    PartialAssignment,
    UnsupportedSchema,
    IoError,
};

const char* diag_code_name(DiagCode code);

/// Carrier for every error the pipeline can raise: a machine-readable code,
/// a message, an optional source location and (for parse errors) the set of
/// tokens that would have been accepted.
class Error : public std::exception {
public:
    Error(DiagCode code, std::string message, SourceLoc loc = {},
          std::vector<std::string> expected = {})
        : code_(code), message_(std::move(message)), loc_(loc),
          expected_(std::move(expected)) {
        std::ostringstream os;
        os << diag_code_name(code_);
        if (loc_.valid()) os << " at " << loc_.line << ":" << loc_.col;
        os << ": " << message_;
        if (!expected_.empty()) {
            os << " (expected ";
            for (size_t i = 0; i < expected_.size(); ++i) {
                if (i) os << ", ";
                os << expected_[i];
            }
            os << ")";
        }
        what_ = os.str();
    }

    DiagCode code() const { return code_; }
    const std::string& message() const { return message_; }
    SourceLoc loc() const { return loc_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const char* what() const noexcept override { return what_.c_str(); }

private:
    DiagCode code_;
    std::string message_;
    SourceLoc loc_;
    std::vector<std::string> expected_;
    std::string what_;
};

}  // namespace pprog

#endif
