#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fairgame {

// Error taxonomy shared by the library and the CLI. The CLI maps each branch
// to a stable process exit code, so new failure modes should extend one of
// these rather than throwing std::runtime_error directly.

// Malformed input: bad model text, bad JSON, or a game that fails validation.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Model-text syntax or semantic errors, with source position where known.
struct ModelError : ValidationError {
    ModelError(const std::string& what, int line, int column)
        : ValidationError(format(what, line, column)), line(line), column(column) {}
    explicit ModelError(const std::string& what) : ValidationError(what), line(0), column(0) {}
    int line;
    int column;

  private:
    static std::string format(const std::string& what, int line, int column);
};

// The minimizing player cannot be forced to terminate the game: solving is
// refused and the offending vertex set is reported.
struct NotStoppingError : std::runtime_error {
    explicit NotStoppingError(std::vector<int> witness);
    std::vector<int> witness;
};

// Deliberate size limits (oracle enumeration, explicit-state exploration).
struct SizeGuardError : std::runtime_error {
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// A linear system that should have been regular came out singular. This means
// a caller's precondition (almost-sure termination of the chain) was violated;
// it is reported instead of being patched over.
struct SingularSystemError : std::runtime_error {
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairgame
