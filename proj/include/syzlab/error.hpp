#pragma once

#include <stdexcept>
#include <string>

namespace syzlab {

/// Failure classes surfaced by the library. Each maps to one CLI exit code.
enum class ErrorKind {
    Input,         // malformed problem, unknown builtin, not a homomorphism
    Limit,         // configured size limit exceeded
    Internal,      // an identity that must hold exactly did not
    Precondition,  // caller violated an operation precondition
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

struct InputError : Error {
    explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& what) : Error(ErrorKind::Limit, what) {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

/// 0 success, 1 usage/schema, 2 limit, 3 internal inconsistency.
int exit_code(ErrorKind kind) noexcept;

const char* to_string(ErrorKind kind) noexcept;

}  // namespace syzlab
