#include "syzlab/error.hpp"

namespace syzlab {

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Input:
            return 1;
        case ErrorKind::Limit:
            return 2;
        case ErrorKind::Internal:
        case ErrorKind::Precondition:
            return 3;
    }
    return 3;
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Input:
            return "input error";
        case ErrorKind::Limit:
            return "computation limit exceeded";
        case ErrorKind::Internal:
            return "internal inconsistency";
        case ErrorKind::Precondition:
            return "precondition violated";
    }
    return "error";
}

}  // namespace syzlab
