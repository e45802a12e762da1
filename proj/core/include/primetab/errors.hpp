#pragma once

#include <stdexcept>
#include <string>

namespace primetab {

// Requested table would blow past the configured memory budget.
struct CapacityExceeded : std::runtime_error {
    explicit CapacityExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A packed-digit operation would (or did) violate its no-carry guarantee.
struct OverflowContract : std::runtime_error {
    explicit OverflowContract(const std::string& what) : std::runtime_error(what) {}
};

// A factorization query needs primes beyond the supplied table.
struct TableTooSmall : std::runtime_error {
    explicit TableTooSmall(const std::string& what) : std::runtime_error(what) {}
};

// A batch-multiply operand does not fit the declared bit width.
struct OperandTooLarge : std::runtime_error {
    explicit OperandTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// A table file failed structural validation on read.
struct MalformedTable : std::runtime_error {
    explicit MalformedTable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace primetab
