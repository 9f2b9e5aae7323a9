#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace panther {

// Malformed input data (edge lists, mapping files). Carries the 1-based
// line number when one is known.
class IngestError : public std::runtime_error {
public:
    IngestError(const std::string& message, std::size_t line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line_(line_number) {}

    explicit IngestError(const std::string& message)
        : std::runtime_error(message), line_(0) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Unreadable or mismatched binary files (bad magic, wrong version,
// index built against a different graph).
class DataError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact enumeration refused because the graph exceeds the oracle budget.
class OracleTooLargeError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace panther
