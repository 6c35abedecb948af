#pragma once

#include <stdexcept>
#include <string>

namespace awsps {

// A requested computation cannot be carried out with the given
// configuration (empty bandwidth schedule, calibration bracket that
// never passes, ...). CLI maps this to exit code 3.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded (e.g. weight-image size).
// CLI maps this to exit code 4.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. Carries the 1-based line number when known.
// CLI maps this to exit code 2.
class CsvParseError : public std::runtime_error {
public:
    CsvParseError(const std::string& msg, long line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

}  // namespace awsps
