#pragma once

#include <stdexcept>
#include <string>

namespace audit {

// Data-shaped failures (bad files, schema violations, missing inputs).
// The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class StructuralError : public DataError {
public:
    explicit StructuralError(const std::string& msg) : DataError(msg) {}
};

class ValueError : public DataError {
public:
    explicit ValueError(const std::string& msg) : DataError(msg) {}
};

class SchemaError : public DataError {
public:
    explicit SchemaError(const std::string& msg) : DataError(msg) {}
};

class InsufficientDataError : public DataError {
public:
    explicit InsufficientDataError(const std::string& msg) : DataError(msg) {}
};

class MissingInputError : public DataError {
public:
    explicit MissingInputError(const std::string& msg) : DataError(msg) {}
};

class DegenerateLabelError : public DataError {
public:
    explicit DegenerateLabelError(const std::string& msg) : DataError(msg) {}
};

class ModelIntegrityError : public DataError {
public:
    explicit ModelIntegrityError(const std::string& msg) : DataError(msg) {}
};

// Numeric failures of a solver on otherwise valid data.
// The CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class SeparationError : public NumericError {
public:
    explicit SeparationError(const std::string& msg) : NumericError(msg) {}
};

class RankDeficiencyError : public NumericError {
public:
    explicit RankDeficiencyError(const std::string& msg) : NumericError(msg) {}
};

class DivergenceError : public NumericError {
public:
    explicit DivergenceError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace audit
