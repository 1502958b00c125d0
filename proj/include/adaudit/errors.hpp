#pragma once

#include <stdexcept>
#include <string>

namespace adaudit {

class AuditError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- record parsing / validation -------------------------------------------

class MissingFieldError : public AuditError {
public:
    explicit MissingFieldError(const std::string& field)
        : AuditError("missing required field: " + field), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class InvalidValueError : public AuditError {
public:
    InvalidValueError(const std::string& field, const std::string& detail)
        : AuditError("invalid value for " + field + ": " + detail), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class InvariantViolationError : public AuditError {
public:
    using AuditError::AuditError;
};

class DuplicateCellError : public AuditError {
public:
    using AuditError::AuditError;
};

// ---- ingestion --------------------------------------------------------------

class IoError : public AuditError {
public:
    using AuditError::AuditError;
};

class TransportError : public AuditError {
public:
    using AuditError::AuditError;
};

class RateLimitedError : public AuditError {
public:
    using AuditError::AuditError;
};

class SourceError : public AuditError {
public:
    SourceError(int code, const std::string& message)
        : AuditError("source error " + std::to_string(code) + ": " + message),
          code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

// ---- classifiers ------------------------------------------------------------

class EmptyTrainingSetError : public AuditError {
public:
    using AuditError::AuditError;
};

class NonPositiveAlphaError : public AuditError {
public:
    using AuditError::AuditError;
};

class SchemaMismatchError : public AuditError {
public:
    using AuditError::AuditError;
};

class EmptyTermListError : public AuditError {
public:
    explicit EmptyTermListError(const std::string& label)
        : AuditError("empty term list for label: " + label), label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class InvalidTermError : public AuditError {
public:
    InvalidTermError(const std::string& label, const std::string& term)
        : AuditError("invalid term for label " + label + ": \"" + term +
                     "\" (terms must tokenize to one or two tokens)"),
          label_(label), term_(term) {}
    const std::string& label() const noexcept { return label_; }
    const std::string& term() const noexcept { return term_; }

private:
    std::string label_;
    std::string term_;
};

class DuplicateLabelError : public AuditError {
public:
    using AuditError::AuditError;
};

class UnknownLabelError : public AuditError {
public:
    using AuditError::AuditError;
};

// ---- evaluation / analytics ---------------------------------------------------

class LengthMismatchError : public AuditError {
public:
    using AuditError::AuditError;
};

class EmptyInputError : public AuditError {
public:
    using AuditError::AuditError;
};

class InvalidFractionError : public AuditError {
public:
    using AuditError::AuditError;
};

class EmptyDistributionError : public AuditError {
public:
    using AuditError::AuditError;
};

// ---- storage ------------------------------------------------------------------

class StorageError : public AuditError {
public:
    using AuditError::AuditError;
};

}  // namespace adaudit
