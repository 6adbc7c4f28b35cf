#pragma once

#include <stdexcept>
#include <string>

namespace triage {

// Base for everything the library throws. CLI maps these to exit code 2.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

// Malformed input files: bad JSON, wrong schema_version, field violations.
class schema_error : public error {
public:
    explicit schema_error(const std::string& msg) : error(msg) {}
};

// Well-formed input that the requested operation cannot accept.
class data_error : public error {
public:
    explicit data_error(const std::string& msg) : error(msg) {}
};

// Document whose phrases are all out of embedding vocabulary.
class oov_document_error : public data_error {
public:
    explicit oov_document_error(const std::string& msg) : data_error(msg) {}
};

}  // namespace triage
