#pragma once

#include <stdexcept>
#include <string>

namespace treeharm {

// Base class for all library errors. CLI maps config_error to exit 2,
// tolerance breaches to exit 1; everything else is a hard failure.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_word_error : public error {
public:
    explicit invalid_word_error(const std::string& what) : error(what) {}
};

class insufficient_depth_error : public error {
public:
    explicit insufficient_depth_error(const std::string& what) : error(what) {}
};

class pole_proximity_error : public error {
public:
    explicit pole_proximity_error(const std::string& what) : error(what) {}
};

class invalid_grid_error : public error {
public:
    explicit invalid_grid_error(const std::string& what) : error(what) {}
};

class invalid_parameter_error : public error {
public:
    explicit invalid_parameter_error(const std::string& what) : error(what) {}
};

class strip_too_narrow_error : public error {
public:
    explicit strip_too_narrow_error(const std::string& what) : error(what) {}
};

class symbol_domain_error : public error {
public:
    explicit symbol_domain_error(const std::string& what) : error(what) {}
};

class invalid_input_error : public error {
public:
    explicit invalid_input_error(const std::string& what) : error(what) {}
};

class config_error : public error {
public:
    explicit config_error(const std::string& what) : error(what) {}
};

} // namespace treeharm
