#pragma once

#include <stdexcept>
#include <string>

namespace strandlab {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_input_error : public error {
public:
    using error::error;
};

class invalid_vertex_error : public error {
public:
    using error::error;
};

class resource_limit_error : public error {
public:
    resource_limit_error(const std::string& what, std::size_t budget)
        : error(what), budget_(budget) {}
    std::size_t budget() const { return budget_; }

private:
    std::size_t budget_;
};

class not_a_collection_error : public error {
public:
    not_a_collection_error(const std::string& what, int ai, int aj, int bi, int bj)
        : error(what), ai_(ai), aj_(aj), bi_(bi), bj_(bj) {}
    // endpoints of the offending pair of interval representations
    int first_i() const { return ai_; }
    int first_j() const { return aj_; }
    int second_i() const { return bi_; }
    int second_j() const { return bj_; }

private:
    int ai_, aj_, bi_, bj_;
};

class unsupported_orientation_error : public error {
public:
    using error::error;
};

class internal_invariant_error : public error {
public:
    using error::error;
};

class validation_error : public error {
public:
    using error::error;
};

} // namespace strandlab
