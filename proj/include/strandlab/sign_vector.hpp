#pragma once

#include <string>
#include <vector>

#include "strandlab/errors.hpp"

namespace strandlab {

/// Sign vector (eps_0, ..., eps_n) over {+,-} selecting the orientation of a
/// type-A path quiver and the geometry of its strand models. Point i carries
/// sign eps_i; only the interior signs eps_1..eps_{n-1} affect the quiver.
class SignVector {
public:
    explicit SignVector(std::string signs) : signs_(std::move(signs)) {
        if (signs_.size() < 2)
            throw invalid_input_error("sign vector needs length >= 2, got \"" + signs_ + "\"");
        for (char c : signs_)
            if (c != '+' && c != '-')
                throw invalid_input_error("sign vector must match [+-]+, got \"" + signs_ + "\"");
    }

    static SignVector constant(int n, char sign = '-') {
        if (n < 1)
            throw invalid_input_error("sign vector needs n >= 1");
        return SignVector(std::string(static_cast<std::size_t>(n) + 1, sign));
    }

    int n() const { return static_cast<int>(signs_.size()) - 1; }
    int points() const { return static_cast<int>(signs_.size()); }

    char at(int i) const { return signs_.at(static_cast<std::size_t>(i)); }
    bool is_plus(int i) const { return at(i) == '+'; }
    bool is_minus(int i) const { return at(i) == '-'; }

    bool is_constant() const {
        return signs_.find_first_not_of(signs_[0]) == std::string::npos;
    }

    const std::string& str() const { return signs_; }

    bool operator==(const SignVector& o) const { return signs_ == o.signs_; }
    bool operator!=(const SignVector& o) const { return signs_ != o.signs_; }

    /// All 2^(n+1) sign vectors of a given n, in lexicographic '+' < '-' order.
    static std::vector<SignVector> all(int n);

private:
    std::string signs_;
};

inline std::vector<SignVector> SignVector::all(int n) {
    std::vector<SignVector> out;
    const int len = n + 1;
    for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
        std::string s(static_cast<std::size_t>(len), '+');
        for (int i = 0; i < len; ++i)
            if (mask & (1ul << i)) s[static_cast<std::size_t>(i)] = '-';
        out.emplace_back(std::move(s));
    }
    return out;
}

} // namespace strandlab
