#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strandlab/intervals.hpp"
#include "strandlab/sign_vector.hpp"

namespace strandlab {

/// Dimensions of Hom(U,V) and Ext^1(U,V); both lie in {0,1} for interval
/// modules, and hom - ext always equals the Euler form of the pair.
struct HomExtProfile {
    int hom = 0;
    int ext = 0;

    bool operator==(const HomExtProfile&) const = default;
};

/// <x,y> = sum_i x_i y_i - sum_{arrows a} x_{s(a)} y_{t(a)} over the path
/// quiver selected by eps. Vectors are indexed by vertex 1..n.
long long euler_form(const std::vector<int>& x, const std::vector<int>& y, const SignVector& eps);

/// Closed-form Hom/Ext dimensions by endpoint case analysis.
HomExtProfile hom_ext(IntervalRep u, IntervalRep v, const SignVector& eps);

/// (U,V) is exceptional when Hom(V,U) = Ext^1(V,U) = 0.
bool is_exceptional_pair(IntervalRep u, IntervalRep v, const SignVector& eps);

using ExceptionalSequence = std::vector<IntervalRep>;

bool is_exceptional_sequence(const ExceptionalSequence& seq, const SignVector& eps);

struct SequenceLimits {
    int max_n = 7;
};

/// Streams every length-k exceptional sequence in lexicographic order (as
/// tuples of intervals ordered lexicographically).
void for_each_exceptional_sequence(const SignVector& eps, int k, const SequenceLimits& lim,
                                   const std::function<void(const ExceptionalSequence&)>& sink);

std::vector<ExceptionalSequence> enumerate_exceptional_sequences(const SignVector& eps, int k,
                                                                 const SequenceLimits& lim = {});

/// Orders a set of intervals into an exceptional sequence by repeatedly
/// selecting the lexicographically least interval that forms an exceptional
/// pair with everything still unplaced. Throws not_a_collection_error when
/// the set admits no such order.
ExceptionalSequence order_collection(std::vector<IntervalRep> collection, const SignVector& eps);

struct SpeyerThomasVerdict {
    bool ok = false;
    std::vector<int> sigma;   // 1-based positions into the row list
    std::string failure;
};

/// Searches for a row order sigma making (V_sigma(1),...,V_sigma(n)) a
/// complete exceptional sequence with all negative rows first, given that
/// Hom vanishes between same-sign rows. Rows must be +-interval vectors.
SpeyerThomasVerdict verify_speyer_thomas(const CMatrix& c, const SignVector& eps);

} // namespace strandlab
