#include "strandlab/rep_theory.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace strandlab {

long long euler_form(const std::vector<int>& x, const std::vector<int>& y, const SignVector& eps) {
    const int n = eps.n();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw invalid_input_error("euler form needs two vectors of length n");
    long long s = 0;
    for (int v = 0; v < n; ++v) s += static_cast<long long>(x[static_cast<std::size_t>(v)]) *
                                     y[static_cast<std::size_t>(v)];
    for (int i = 1; i < n; ++i) {
        // arrow between vertices i and i+1 (0-based entries i-1 and i)
        if (eps.is_plus(i))
            s -= static_cast<long long>(x[static_cast<std::size_t>(i - 1)]) *
                 y[static_cast<std::size_t>(i)];
        else
            s -= static_cast<long long>(x[static_cast<std::size_t>(i)]) *
                 y[static_cast<std::size_t>(i - 1)];
    }
    return s;
}

namespace {

void require_valid(IntervalRep r, const SignVector& eps) {
    if (!(0 <= r.i && r.i < r.j && r.j <= eps.n()))
        throw invalid_input_error("interval (" + std::to_string(r.i) + "," +
                                  std::to_string(r.j) + ") out of range for n=" +
                                  std::to_string(eps.n()));
}

int hom_dim(IntervalRep u, IntervalRep v, const SignVector& e) {
    const auto [i, j] = u;
    const auto [k, l] = v;
    if (u == v) return 1;
    if (i == k) return (j < l ? e.is_minus(j) : e.is_plus(l)) ? 1 : 0;
    if (j == l) return (i > k ? e.is_plus(i) : e.is_minus(k)) ? 1 : 0;
    if (j == k || l == i) return 0;          // touching at one point
    if (j < k || l < i) return 0;            // separated
    if (i < k && k < j && j < l) return e.is_minus(k) && e.is_minus(j) ? 1 : 0;
    if (k < i && i < l && l < j) return e.is_plus(i) && e.is_plus(l) ? 1 : 0;
    if (i < k && l < j) return e.is_minus(k) && e.is_plus(l) ? 1 : 0;   // v nested in u
    if (k < i && j < l) return e.is_plus(i) && e.is_minus(j) ? 1 : 0;   // u nested in v
    throw internal_invariant_error("unreachable interval configuration");
}

int ext_dim(IntervalRep u, IntervalRep v, const SignVector& e) {
    const auto [i, j] = u;
    const auto [k, l] = v;
    if (u == v || i == k || j == l) return 0;
    if (j == k) return e.is_plus(j) ? 1 : 0;  // u ends where v starts
    if (l == i) return e.is_minus(i) ? 1 : 0; // v ends where u starts
    if (j < k || l < i) return 0;
    if (i < k && k < j && j < l) return e.is_plus(k) && e.is_plus(j) ? 1 : 0;
    if (k < i && i < l && l < j) return e.is_minus(i) && e.is_minus(l) ? 1 : 0;
    if (i < k && l < j) return e.is_plus(k) && e.is_minus(l) ? 1 : 0;
    if (k < i && j < l) return e.is_minus(i) && e.is_plus(j) ? 1 : 0;
    throw internal_invariant_error("unreachable interval configuration");
}

} // namespace

HomExtProfile hom_ext(IntervalRep u, IntervalRep v, const SignVector& eps) {
    require_valid(u, eps);
    require_valid(v, eps);
    HomExtProfile p{hom_dim(u, v, eps), ext_dim(u, v, eps)};
    // the case tables must reproduce the Euler form
    long long lhs = p.hom - p.ext;
    long long rhs = euler_form(dimension_vector(u, eps.n()), dimension_vector(v, eps.n()), eps);
    if (lhs != rhs)
        throw internal_invariant_error("hom - ext disagrees with the Euler form");
    return p;
}

bool is_exceptional_pair(IntervalRep u, IntervalRep v, const SignVector& eps) {
    HomExtProfile back = hom_ext(v, u, eps);
    return back.hom == 0 && back.ext == 0;
}

bool is_exceptional_sequence(const ExceptionalSequence& seq, const SignVector& eps) {
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (!is_exceptional_pair(seq[a], seq[b], eps)) return false;
    return true;
}

void for_each_exceptional_sequence(const SignVector& eps, int k, const SequenceLimits& lim,
                                   const std::function<void(const ExceptionalSequence&)>& sink) {
    const int n = eps.n();
    if (k < 1 || k > n) throw invalid_input_error("sequence length k must lie in [1..n]");
    if (n > lim.max_n)
        throw resource_limit_error("exceptional sequence enumeration limited to n <= " +
                                       std::to_string(lim.max_n),
                                   static_cast<std::size_t>(lim.max_n));
    const std::vector<IntervalRep> ivs = all_intervals(n);
    ExceptionalSequence cur;
    auto grow = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            sink(cur);
            return;
        }
        for (IntervalRep w : ivs) {
            if (std::find(cur.begin(), cur.end(), w) != cur.end()) continue;
            bool ok = true;
            for (IntervalRep u : cur)
                if (!is_exceptional_pair(u, w, eps)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(w);
            self(self);
            cur.pop_back();
        }
    };
    grow(grow);
}

std::vector<ExceptionalSequence> enumerate_exceptional_sequences(const SignVector& eps, int k,
                                                                 const SequenceLimits& lim) {
    std::vector<ExceptionalSequence> out;
    for_each_exceptional_sequence(eps, k, lim,
                                  [&](const ExceptionalSequence& s) { out.push_back(s); });
    return out;
}

ExceptionalSequence order_collection(std::vector<IntervalRep> collection, const SignVector& eps) {
    std::sort(collection.begin(), collection.end());
    collection.erase(std::unique(collection.begin(), collection.end()), collection.end());
    for (std::size_t a = 0; a < collection.size(); ++a)
        for (std::size_t b = a + 1; b < collection.size(); ++b) {
            IntervalRep u = collection[a], v = collection[b];
            if (!is_exceptional_pair(u, v, eps) && !is_exceptional_pair(v, u, eps))
                throw not_a_collection_error("pair admits no exceptional order", u.i, u.j, v.i,
                                             v.j);
        }
    ExceptionalSequence seq;
    std::vector<IntervalRep> rest = collection;
    while (!rest.empty()) {
        bool placed = false;
        for (std::size_t c = 0; c < rest.size(); ++c) {
            bool head = true;
            for (std::size_t o = 0; o < rest.size(); ++o) {
                if (o == c) continue;
                if (!is_exceptional_pair(rest[c], rest[o], eps)) {
                    head = false;
                    break;
                }
            }
            if (head) {
                seq.push_back(rest[c]);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c));
                placed = true;
                break;
            }
        }
        if (!placed) {
            IntervalRep u = rest[0], v = rest[1];
            throw not_a_collection_error("set admits no exceptional order (cyclic obstruction)",
                                         u.i, u.j, v.i, v.j);
        }
    }
    return seq;
}

SpeyerThomasVerdict verify_speyer_thomas(const CMatrix& c, const SignVector& eps) {
    const int n = eps.n();
    if (static_cast<int>(c.size()) != n)
        throw invalid_input_error("c-matrix must have n rows");
    std::vector<IntervalRep> reps;
    std::vector<int> signs;
    for (const auto& row : c) {
        auto iv = interval_of_row(row);
        if (!iv)
            throw invalid_input_error("c-matrix row is not a signed interval vector");
        reps.push_back(iv->first);
        signs.push_back(iv->second);
    }
    SpeyerThomasVerdict v;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || signs[static_cast<std::size_t>(a)] != signs[static_cast<std::size_t>(b)])
                continue;
            if (hom_ext(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)], eps)
                    .hom != 0) {
                v.failure = "Hom does not vanish between same-sign rows " + std::to_string(a + 1) +
                            " and " + std::to_string(b + 1);
                return v;
            }
        }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        bool seen_positive = false;
        bool monotone = true;
        for (int idx : order) {
            bool pos = signs[static_cast<std::size_t>(idx)] > 0;
            if (pos) seen_positive = true;
            else if (seen_positive) {
                monotone = false;
                break;
            }
        }
        if (!monotone) continue;
        ExceptionalSequence seq;
        for (int idx : order) seq.push_back(reps[static_cast<std::size_t>(idx)]);
        if (is_exceptional_sequence(seq, eps)) {
            v.ok = true;
            for (int idx : order) v.sigma.push_back(idx + 1);
            return v;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    v.failure = "no ordering forms a complete exceptional sequence";
    return v;
}

} // namespace strandlab
