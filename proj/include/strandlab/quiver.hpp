#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandlab/intervals.hpp"
#include "strandlab/sign_vector.hpp"

namespace strandlab {

/// Integer exchange matrix of an ice quiver: n mutable rows, m columns where
/// columns n+1..m are frozen. Entry b(i,j) counts arrows i->j minus j->i.
/// Vertex arguments on the public surface are 1-based, matching mu_k.
class ExchangeMatrix {
public:
    ExchangeMatrix(int n, int m)
        : n_(n), m_(m), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0) {
        if (n < 1 || m < n) throw invalid_input_error("exchange matrix needs 1 <= n <= m");
    }

    int n() const { return n_; }
    int m() const { return m_; }

    int at(int row, int col) const { return a_[idx(row, col)]; }
    int& at(int row, int col) { return a_[idx(row, col)]; }

    bool mutable_block_skew() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    auto operator<=>(const ExchangeMatrix&) const = default;

private:
    std::size_t idx(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(m_) +
               static_cast<std::size_t>(col);
    }

    int n_;
    int m_;
    std::vector<int> a_;
};

/// Framed quiver of the type-A path selected by eps: n mutable vertices, one
/// frozen partner each, arrows i<->i+1 per the interior signs plus i -> n+i.
ExchangeMatrix framed_quiver(const SignVector& eps);

/// Same with the framing arrows reversed (n+i -> i).
ExchangeMatrix coframed_quiver(const SignVector& eps);

/// Matrix mutation at mutable vertex k (1-based). An involution.
ExchangeMatrix mutate(const ExchangeMatrix& b, int k);

/// mu_{ks.back()} o ... o mu_{ks.front()} applied to b.
ExchangeMatrix mutate_sequence(ExchangeMatrix b, const std::vector<int>& ks);

/// The frozen-column submatrix, rows in mutable-vertex index order.
CMatrix c_matrix(const ExchangeMatrix& b);

enum class VertexColor { green, red };

/// Green when no frozen vertex has an arrow into i (1-based, mutable).
VertexColor vertex_color(const ExchangeMatrix& b, int i);

/// Lexicographically minimal matrix over all simultaneous permutations of the
/// mutable rows and mutable columns; frozen columns stay in place. Two ice
/// quivers are frozen-isomorphic exactly when their canonical forms agree.
ExchangeMatrix canonical_form(const ExchangeMatrix& b);

struct ExplorationLimits {
    std::size_t max_nodes = 1'000'000;
    int max_n = 8;
};

struct ExchangeGraph {
    std::vector<ExchangeMatrix> states;          // canonical forms, sorted
    std::vector<std::pair<int, int>> edges;      // indices into states, a < b
};

/// Breadth-first closure of the framed quiver under mutation, one node per
/// frozen-isomorphism class, expanded in canonical lexicographic order.
ExchangeGraph explore_exchange_graph(const SignVector& eps, const ExplorationLimits& lim = {});

/// Distinct c-matrices over the exchange graph, each with rows sorted, the
/// set itself sorted.
std::vector<CMatrix> enumerate_c_matrices(const SignVector& eps, const ExplorationLimits& lim = {});

struct ReddeningVerdict {
    bool is_terminal = false;                    // every mutable vertex red
    bool consistent = true;                      // terminal state checks below hold
    std::optional<std::vector<int>> witness;     // row permutation with C = -I
    std::optional<int> counterexample_row;       // 1-based row breaking the pattern
    std::string detail;
};

/// When all mutable vertices of r are red, verifies that the c-matrix is -I up
/// to row permutation and that r is frozen-isomorphic to the coframed quiver.
/// Violations are reported in the verdict rather than thrown.
ReddeningVerdict check_reddening_terminal(const SignVector& eps, const ExchangeMatrix& r);

} // namespace strandlab
