#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strandlab/intervals.hpp"
#include "strandlab/rep_theory.hpp"
#include "strandlab/sign_vector.hpp"

namespace strandlab {

/// Unordered pair of marked points, stored with a < b.
struct Strand {
    int a = 0;
    int b = 1;

    auto operator<=>(const Strand&) const = default;
};

Strand make_strand(int a, int b);

inline Strand phi(IntervalRep r) { return Strand{r.i, r.j}; }
inline IntervalRep phi_inverse(Strand s) { return IntervalRep{s.a, s.b}; }

/// Whether two distinct strands are forced to cross. Depends only on the
/// signs at the two inner endpoints of interlaced or nested configurations.
bool crosses(Strand s1, Strand s2, const SignVector& eps);

/// Whether s1 is clockwise from s2 about their shared endpoint; false when
/// the strands do not share exactly one endpoint.
bool clockwise_from(Strand s1, Strand s2, const SignVector& eps);

struct Diagram {
    std::vector<Strand> strands; // sorted, unique
    SignVector eps;
};

struct DiagramViolation {
    enum class Kind { crossing, cycle } kind;
    Strand s1, s2;
    std::string describe() const;
};

/// Pairwise non-crossing plus forest check; reports the first offending pair.
std::optional<DiagramViolation> diagram_violation(const std::vector<Strand>& strands,
                                                  const SignVector& eps);

/// Throws validation_error on a violation, otherwise builds the diagram.
Diagram make_diagram(std::vector<Strand> strands, const SignVector& eps);

struct LabeledStrand {
    Strand s;
    int label = 1;

    auto operator<=>(const LabeledStrand&) const = default;
};

struct LabeledDiagram {
    std::vector<LabeledStrand> strands; // sorted by strand
    SignVector eps;
};

/// Labels must increase along the clockwise order at every point. Verifies
/// that the clockwise comparator totally orders each point's strands and
/// throws internal_invariant_error if it does not.
bool is_good_labeling(const LabeledDiagram& ld);

/// The sequence element at position l (1-based) receives label k+1-l.
LabeledDiagram phi_tilde(const ExceptionalSequence& seq, const SignVector& eps);

/// Reads labels in descending order; validates goodness first.
ExceptionalSequence phi_tilde_inverse(const LabeledDiagram& ld);

struct DiagramLimits {
    int max_n = 7;
};

void for_each_diagram(const SignVector& eps, int k, const DiagramLimits& lim,
                      const std::function<void(const Diagram&)>& sink);
void for_each_labeled_diagram(const SignVector& eps, int k, const DiagramLimits& lim,
                              const std::function<void(const LabeledDiagram&)>& sink);

std::vector<Diagram> enumerate_diagrams(const SignVector& eps, int k,
                                        const DiagramLimits& lim = {});
std::vector<LabeledDiagram> enumerate_labeled_diagrams(const SignVector& eps, int k,
                                                       const DiagramLimits& lim = {});

struct OrientedStrand {
    int from = 0;
    int to = 1;

    Strand underlying() const { return from < to ? Strand{from, to} : Strand{to, from}; }
    auto operator<=>(const OrientedStrand&) const = default;
};

struct OrientedDiagram {
    std::vector<OrientedStrand> strands; // sorted by underlying strand
    SignVector eps;
};

/// Membership in the oriented-diagram class corresponding to c-matrices:
/// n strands, valid underlying diagram, the local in/out side pattern at each
/// point, and exact height-feasibility of the orientation constraints.
bool is_in_D_arrow(const OrientedDiagram& od);

/// Positive rows orient left-to-right, negative rows right-to-left.
OrientedDiagram oriented_of_cmatrix(const CMatrix& c, const SignVector& eps);

/// One signed interval row per strand, rows in sorted-strand order.
CMatrix cmatrix_of_oriented(const OrientedDiagram& od);

/// All members of the c-matrix oriented-diagram class, in deterministic order.
void for_each_oriented_diagram(const SignVector& eps, const DiagramLimits& lim,
                               const std::function<void(const OrientedDiagram&)>& sink);
std::vector<OrientedDiagram> enumerate_oriented_diagrams(const SignVector& eps,
                                                         const DiagramLimits& lim = {});

} // namespace strandlab
