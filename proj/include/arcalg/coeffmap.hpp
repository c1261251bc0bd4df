#pragma once

#include "arcalg/arcalg.hpp"
#include "arcalg/bimodule.hpp"

namespace arcalg {

// Which family of arc classes contributes to the coefficient of a circle.
//   Algebra : cups/caps pushing inwards (icup/icap)
//   Bimodule: additionally the star-over-x shift arcs seen from outside
//   Reverse : cups/caps seen from inside plus inner shift arcs
enum class CoeffKind { Algebra, Bimodule, Reverse };

// the coefficient of one circle; a unit +-omega^m eps^j, never involving alpha
SymbolicScalar circle_coeff(CoeffKind kind, const StackedDiagram& d, int circle, bool clockwise);

// product over all circles for a full orientation
SymbolicScalar diagram_coeff(CoeffKind kind, const StackedDiagram& d, const Orientation& orient);

// coefficient of a one-line basis diagram
SymbolicScalar basis_coeff(CoeffKind kind, const BasisDiagram& b);

// the coefficient map and its inverse on algebra elements (diagonal with
// unit scalars, hence invertible)
ArcElement coeff_map(CoeffKind kind, const ArcElement& x);
ArcElement coeff_map_inverse(CoeffKind kind, const ArcElement& x);

// Elements of a specialized algebra: basis diagrams with coefficients in
// the specialization's target. Multiplication specializes the generic
// structure constants.
class SpecElement {
public:
    SpecElement() = default;
    void add(BasisDiagram b, AlphaPoly c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisDiagram, AlphaPoly>& terms() const { return terms_; }
    friend bool operator==(const SpecElement& a, const SpecElement& b) { return a.terms_ == b.terms_; }
    friend SpecElement operator+(const SpecElement& a, const SpecElement& b);
    std::string to_string() const;

private:
    std::map<BasisDiagram, AlphaPoly> terms_;
};

SpecElement specialize(const Specialization& s, const ArcElement& x);
SpecElement spec_mult(const Specialization& s, const SpecElement& x, const SpecElement& y);

// the per-basis unit scalar of Iso = coeff^{target} o (coeff^{source})^{-1}
AlphaPoly iso_factor(const Specialization& source, const Specialization& target, CoeffKind kind,
                     const BasisDiagram& b);
SpecElement iso_map(const Specialization& source, const Specialization& target, CoeffKind kind,
                    const ArcElement& x);

// Exhaustive verification that the coefficient map intertwines the generic
// multiplication with the parameter-free one, stepwise through every
// surgery of every basis product over the given blocks. `corrupt_saddle`
// flips one sign to prove the check can fail.
struct IntertwineReport {
    bool ok = true;
    long long steps_checked = 0;
    std::string failure;  // human-readable description of the first failure
};

// `parallel` distributes the basis pairs over OpenMP workers; the serial
// path is the reference the tests pin down.
IntertwineReport check_intertwine_algebra(const std::vector<Block>& scope, bool corrupt_saddle = false,
                                          bool parallel = false);

// chi factorization: reverse coefficient = plain coefficient * chi, with
// chi computable from cup counts or from cap counts
bool check_chi_factorization(const StackedDiagram& d, std::string* failure = nullptr);

// all pairwise basis products of a block, serial or OpenMP over pairs;
// both paths must agree (benchmarked against each other)
std::vector<ArcElement> mult_table(const Block& b, bool parallel);

// the coefficient of a bimodule basis element (all circles of its diagram)
SymbolicScalar bimod_coeff(CoeffKind kind, const CompositeMatching& m, const BimodBasis& b);

// termwise check that the bimodule coefficient map intertwines the
// parameter-free left action with the generic one
IntertwineReport check_intertwine_bimodule(const CompositeMatching& m);

// stepwise check of the reverse-surgery square: the reverse coefficient of
// the refined diagram equals the original one times the unit part of the
// step scalar, for every site and orientation
IntertwineReport check_intertwine_reverse(const CompositeMatching& m);

}  // namespace arcalg
