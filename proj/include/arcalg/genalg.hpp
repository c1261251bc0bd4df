#pragma once

#include "arcalg/coeffmap.hpp"

namespace arcalg {

struct MTooSmall : std::domain_error {
    explicit MTooSmall(const std::string& w) : std::domain_error(w) {}
};
struct AlphaNotZero : std::domain_error {
    explicit AlphaNotZero(const std::string& w) : std::domain_error(w) {}
};

// m-closure data of a (possibly unbalanced) base block. The base is given
// by its symbol sequence plus the number of up arrows its weights carry.
struct HullData {
    Block base;
    int base_up = 0;    // number of ^ among the base stars
    int m = 0;
    Block hull;                  // balanced block of the closures
    std::vector<Weight> closure;  // cl_m(lambda) for every weight of the base
};

// all weights of a base block with a prescribed number of up arrows
std::vector<Weight> block_weights(const Block& base, int ups);

HullData m_hull(const Block& base, int base_up, int m);
// convenience for balanced bases: ups = stars/2
HullData m_hull(const Block& base, int m);

// basis diagrams of the idempotent-truncated hull algebra with middle
// weight outside the closure; α must be specialized to 0 for this span to
// be an ideal
std::vector<BasisDiagram> ideal_basis(const HullData& h);
// basis of the quotient: closure cup/cap with closure middle weight
std::vector<BasisDiagram> quotient_basis(const HullData& h);

// multiplication in the generalized algebra: hull product at alpha = 0,
// ideal terms dropped
ArcElement quotient_mult(const HullData& h, const ArcElement& x, const ArcElement& y);

// x * i and i * x stay in the ideal for subalgebra x, ideal i (checked
// exhaustively); returns false with a description on failure. With
// alpha_zero = false the alpha terms are kept and the span fails to close.
bool check_ideal_closure(const HullData& h, std::string* failure = nullptr, bool alpha_zero = true);

struct Quiver {
    std::vector<Weight> vertices;                       // closure weights (idempotents)
    std::vector<BasisDiagram> arrows;                   // degree-1 quotient basis elements
    // relations: for each composable arrow pair (a, b) the product a∘b in
    // the quotient basis
    struct Relation {
        size_t left, right;  // indices into arrows; composition arrows[left] * arrows[right]
        ArcElement value;
    };
    std::vector<Relation> relations;
};

Quiver quiver(const HullData& h);

}  // namespace arcalg
