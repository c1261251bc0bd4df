#pragma once

#include <map>

#include "arcalg/surgery.hpp"

namespace arcalg {

// Oriented circle diagram: cup diagram, middle weight, cap diagram over one
// block. The cap diagram is stored by its mirror image (same pair data).
class BasisDiagram {
public:
    BasisDiagram() = default;
    BasisDiagram(CupDiagram cup, Weight mid, CapDiagram cap);

    const Block& block() const { return cup_.block(); }
    const CupDiagram& cup() const { return cup_; }
    const Weight& mid() const { return mid_; }
    const CapDiagram& cap() const { return cap_; }
    int degree() const { return degree_; }

    // the 1-line stacked diagram (cups below, caps above the line)
    StackedDiagram diagram() const;
    Orientation orientation(const StackedDiagram& d) const { return orientation_from_weights(d, {mid_}); }

    friend bool operator==(const BasisDiagram& a, const BasisDiagram& b) {
        return a.cup_ == b.cup_ && a.mid_ == b.mid_ && a.cap_ == b.cap_;
    }
    friend bool operator<(const BasisDiagram& a, const BasisDiagram& b) {
        if (!(a.cup_ == b.cup_)) return a.cup_ < b.cup_;
        if (!(a.cap_ == b.cap_)) return a.cap_ < b.cap_;
        return a.mid_ < b.mid_;
    }

    std::string to_string() const;

private:
    CupDiagram cup_;
    Weight mid_;
    CapDiagram cap_;
    int degree_ = 0;
};

// Finite linear combination of basis diagrams over the universal ring.
class ArcElement {
public:
    ArcElement() = default;
    ArcElement(BasisDiagram b, SymbolicScalar s = SymbolicScalar::one()) { add(std::move(b), std::move(s)); }

    void add(BasisDiagram b, SymbolicScalar s);
    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisDiagram, SymbolicScalar>& terms() const { return terms_; }

    friend ArcElement operator+(const ArcElement& x, const ArcElement& y);
    friend ArcElement operator-(const ArcElement& x, const ArcElement& y);
    ArcElement scaled(const SymbolicScalar& s) const;
    friend bool operator==(const ArcElement& x, const ArcElement& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const ArcElement& x, const ArcElement& y) { return !(x == y); }

    std::string to_string() const;

private:
    std::map<BasisDiagram, SymbolicScalar> terms_;
};

// all basis diagrams of a block, deterministic order; empty when unbalanced
std::vector<BasisDiagram> basis(const Block& b);

ArcElement idempotent(const Weight& lambda);  // lambda must be a cup-only weight
ArcElement unit(const Block& b);              // sum of all idempotents

// the surgery product; bilinear over the basis
ArcElement mult(const ArcElement& x, const ArcElement& y);
ArcElement mult_basis(const BasisDiagram& x, const BasisDiagram& y);

// per-step trace of one basis product (for tests and the intertwining checks):
// the sequence of stacked diagrams D_0, ..., D_l together with the branch
// scalars at each step
struct MultTrace {
    std::vector<StackedDiagram> diagrams;
    std::vector<std::vector<std::pair<Orientation, SymbolicScalar>>> branch_history;
};
MultTrace mult_trace(const BasisDiagram& x, const BasisDiagram& y);

}  // namespace arcalg
