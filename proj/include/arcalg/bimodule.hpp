#pragma once

#include "arcalg/arcalg.hpp"

namespace arcalg {

struct InvalidSite : std::domain_error {
    explicit InvalidSite(const std::string& w) : std::domain_error(w) {}
};

// One local move of a matching layer. Shifts move a star by one column;
// cups create a star pair on the target line, caps consume one on the
// source line. Cup/cap spans may be wide when o/x columns sit in between
// (reverse surgeries produce these).
struct MatchArc {
    enum class Kind : uint8_t { ShiftRight, ShiftLeft, Cup, Cap };
    Kind kind;
    int i, j;  // shifts: j == i+1, star at i (right) or j (left) on the source; cup/cap: span i < j

    friend bool operator==(const MatchArc& a, const MatchArc& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const MatchArc& a, const MatchArc& b) {
        return std::tuple(a.i, a.j, static_cast<int>(a.kind)) < std::tuple(b.i, b.j, static_cast<int>(b.kind));
    }
};

// A matching layer between two blocks: the listed moves plus vertical
// strands at every other shared star.
class Matching {
public:
    Matching() = default;
    Matching(Block source, Block target, std::vector<MatchArc> moves);

    // basic moves: sign +1 moves a star rightwards (shapes 1,2), creates a
    // cup over o-x (shape 3) or caps a star pair to x-o (shape 4); sign -1
    // is the mirror image
    static Matching basic(const Block& source, int sign, int i, int shape);
    static Matching identity(const Block& b) { return Matching(b, b, {}); }

    const Block& source() const { return source_; }
    const Block& target() const { return target_; }
    const std::vector<MatchArc>& moves() const { return moves_; }
    const std::vector<int>& verticals() const { return verticals_; }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.moves_ == b.moves_;
    }

    std::string to_string() const;

private:
    Block source_, target_;
    std::vector<MatchArc> moves_;
    std::vector<int> verticals_;  // derived: columns carrying a vertical strand
    void validate();
};

class CompositeMatching {
public:
    CompositeMatching() = default;
    explicit CompositeMatching(Block single) : blocks_{std::move(single)} {}
    CompositeMatching(std::vector<Block> blocks, std::vector<Matching> layers);

    int layer_count() const { return static_cast<int>(layers_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& bottom() const { return blocks_.front(); }
    const Block& top() const { return blocks_.back(); }
    const Matching& layer(int k) const { return layers_.at(k); }

    // degree shift -(up + down); independent of the layer by balance
    int degree_shift() const;

    friend bool operator==(const CompositeMatching& a, const CompositeMatching& b) {
        return a.blocks_ == b.blocks_ && a.layers_ == b.layers_;
    }

    std::string to_string() const;

private:
    std::vector<Block> blocks_;
    std::vector<Matching> layers_;
};

// Basis element of an arc bimodule: bottom cup diagram, one weight per
// line, top cap diagram. `degree` is the raw clockwise count; callers add
// the composite matching's degree_shift when they need shifted degrees.
class BimodBasis {
public:
    BimodBasis() = default;
    BimodBasis(const CompositeMatching& m, CupDiagram cup, std::vector<Weight> mids, CapDiagram cap);

    const CupDiagram& cup() const { return cup_; }
    const CapDiagram& cap() const { return cap_; }
    const std::vector<Weight>& mids() const { return mids_; }
    int degree() const { return degree_; }

    StackedDiagram diagram(const CompositeMatching& m) const;

    friend bool operator==(const BimodBasis& a, const BimodBasis& b) {
        return a.cup_ == b.cup_ && a.mids_ == b.mids_ && a.cap_ == b.cap_;
    }
    friend bool operator<(const BimodBasis& a, const BimodBasis& b) {
        if (!(a.cup_ == b.cup_)) return a.cup_ < b.cup_;
        if (!(a.cap_ == b.cap_)) return a.cap_ < b.cap_;
        return a.mids_ < b.mids_;
    }

    std::string to_string() const;

private:
    CupDiagram cup_;
    std::vector<Weight> mids_;
    CapDiagram cap_;
    int degree_ = 0;
};

class BimodElement {
public:
    BimodElement() = default;
    BimodElement(BimodBasis b, SymbolicScalar s = SymbolicScalar::one()) { add(std::move(b), std::move(s)); }
    void add(BimodBasis b, SymbolicScalar s);
    bool is_zero() const { return terms_.empty(); }
    const std::map<BimodBasis, SymbolicScalar>& terms() const { return terms_; }
    friend BimodElement operator+(const BimodElement& x, const BimodElement& y);
    friend BimodElement operator-(const BimodElement& x, const BimodElement& y);
    BimodElement scaled(const SymbolicScalar& s) const;
    friend bool operator==(const BimodElement& x, const BimodElement& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const BimodElement& x, const BimodElement& y) { return !(x == y); }
    std::string to_string() const;

private:
    std::map<BimodBasis, SymbolicScalar> terms_;
};

// the stacked diagram of a composite matching decorated by cup/cap diagrams
StackedDiagram matching_diagram(const CompositeMatching& m, const CupDiagram& cup, const CapDiagram& cap);

std::vector<BimodBasis> bimodule_basis(const CompositeMatching& m);

BimodElement act_left(const ArcElement& a, const CompositeMatching& m, const BimodElement& x);
BimodElement act_right(const CompositeMatching& m, const BimodElement& x, const ArcElement& a);

// Reverse surgery at two neighboring verticals of one layer (only o/x
// columns in between). Returns the refined composite matching and the
// linear map applied to an element.
struct ReverseSurgeryResult {
    CompositeMatching matching;
    BimodElement element;
};
ReverseSurgeryResult rmult(const CompositeMatching& m, int layer, int col_a, int col_b, const BimodElement& x);

// enumerate the admissible rmult sites of a composite matching
std::vector<std::tuple<int, int, int>> rmult_sites(const CompositeMatching& m);

}  // namespace arcalg
