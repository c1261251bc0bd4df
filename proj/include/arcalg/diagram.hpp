#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcalg {

enum class BlockSym : uint8_t { O, X, Star };
enum class WeightSym : uint8_t { O, X, Down, Up };  // Down = 'v', Up = '^'

struct RaysRequired : std::domain_error {
    explicit RaysRequired(const std::string& w) : std::domain_error(w) {}
};
struct OpenComponent : std::domain_error {
    explicit OpenComponent(const std::string& w) : std::domain_error(w) {}
};
struct InvalidPair : std::domain_error {
    explicit InvalidPair(const std::string& w) : std::domain_error(w) {}
};
struct BlockMismatch : std::domain_error {
    explicit BlockMismatch(const std::string& w) : std::domain_error(w) {}
};

// A block: symbols over {o, x, *} on integer positions, stored densely
// from `start`. Positions outside the stored window are o.
class Block {
public:
    Block() = default;
    Block(int start, std::vector<BlockSym> syms) : start_(start), syms_(std::move(syms)) { trim(); }

    // contiguous or whitespace-separated over the alphabet "ox*"
    static Block parse(const std::string& text, int start = 0);

    int start() const { return start_; }
    int end() const { return start_ + static_cast<int>(syms_.size()); }  // one past last stored
    BlockSym at(int i) const {
        if (i < start_ || i >= end()) return BlockSym::O;
        return syms_[i - start_];
    }
    const std::vector<BlockSym>& syms() const { return syms_; }

    std::vector<int> star_positions() const;
    int star_count() const { return static_cast<int>(star_positions().size()); }
    int x_count() const;

    // up/down counts of any weight in the block (x counts as both)
    int up() const { return star_count() / 2 + x_count(); }    // meaningful for balanced blocks
    bool balanced() const { return star_count() % 2 == 0; }

    // position statistic p(i): stars to the left count 1, x's count 2
    int p(int i) const;

    friend bool operator==(const Block& a, const Block& b);
    friend bool operator!=(const Block& a, const Block& b) { return !(a == b); }
    friend bool operator<(const Block& a, const Block& b);

    std::string to_string() const;

private:
    int start_ = 0;
    std::vector<BlockSym> syms_;
    void trim();
};

// A weight: symbols over {o, x, v, ^} refining a block positionwise.
class Weight {
public:
    Weight() = default;
    Weight(int start, std::vector<WeightSym> syms) : start_(start), syms_(std::move(syms)) { trim(); }

    static Weight parse(const std::string& text, int start = 0);

    int start() const { return start_; }
    int end() const { return start_ + static_cast<int>(syms_.size()); }
    WeightSym at(int i) const {
        if (i < start_ || i >= end()) return WeightSym::O;
        return syms_[i - start_];
    }

    Block block() const;
    bool matches(const Block& b) const { return block() == b; }

    void set(int i, WeightSym s);

    friend bool operator==(const Weight& a, const Weight& b);
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b);

    std::string to_string() const;

private:
    int start_ = 0;
    std::vector<WeightSym> syms_;
    void trim();
};

// A cup diagram on a block: a non-crossing perfect matching of the star
// positions (cup-only regime; rays are excluded).
class CupDiagram {
public:
    CupDiagram() = default;
    CupDiagram(Block block, std::vector<std::pair<int, int>> cups);

    const Block& block() const { return block_; }
    const std::vector<std::pair<int, int>>& cups() const { return cups_; }  // sorted by left endpoint

    friend bool operator==(const CupDiagram& a, const CupDiagram& b) {
        return a.block_ == b.block_ && a.cups_ == b.cups_;
    }
    friend bool operator!=(const CupDiagram& a, const CupDiagram& b) { return !(a == b); }
    friend bool operator<(const CupDiagram& a, const CupDiagram& b) {
        if (a.block_ != b.block_) return a.block_ < b.block_;
        return a.cups_ < b.cups_;
    }

    std::string to_string() const;

private:
    Block block_;
    std::vector<std::pair<int, int>> cups_;
};

using CapDiagram = CupDiagram;  // a cap diagram is the mirror image; same data

// underline construction: the unique cup-only diagram of a weight.
// Throws RaysRequired if symbols remain unmatched.
CupDiagram underline(const Weight& w);
// all cup-only weights of a block (empty when unbalanced), with their diagrams
std::vector<Weight> cup_weights(const Block& b);
// the weight lambda with underline(lambda) == c (all cups anticlockwise)
Weight minimal_weight(const CupDiagram& c);
// all non-crossing perfect matchings of the block's stars
std::vector<CupDiagram> cup_diagrams(const Block& b);

// One arc of a stacked diagram.
struct Arc {
    enum class Kind : uint8_t { Cup, Cap, Vertical, Shift };
    Kind kind;
    int line;  // Cup: attached below `line`; Cap: attached above `line`; Vertical/Shift: lower line
    int i, j;  // Cup/Cap: i<j positions on `line`; Vertical: i==j; Shift: i on `line`, j on `line`+1, |i-j|==1

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.kind == b.kind && a.line == b.line && a.i == b.i && a.j == b.j;
    }
};

struct Vertex {
    int line;
    int pos;
    friend bool operator==(const Vertex& a, const Vertex& b) { return a.line == b.line && a.pos == b.pos; }
    friend bool operator<(const Vertex& a, const Vertex& b) {
        if (a.line != b.line) return a.line < b.line;
        return a.pos < b.pos;
    }
};

// A connected component of a stacked diagram, traced as a closed cycle.
// verts[k] sits between arcs[k-1] and arcs[k] (cyclically).
struct Circle {
    std::vector<int> arcs;
    std::vector<Vertex> verts;

    Vertex min_vertex() const;
    Vertex rightmost_vertex() const;  // max position, ties to the higher line
};

// Stacked diagram: weight lines 0..n-1 with blocks, plus arcs. All star
// vertices must have exactly one arc attached from below and one from
// above (closed, cup-only regime).
class StackedDiagram {
public:
    StackedDiagram() = default;
    StackedDiagram(std::vector<Block> lines, std::vector<Arc> arcs);

    int line_count() const { return static_cast<int>(lines_.size()); }
    const Block& line(int k) const { return lines_.at(k); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int k) const { return arcs_.at(k); }

    // endpoints of an arc as vertices
    std::pair<Vertex, Vertex> endpoints(int arc_index) const;
    // distance statistic of an arc: |p(v1) - p(v2)| in the endpoint blocks; verticals are 0
    int arc_distance(int arc_index) const;
    int saddle_width(int arc_index) const;  // (d+1)/2, cups/caps only

    // p of a vertex in its own line's block
    int p(const Vertex& v) const { return lines_.at(v.line).p(v.pos); }

    // components in deterministic order (sorted by minimal vertex); throws
    // OpenComponent if some star vertex is not closed up
    const std::vector<Circle>& circles() const;

    int circle_of_arc(int arc_index) const;       // index into circles()
    int circle_of_vertex(const Vertex& v) const;  // index into circles()

    // total distance of a circle (sum over its arcs)
    int circle_distance(int circle_index) const;
    // t(C): p of the rightmost vertex
    int rightmost(int circle_index) const;

    // parity-stable arc-path distance from vertex a to vertex b along the circle
    int path_distance(int circle_index, const Vertex& a, const Vertex& b) const;

    // geometric predicate: is the probe point inside circle `ci`?
    bool is_inside(int circle_index, long long px_num, long long px_den, long long py_num, long long py_den) const;

    struct ArcClasses {
        std::vector<int> icup, icap, ecup, ecap;      // cups/caps by exterior side
        std::vector<int> eright, eleft, iright, ileft;  // star-over-x shift arcs
    };
    // classify the arcs of one circle (icup: exterior above the cup, etc.)
    ArcClasses classify(int circle_index) const;

    // is circle a entirely inside circle b?
    bool circle_inside(int a, int b) const;

    // structural edits (return a new diagram, caches rebuilt)
    StackedDiagram with_surgery(int cap_arc, int cup_arc) const;          // cup-cap pair -> verticals
    StackedDiagram with_reverse_surgery(int band, int i, int j) const;    // verticals -> cap+cup

    friend bool operator==(const StackedDiagram& a, const StackedDiagram& b);

    std::string to_string() const;

private:
    std::vector<Block> lines_;
    std::vector<Arc> arcs_;
    mutable std::vector<Circle> circles_;
    mutable std::vector<int> arc_circle_;
    mutable bool traced_ = false;

    void trace() const;
    int cup_nesting_depth(int arc_index) const;
    // exact geometry of an arc for ray casting, in quarters-of-units
    struct Geo;
    Geo geometry(int arc_index) const;
    bool probe_on_arc(int arc_index, long long pxn, long long pxd, long long pyn, long long pyd) const;
    bool probe_clear(long long pxn, long long pxd, long long pyn, long long pyd) const;
    bool crosses_upward(int arc_index, long long pxn, long long pxd, long long pyn, long long pyd) const;
    std::pair<std::pair<long long, long long>, std::pair<long long, long long>> probe_point(
        int arc_index, bool lower_side) const;

    friend class SurgeryEngine;
};

// Orientation of a stacked diagram: one bit per circle in circles() order;
// false = anticlockwise, true = clockwise.
using Orientation = std::vector<bool>;

// all 2^n orientations, circle 0 varying fastest
std::vector<Orientation> all_orientations(const StackedDiagram& d);

// the weight induced on each line by an orientation (o/x from the blocks,
// v/^ propagated around each circle from its rightmost vertex)
std::vector<Weight> orientation_weights(const StackedDiagram& d, const Orientation& orient);

// inverse of orientation_weights for diagrams whose weights are consistent;
// throws if some circle is inconsistently oriented by the weights
Orientation orientation_from_weights(const StackedDiagram& d, const std::vector<Weight>& weights);

// degree contribution: number of clockwise cups + clockwise caps of the
// oriented diagram (verticals and shifts contribute nothing)
int oriented_degree(const StackedDiagram& d, const Orientation& orient);

}  // namespace arcalg
