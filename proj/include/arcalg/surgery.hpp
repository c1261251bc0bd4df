#pragma once

#include "arcalg/diagram.hpp"
#include "arcalg/ring.hpp"

namespace arcalg {

struct CShapeUnsupported : std::domain_error {
    explicit CShapeUnsupported(const std::string& w) : std::domain_error(w) {}
};

enum class SurgeryShape { NonNestedMerge, NestedMerge, NonNestedSplit, NestedSplit };

std::string to_string(SurgeryShape s);

// Coefficient conventions. Algebra surgeries name the split circles by the
// column they contain; reverse surgeries name them bottom/top and pay an
// extra sign for nested merges.
struct SurgeryRules {
    bool nested_merge_extra_eps = false;          // reverse-direction nested merge
    enum class SplitNaming { Column, BottomTop } split_naming = SplitNaming::Column;

    static SurgeryRules algebra() { return {false, SplitNaming::Column}; }
    static SurgeryRules reverse() { return {true, SplitNaming::BottomTop}; }
    // cube edge maps: merges as in the algebra, splits as in the reverse surgery
    static SurgeryRules cube() { return {false, SplitNaming::BottomTop}; }
};

struct SurgeryClassification {
    SurgeryShape shape;
    // merge: the two input circle indices (in the input diagram);
    // split: the two output circle indices (in the result diagram),
    // ordered (C_i, C_j) / (C_bot, C_top) / (C_in, C_out) for nested
    int first = -1, second = -1;
};

struct SurgeryStep {
    StackedDiagram result;
    SurgeryClassification cls;
    // per input orientation handled separately; branches share `result`
    std::vector<std::pair<Orientation, SymbolicScalar>> branches;
};

// Forward surgery: cut the cap/cup pair, stitch verticals. `orient` is an
// orientation of `d`; the branches are orientations of the result.
SurgeryStep surgery_step(const StackedDiagram& d, const Orientation& orient, int cap_arc, int cup_arc,
                         const SurgeryRules& rules = SurgeryRules::algebra());

// Reverse surgery: replace the verticals of `band` at columns i and j by a
// cap/cup pair.
SurgeryStep reverse_surgery_step(const StackedDiagram& d, const Orientation& orient, int band, int i, int j,
                                 const SurgeryRules& rules = SurgeryRules::reverse());

// classification only (no coefficients); forward direction
SurgeryClassification classify_surgery(const StackedDiagram& d, int cap_arc, int cup_arc);

// The symmetric cap/cup pairs of a band, as (cap_arc, cup_arc), sorted by
// left endpoint. Only outermost pairs are available for surgery.
std::vector<std::pair<int, int>> surgery_pairs(const StackedDiagram& d, int band);
// leftmost available pair: not nested inside any other remaining pair
std::pair<int, int> leftmost_available_pair(const StackedDiagram& d, int band);

}  // namespace arcalg
