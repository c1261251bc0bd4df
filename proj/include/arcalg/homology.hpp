#pragma once

#include <map>

#include "arcalg/surgery.hpp"

namespace arcalg {

struct NotClosed : std::domain_error {
    explicit NotClosed(const std::string& w) : std::domain_error(w) {}
};
struct RingNotSupported : std::domain_error {
    explicit RingNotSupported(const std::string& w) : std::domain_error(w) {}
};

struct MorseToken {
    enum class Kind : uint8_t { Cup, Cap, PosCross, NegCross };
    Kind kind;
    int pos;  // acts on strand positions pos, pos+1
};

// A link presented by Morse tokens over fixed strand positions. Closed
// words start and end with no active strands.
class MorseWord {
public:
    MorseWord() = default;
    explicit MorseWord(std::vector<MorseToken> tokens);

    // whitespace-separated tokens: u<i> (cup), n<i> (cap), x+<i> / x-<i>
    static MorseWord parse(const std::string& text);
    // braid word (signed generator indices, 1-based) on `strands` strands,
    // plaited closure: u0 u2 ... braid ... n2 n0
    static MorseWord braid_closure(const std::vector<int>& braid, int strands);

    const std::vector<MorseToken>& tokens() const { return tokens_; }
    bool closed() const { return closed_; }
    int crossings() const { return crossings_; }
    int negative_crossings() const { return negatives_; }

    std::string to_string() const;

private:
    std::vector<MorseToken> tokens_;
    bool closed_ = false;
    int crossings_ = 0, negatives_ = 0;
};

// one vertex of the cube: the smoothed diagram plus its shifts
struct ResolvedDiagram {
    StackedDiagram diagram;
    int hom_offset = 0;  // -(number of negative crossings)
    int q_shift = 0;
    std::vector<int> crossing_band;  // band index per crossing, in token order
};

ResolvedDiagram resolve(const MorseWord& w, uint32_t resolution);

struct CubeGenerator {
    uint32_t resolution = 0;
    uint32_t orientation = 0;  // bit per circle, 1 = clockwise
    int h = 0;
    int q = 0;
};

// Khovanov-style cube: chain groups spanned by circle orientations, edge
// maps from the parameterized saddle rules, Koszul edge signs.
class CubeComplex {
public:
    int min_h = 0, max_h = 0;
    // generators grouped by homological degree (index h - min_h)
    std::vector<std::vector<CubeGenerator>> gens;
    // d[k]: matrix entries (row -> target index in gens[k+1]) for each source in gens[k]
    std::vector<std::map<std::pair<int, int>, AlphaPoly>> diff;

    int columns(int k) const { return static_cast<int>(gens.at(k).size()); }
    bool d_squared_zero() const;
    // graded Euler characteristic: map q -> signed count
    std::map<int, long long> euler() const;
};

CubeComplex build_cube(const MorseWord& w, const Specialization& spec);

// Repeatedly cancel invertible differential entries; homotopy equivalent
// complex. With over_field the cancellation also uses nonzero non-unit
// constants (fraction-free row scaling), preserving homology over the
// fraction field only.
CubeComplex gaussian_eliminate(const CubeComplex& c, bool over_field = false);

enum class CoeffRing { Q, Qi, Z, Zi };

struct HomologyResult {
    struct Group {
        long long free_rank = 0;
        std::vector<std::string> torsion;  // invariant factors rendered as text
        friend bool operator==(const Group& a, const Group& b) {
            return a.free_rank == b.free_rank && a.torsion == b.torsion;
        }
    };
    std::map<std::pair<int, int>, Group> groups;  // (h, q) -> group

    std::map<int, long long> euler() const;
    std::string to_string() const;
};

HomologyResult homology(const CubeComplex& c, CoeffRing ring);

}  // namespace arcalg
