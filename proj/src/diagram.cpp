#include "arcalg/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace arcalg {

namespace {

// small exact fraction for the planar geometry; values stay tiny
struct Frac {
    long long n = 0, d = 1;
    Frac() = default;
    Frac(long long nn, long long dd = 1) : n(nn), d(dd) { norm(); }
    void norm() {
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
    friend Frac operator+(const Frac& a, const Frac& b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
    friend Frac operator-(const Frac& a, const Frac& b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.n * b.n, a.d * b.d); }
    friend bool operator<(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator==(const Frac& a, const Frac& b) { return a.n == b.n && a.d == b.d; }
    bool is_integer() const { return d == 1; }
};

BlockSym block_sym_of(char c) {
    switch (c) {
        case 'o': return BlockSym::O;
        case 'x': return BlockSym::X;
        case '*': return BlockSym::Star;
        default: throw std::invalid_argument(std::string("bad block symbol '") + c + "'");
    }
}

WeightSym weight_sym_of(char c) {
    switch (c) {
        case 'o': return WeightSym::O;
        case 'x': return WeightSym::X;
        case 'v': return WeightSym::Down;
        case '^': return WeightSym::Up;
        default: throw std::invalid_argument(std::string("bad weight symbol '") + c + "'");
    }
}

}  // namespace

// ---------------------------------------------------------------- Block

Block Block::parse(const std::string& text, int start) {
    std::vector<BlockSym> syms;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        syms.push_back(block_sym_of(c));
    }
    return Block(start, std::move(syms));
}

void Block::trim() {
    size_t lead = 0;
    while (lead < syms_.size() && syms_[lead] == BlockSym::O) ++lead;
    if (lead == syms_.size()) { syms_.clear(); start_ = 0; return; }
    size_t tail = syms_.size();
    while (tail > 0 && syms_[tail - 1] == BlockSym::O) --tail;
    syms_ = std::vector<BlockSym>(syms_.begin() + lead, syms_.begin() + tail);
    start_ += static_cast<int>(lead);
}

std::vector<int> Block::star_positions() const {
    std::vector<int> r;
    for (int i = start_; i < end(); ++i)
        if (at(i) == BlockSym::Star) r.push_back(i);
    return r;
}

int Block::x_count() const {
    int n = 0;
    for (auto s : syms_)
        if (s == BlockSym::X) ++n;
    return n;
}

int Block::p(int i) const {
    int acc = 0;
    for (int k = start_; k < i && k < end(); ++k) {
        if (syms_[k - start_] == BlockSym::Star) acc += 1;
        else if (syms_[k - start_] == BlockSym::X) acc += 2;
    }
    return acc;
}

bool operator==(const Block& a, const Block& b) { return a.start_ == b.start_ && a.syms_ == b.syms_; }
bool operator<(const Block& a, const Block& b) {
    if (a.start_ != b.start_) return a.start_ < b.start_;
    return a.syms_ < b.syms_;
}

std::string Block::to_string() const {
    std::string s;
    for (auto b : syms_) s.push_back(b == BlockSym::O ? 'o' : b == BlockSym::X ? 'x' : '*');
    return s.empty() ? "(empty)" : s;
}

// ---------------------------------------------------------------- Weight

Weight Weight::parse(const std::string& text, int start) {
    std::vector<WeightSym> syms;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        syms.push_back(weight_sym_of(c));
    }
    return Weight(start, std::move(syms));
}

void Weight::trim() {
    size_t lead = 0;
    while (lead < syms_.size() && syms_[lead] == WeightSym::O) ++lead;
    if (lead == syms_.size()) { syms_.clear(); start_ = 0; return; }
    size_t tail = syms_.size();
    while (tail > 0 && syms_[tail - 1] == WeightSym::O) --tail;
    syms_ = std::vector<WeightSym>(syms_.begin() + lead, syms_.begin() + tail);
    start_ += static_cast<int>(lead);
}

Block Weight::block() const {
    std::vector<BlockSym> syms;
    syms.reserve(syms_.size());
    for (auto s : syms_) {
        switch (s) {
            case WeightSym::O: syms.push_back(BlockSym::O); break;
            case WeightSym::X: syms.push_back(BlockSym::X); break;
            default: syms.push_back(BlockSym::Star); break;
        }
    }
    return Block(start_, std::move(syms));
}

void Weight::set(int i, WeightSym s) {
    if (i < start_) {
        syms_.insert(syms_.begin(), start_ - i, WeightSym::O);
        start_ = i;
    }
    if (i >= end()) syms_.resize(i - start_ + 1, WeightSym::O);
    syms_[i - start_] = s;
}

bool operator==(const Weight& a, const Weight& b) { return a.start_ == b.start_ && a.syms_ == b.syms_; }
bool operator<(const Weight& a, const Weight& b) {
    if (a.start_ != b.start_) return a.start_ < b.start_;
    return a.syms_ < b.syms_;
}

std::string Weight::to_string() const {
    std::string s;
    for (auto w : syms_)
        s.push_back(w == WeightSym::O ? 'o' : w == WeightSym::X ? 'x' : w == WeightSym::Down ? 'v' : '^');
    return s.empty() ? "(empty)" : s;
}

// ----------------------------------------------------------- CupDiagram

CupDiagram::CupDiagram(Block block, std::vector<std::pair<int, int>> cups)
    : block_(std::move(block)), cups_(std::move(cups)) {
    for (auto& [i, j] : cups_) {
        if (i >= j) throw std::invalid_argument("cup endpoints must satisfy i < j");
        if (block_.at(i) != BlockSym::Star || block_.at(j) != BlockSym::Star)
            throw std::invalid_argument("cup endpoints must sit on stars");
    }
    std::sort(cups_.begin(), cups_.end());
    // pairwise non-crossing, every star used exactly once
    std::vector<int> stars = block_.star_positions();
    std::vector<int> used;
    for (size_t a = 0; a < cups_.size(); ++a) {
        used.push_back(cups_[a].first);
        used.push_back(cups_[a].second);
        for (size_t b = a + 1; b < cups_.size(); ++b) {
            auto [i, j] = cups_[a];
            auto [k, l] = cups_[b];
            bool crossing = (i < k && k < j && j < l) || (k < i && i < l && l < j);
            if (crossing) throw std::invalid_argument("cups must be non-crossing");
        }
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        throw std::invalid_argument("star used by two cups");
    if (used != stars) throw std::invalid_argument("every star must be a cup endpoint");
}

std::string CupDiagram::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < cups_.size(); ++k) {
        if (k) os << ",";
        os << "(" << cups_[k].first << "," << cups_[k].second << ")";
    }
    os << "]";
    return os.str();
}

CupDiagram underline(const Weight& w) {
    Block b = w.block();
    std::vector<std::pair<int, int>> cups;
    // repeatedly connect neighboring v ^ pairs, skipping o, x and matched symbols
    std::vector<int> stack;  // positions of currently unmatched v's
    std::vector<int> unmatched_up;
    for (int i = w.start(); i < w.end(); ++i) {
        WeightSym s = w.at(i);
        if (s == WeightSym::Down) stack.push_back(i);
        else if (s == WeightSym::Up) {
            if (!stack.empty()) {
                cups.push_back({stack.back(), i});
                stack.pop_back();
            } else {
                unmatched_up.push_back(i);
            }
        }
    }
    if (!stack.empty() || !unmatched_up.empty())
        throw RaysRequired("weight " + w.to_string() + " needs rays (cup-only regime)");
    return CupDiagram(b, std::move(cups));
}

Weight minimal_weight(const CupDiagram& c) {
    Weight w;
    for (int i = c.block().start(); i < c.block().end(); ++i)
        if (c.block().at(i) == BlockSym::X) w.set(i, WeightSym::X);
    for (auto [i, j] : c.cups()) {
        w.set(i, WeightSym::Down);
        w.set(j, WeightSym::Up);
    }
    return w;
}

namespace {
// non-crossing perfect matchings of an increasing point list
std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(const std::vector<int>& pts) {
    if (pts.empty()) return {{}};
    std::vector<std::vector<std::pair<int, int>>> out;
    for (size_t k = 1; k < pts.size(); k += 2) {
        std::vector<int> inside(pts.begin() + 1, pts.begin() + k);
        std::vector<int> outside(pts.begin() + k + 1, pts.end());
        for (const auto& mi : noncrossing_matchings(inside))
            for (const auto& mo : noncrossing_matchings(outside)) {
                std::vector<std::pair<int, int>> m;
                m.push_back({pts[0], pts[k]});
                m.insert(m.end(), mi.begin(), mi.end());
                m.insert(m.end(), mo.begin(), mo.end());
                out.push_back(std::move(m));
            }
    }
    return out;
}
}  // namespace

std::vector<CupDiagram> cup_diagrams(const Block& b) {
    std::vector<CupDiagram> out;
    std::vector<int> stars = b.star_positions();
    if (stars.size() % 2 != 0) return out;
    for (auto& m : noncrossing_matchings(stars)) out.push_back(CupDiagram(b, std::move(m)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> cup_weights(const Block& b) {
    std::vector<Weight> out;
    for (const auto& c : cup_diagrams(b)) out.push_back(minimal_weight(c));
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------- Circle

Vertex Circle::min_vertex() const {
    return *std::min_element(verts.begin(), verts.end());
}

Vertex Circle::rightmost_vertex() const {
    return *std::max_element(verts.begin(), verts.end(), [](const Vertex& a, const Vertex& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        return a.line < b.line;
    });
}

// ------------------------------------------------------ StackedDiagram

StackedDiagram::StackedDiagram(std::vector<Block> lines, std::vector<Arc> arcs)
    : lines_(std::move(lines)), arcs_(std::move(arcs)) {
    for (const auto& a : arcs_) {
        switch (a.kind) {
            case Arc::Kind::Cup:
            case Arc::Kind::Cap:
                if (a.i >= a.j) throw std::invalid_argument("cup/cap arc needs i < j");
                if (a.line < 0 || a.line >= line_count()) throw std::invalid_argument("arc line out of range");
                break;
            case Arc::Kind::Vertical:
                if (a.i != a.j) throw std::invalid_argument("vertical arc needs i == j");
                if (a.line < 0 || a.line + 1 >= line_count()) throw std::invalid_argument("vertical band out of range");
                break;
            case Arc::Kind::Shift:
                if (a.i != a.j + 1 && a.j != a.i + 1) throw std::invalid_argument("shift arc must move by one");
                if (a.line < 0 || a.line + 1 >= line_count()) throw std::invalid_argument("shift band out of range");
                break;
        }
    }
}

std::pair<Vertex, Vertex> StackedDiagram::endpoints(int k) const {
    const Arc& a = arcs_.at(k);
    switch (a.kind) {
        case Arc::Kind::Cup:
        case Arc::Kind::Cap: return {{a.line, a.i}, {a.line, a.j}};
        case Arc::Kind::Vertical: return {{a.line, a.i}, {a.line + 1, a.i}};
        case Arc::Kind::Shift: return {{a.line, a.i}, {a.line + 1, a.j}};
    }
    throw std::logic_error("unreachable");
}

int StackedDiagram::arc_distance(int k) const {
    auto [u, v] = endpoints(k);
    int d = p(u) - p(v);
    return d < 0 ? -d : d;
}

int StackedDiagram::saddle_width(int k) const {
    const Arc& a = arcs_.at(k);
    if (a.kind != Arc::Kind::Cup && a.kind != Arc::Kind::Cap)
        throw std::invalid_argument("saddle width is defined for cups and caps");
    int d = arc_distance(k);
    if (d % 2 == 0) throw std::logic_error("cup/cap distance must be odd");
    return (d + 1) / 2;
}

void StackedDiagram::trace() const {
    if (traced_) return;
    // below[v] / above[v]: the arc attached to vertex v from below / above
    std::map<Vertex, int> below, above;
    auto put = [&](std::map<Vertex, int>& m, const Vertex& v, int arc) {
        auto [it, fresh] = m.emplace(v, arc);
        if (!fresh)
            throw OpenComponent("vertex (" + std::to_string(v.line) + "," + std::to_string(v.pos) +
                                ") has two arcs on one side");
    };
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k) {
        const Arc& a = arcs_[k];
        switch (a.kind) {
            case Arc::Kind::Cup:
                put(below, {a.line, a.i}, k);
                put(below, {a.line, a.j}, k);
                break;
            case Arc::Kind::Cap:
                put(above, {a.line, a.i}, k);
                put(above, {a.line, a.j}, k);
                break;
            case Arc::Kind::Vertical:
                put(above, {a.line, a.i}, k);
                put(below, {a.line + 1, a.i}, k);
                break;
            case Arc::Kind::Shift:
                put(above, {a.line, a.i}, k);
                put(below, {a.line + 1, a.j}, k);
                break;
        }
    }
    // every star must be closed from both sides
    for (int ln = 0; ln < line_count(); ++ln) {
        for (int pos : lines_[ln].star_positions()) {
            Vertex v{ln, pos};
            if (!below.count(v) || !above.count(v))
                throw OpenComponent("star vertex (" + std::to_string(ln) + "," + std::to_string(pos) +
                                    ") is not closed");
        }
    }

    circles_.clear();
    arc_circle_.assign(arcs_.size(), -1);
    std::vector<bool> seen(arcs_.size(), false);
    // deterministic start order: scan vertices in (line, pos) order
    std::vector<Vertex> all_verts;
    for (const auto& [v, k] : below) { (void)k; all_verts.push_back(v); }
    for (const Vertex& start : all_verts) {
        int start_arc = below.at(start);
        if (seen[start_arc]) continue;
        Circle c;
        Vertex v = start;
        bool via_below = true;  // we are about to leave v through its below arc
        do {
            int k = via_below ? below.at(v) : above.at(v);
            seen[k] = true;
            c.verts.push_back(v);
            c.arcs.push_back(k);
            auto [e1, e2] = endpoints(k);
            Vertex w = (e1 == v) ? e2 : e1;
            // figure out which side of w arc k occupies, continue through the other
            bool arrived_from_below;
            if (below.count(w) && below.at(w) == k) arrived_from_below = true;
            else if (above.count(w) && above.at(w) == k) arrived_from_below = false;
            else throw std::logic_error("arc endpoint inconsistency");
            v = w;
            via_below = !arrived_from_below;
        } while (!(v == start && via_below));
        circles_.push_back(std::move(c));
    }
    std::sort(circles_.begin(), circles_.end(),
              [](const Circle& a, const Circle& b) { return a.min_vertex() < b.min_vertex(); });
    for (int ci = 0; ci < static_cast<int>(circles_.size()); ++ci)
        for (int k : circles_[ci].arcs) arc_circle_[k] = ci;
    traced_ = true;
}

const std::vector<Circle>& StackedDiagram::circles() const {
    trace();
    return circles_;
}

int StackedDiagram::circle_of_arc(int k) const {
    trace();
    return arc_circle_.at(k);
}

int StackedDiagram::circle_of_vertex(const Vertex& v) const {
    trace();
    for (int ci = 0; ci < static_cast<int>(circles_.size()); ++ci)
        for (const Vertex& w : circles_[ci].verts)
            if (w == v) return ci;
    throw std::invalid_argument("vertex not on any circle");
}

int StackedDiagram::circle_distance(int ci) const {
    trace();
    int d = 0;
    for (int k : circles_.at(ci).arcs) d += arc_distance(k);
    return d;
}

int StackedDiagram::rightmost(int ci) const {
    trace();
    return p(circles_.at(ci).rightmost_vertex());
}

int StackedDiagram::path_distance(int ci, const Vertex& a, const Vertex& b) const {
    trace();
    const Circle& c = circles_.at(ci);
    auto find_index = [&](const Vertex& v) {
        for (size_t k = 0; k < c.verts.size(); ++k)
            if (c.verts[k] == v) return static_cast<int>(k);
        throw std::invalid_argument("vertex not on circle");
    };
    int ia = find_index(a), ib = find_index(b);
    int d = 0;
    for (int k = ia; k != ib; k = (k + 1) % static_cast<int>(c.verts.size())) d += arc_distance(c.arcs[k]);
    return d;
}

int StackedDiagram::cup_nesting_depth(int arc_index) const {
    const Arc& a = arcs_.at(arc_index);
    int depth = 0;
    for (const Arc& b : arcs_) {
        if (b.kind != a.kind || b.line != a.line) continue;
        if (b.i < a.i && a.j < b.j) ++depth;
    }
    return depth;
}

namespace {
// nesting depth k -> lobe height 1/(2k+4); strictly below a half band
Frac lobe_height(int k) { return Frac(1, 2 * k + 4); }
}  // namespace

bool StackedDiagram::crosses_upward(int k, long long pxn, long long pxd, long long pyn, long long pyd) const {
    const Arc& a = arcs_.at(k);
    Frac px(pxn, pxd), py(pyn, pyd);
    switch (a.kind) {
        case Arc::Kind::Cup: {
            if (!(Frac(a.i) < px && px < Frac(a.j))) return false;
            Frac h = Frac(a.line) - lobe_height(cup_nesting_depth(k));
            return py < h;
        }
        case Arc::Kind::Cap: {
            if (!(Frac(a.i) < px && px < Frac(a.j))) return false;
            Frac h = Frac(a.line) + lobe_height(cup_nesting_depth(k));
            return py < h;
        }
        case Arc::Kind::Vertical:
            return false;
        case Arc::Kind::Shift: {
            int x0 = std::min(a.i, a.j), x1 = std::max(a.i, a.j);
            if (!(Frac(x0) < px && px < Frac(x1))) return false;
            // y(x) = line + (x - i)/(j - i)
            Frac y = Frac(a.line) + (px - Frac(a.i)) * Frac(1, a.j - a.i);
            return py < y;
        }
    }
    return false;
}

bool StackedDiagram::probe_on_arc(int k, long long pxn, long long pxd, long long pyn, long long pyd) const {
    const Arc& a = arcs_.at(k);
    Frac px(pxn, pxd), py(pyn, pyd);
    switch (a.kind) {
        case Arc::Kind::Cup:
        case Arc::Kind::Cap: {
            Frac h = a.kind == Arc::Kind::Cup ? Frac(a.line) - lobe_height(cup_nesting_depth(k))
                                              : Frac(a.line) + lobe_height(cup_nesting_depth(k));
            bool on_horizontal = (py == h) && !(px < Frac(a.i)) && !(Frac(a.j) < px);
            bool on_side = px.is_integer() && (px == Frac(a.i) || px == Frac(a.j));
            return on_horizontal || on_side;
        }
        case Arc::Kind::Vertical:
            return px == Frac(a.i) && !(py < Frac(a.line)) && !(Frac(a.line + 1) < py);
        case Arc::Kind::Shift: {
            int x0 = std::min(a.i, a.j), x1 = std::max(a.i, a.j);
            if (px < Frac(x0) || Frac(x1) < px) return false;
            Frac y = Frac(a.line) + (px - Frac(a.i)) * Frac(1, a.j - a.i);
            return py == y;
        }
    }
    return false;
}

bool StackedDiagram::probe_clear(long long pxn, long long pxd, long long pyn, long long pyd) const {
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k)
        if (probe_on_arc(k, pxn, pxd, pyn, pyd)) return false;
    return true;
}

std::pair<std::pair<long long, long long>, std::pair<long long, long long>> StackedDiagram::probe_point(
    int k, bool lower_side) const {
    const Arc& a = arcs_.at(k);
    if (a.kind == Arc::Kind::Cup || a.kind == Arc::Kind::Cap) {
        int depth = cup_nesting_depth(k);
        Frac h = lobe_height(depth);
        Frac gap = h - lobe_height(depth + 1);
        Frac y = a.kind == Arc::Kind::Cup ? Frac(a.line) - h + gap * Frac(1, 4)
                                          : Frac(a.line) + h - gap * Frac(1, 4);
        // x offsets tried until clear of every arc
        static const Frac offs[] = {Frac(1, 4),  Frac(-1, 4), Frac(1, 8),  Frac(-1, 8),
                                    Frac(3, 8),  Frac(-3, 8), Frac(1, 16), Frac(-1, 16)};
        for (const Frac& off : offs) {
            Frac x = Frac(a.i + a.j, 2) + off;
            if (!(Frac(a.i) < x && x < Frac(a.j))) continue;
            if (x.is_integer()) continue;
            if (probe_clear(x.n, x.d, y.n, y.d)) return {{x.n, x.d}, {y.n, y.d}};
        }
        throw std::logic_error("no clear probe point near cup/cap");
    }
    if (a.kind == Arc::Kind::Shift) {
        bool up_right = a.j > a.i;
        static const Frac ds[] = {Frac(1, 4), Frac(1, 8), Frac(1, 16), Frac(3, 16)};
        for (const Frac& d : ds) {
            Frac mx = Frac(a.i + a.j, 2);
            Frac my = Frac(2 * a.line + 1, 2);
            Frac x = up_right ? mx + d : mx - d;
            Frac y = my - d;
            (void)lower_side;  // shift probes are always on the lower side
            if (x.is_integer()) continue;
            if (probe_clear(x.n, x.d, y.n, y.d)) return {{x.n, x.d}, {y.n, y.d}};
        }
        throw std::logic_error("no clear probe point near shift arc");
    }
    throw std::invalid_argument("no probe for vertical arcs");
}

bool StackedDiagram::is_inside(int ci, long long pxn, long long pxd, long long pyn, long long pyd) const {
    trace();
    int crossings = 0;
    for (int k : circles_.at(ci).arcs)
        if (crosses_upward(k, pxn, pxd, pyn, pyd)) ++crossings;
    return crossings % 2 == 1;
}

StackedDiagram::ArcClasses StackedDiagram::classify(int ci) const {
    trace();
    ArcClasses out;
    for (int k : circles_.at(ci).arcs) {
        const Arc& a = arcs_[k];
        switch (a.kind) {
            case Arc::Kind::Cup: {
                auto [px, py] = probe_point(k, false);
                bool inside = is_inside(ci, px.first, px.second, py.first, py.second);
                (inside ? out.ecup : out.icup).push_back(k);
                break;
            }
            case Arc::Kind::Cap: {
                auto [px, py] = probe_point(k, false);
                bool inside = is_inside(ci, px.first, px.second, py.first, py.second);
                (inside ? out.ecap : out.icap).push_back(k);
                break;
            }
            case Arc::Kind::Shift: {
                if (arc_distance(k) == 0) break;  // star-over-o moves carry no coefficient
                auto [px, py] = probe_point(k, true);
                bool inside = is_inside(ci, px.first, px.second, py.first, py.second);
                bool up_right = a.j > a.i;  // star-x -> x-star
                if (up_right) (inside ? out.ileft : out.eleft).push_back(k);
                else (inside ? out.iright : out.eright).push_back(k);
                break;
            }
            case Arc::Kind::Vertical:
                break;
        }
    }
    return out;
}

bool StackedDiagram::circle_inside(int a, int b) const {
    trace();
    if (a == b) return false;
    // probe a point vertically adjacent to one of a's cups/caps; the open
    // segment between arc and probe meets no other arc, so the parity with
    // respect to b equals that of circle a itself
    for (int k : circles_.at(a).arcs) {
        if (arcs_[k].kind == Arc::Kind::Cup || arcs_[k].kind == Arc::Kind::Cap) {
            auto [px, py] = probe_point(k, false);
            return is_inside(b, px.first, px.second, py.first, py.second);
        }
    }
    throw std::logic_error("circle without cups or caps");
}

StackedDiagram StackedDiagram::with_surgery(int cap_arc, int cup_arc) const {
    const Arc& cap = arcs_.at(cap_arc);
    const Arc& cup = arcs_.at(cup_arc);
    if (cap.kind != Arc::Kind::Cap || cup.kind != Arc::Kind::Cup || cup.line != cap.line + 1 || cap.i != cup.i ||
        cap.j != cup.j)
        throw InvalidPair("surgery needs a symmetric cap/cup pair in one band");
    std::vector<Arc> arcs;
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k)
        if (k != cap_arc && k != cup_arc) arcs.push_back(arcs_[k]);
    arcs.push_back({Arc::Kind::Vertical, cap.line, cap.i, cap.i});
    arcs.push_back({Arc::Kind::Vertical, cap.line, cap.j, cap.j});
    return StackedDiagram(lines_, std::move(arcs));
}

StackedDiagram StackedDiagram::with_reverse_surgery(int band, int i, int j) const {
    if (i > j) std::swap(i, j);
    int vi = -1, vj = -1;
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k) {
        const Arc& a = arcs_[k];
        if (a.kind == Arc::Kind::Vertical && a.line == band) {
            if (a.i == i) vi = k;
            if (a.i == j) vj = k;
        }
    }
    if (vi < 0 || vj < 0) throw InvalidPair("reverse surgery needs verticals at both positions");
    std::vector<Arc> arcs;
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k)
        if (k != vi && k != vj) arcs.push_back(arcs_[k]);
    arcs.push_back({Arc::Kind::Cap, band, i, j});
    arcs.push_back({Arc::Kind::Cup, band + 1, i, j});
    return StackedDiagram(lines_, std::move(arcs));
}

bool operator==(const StackedDiagram& a, const StackedDiagram& b) {
    if (a.lines_ != b.lines_) return false;
    auto key = [](const Arc& x) { return std::tuple(static_cast<int>(x.kind), x.line, x.i, x.j); };
    std::vector<std::tuple<int, int, int, int>> ka, kb;
    for (const Arc& x : a.arcs_) ka.push_back(key(x));
    for (const Arc& x : b.arcs_) kb.push_back(key(x));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

std::string StackedDiagram::to_string() const {
    std::ostringstream os;
    for (int ln = 0; ln < line_count(); ++ln) os << "line " << ln << ": " << lines_[ln].to_string() << "\n";
    for (const Arc& a : arcs_) {
        switch (a.kind) {
            case Arc::Kind::Cup: os << "  cup  L" << a.line << " (" << a.i << "," << a.j << ")\n"; break;
            case Arc::Kind::Cap: os << "  cap  L" << a.line << " (" << a.i << "," << a.j << ")\n"; break;
            case Arc::Kind::Vertical: os << "  vert B" << a.line << " " << a.i << "\n"; break;
            case Arc::Kind::Shift: os << "  shift B" << a.line << " " << a.i << "->" << a.j << "\n"; break;
        }
    }
    return os.str();
}

// --------------------------------------------------------- orientations

std::vector<Orientation> all_orientations(const StackedDiagram& d) {
    size_t n = d.circles().size();
    std::vector<Orientation> out;
    out.reserve(size_t(1) << n);
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        Orientation o(n);
        for (size_t k = 0; k < n; ++k) o[k] = (mask >> k) & 1;
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<Weight> orientation_weights(const StackedDiagram& d, const Orientation& orient) {
    const auto& cs = d.circles();
    if (orient.size() != cs.size()) throw std::invalid_argument("orientation size mismatch");
    std::vector<Weight> ws(d.line_count());
    for (int ln = 0; ln < d.line_count(); ++ln) {
        const Block& b = d.line(ln);
        for (int i = b.start(); i < b.end(); ++i) {
            if (b.at(i) == BlockSym::X) ws[ln].set(i, WeightSym::X);
        }
    }
    for (size_t ci = 0; ci < cs.size(); ++ci) {
        const Circle& c = cs[ci];
        Vertex right = c.rightmost_vertex();
        // locate rightmost in the cyclic vertex list, then propagate symbols
        int start = -1;
        for (size_t k = 0; k < c.verts.size(); ++k)
            if (c.verts[k] == right) { start = static_cast<int>(k); break; }
        WeightSym cur = orient[ci] ? WeightSym::Down : WeightSym::Up;  // clockwise: rightmost is v
        int n = static_cast<int>(c.verts.size());
        for (int step = 0; step < n; ++step) {
            int k = (start + step) % n;
            ws[c.verts[k].line].set(c.verts[k].pos, cur);
            const Arc& a = d.arc(c.arcs[k]);
            bool flips = (a.kind == Arc::Kind::Cup || a.kind == Arc::Kind::Cap);
            if (flips) cur = (cur == WeightSym::Up) ? WeightSym::Down : WeightSym::Up;
        }
    }
    return ws;
}

Orientation orientation_from_weights(const StackedDiagram& d, const std::vector<Weight>& weights) {
    const auto& cs = d.circles();
    Orientation o(cs.size());
    for (size_t ci = 0; ci < cs.size(); ++ci) {
        Vertex right = cs[ci].rightmost_vertex();
        WeightSym s = weights.at(right.line).at(right.pos);
        if (s == WeightSym::Up) o[ci] = false;
        else if (s == WeightSym::Down) o[ci] = true;
        else throw std::invalid_argument("weight does not orient circle");
    }
    if (orientation_weights(d, o) != weights) throw std::invalid_argument("weights are not a valid orientation");
    return o;
}

int oriented_degree(const StackedDiagram& d, const Orientation& orient) {
    std::vector<Weight> ws = orientation_weights(d, orient);
    int deg = 0;
    for (const Arc& a : d.arcs()) {
        if (a.kind != Arc::Kind::Cup && a.kind != Arc::Kind::Cap) continue;
        if (ws[a.line].at(a.j) == WeightSym::Down) ++deg;  // rightmost endpoint v: clockwise
    }
    return deg;
}

}  // namespace arcalg
