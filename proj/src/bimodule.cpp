#include "arcalg/bimodule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arcalg {

namespace {

std::pair<int, int> span_of(const MatchArc& a) { return {a.i, a.j}; }

}  // namespace

Matching::Matching(Block source, Block target, std::vector<MatchArc> moves)
    : source_(std::move(source)), target_(std::move(target)), moves_(std::move(moves)) {
    std::sort(moves_.begin(), moves_.end());
    validate();
}

void Matching::validate() {
    std::set<int> src_used, tgt_used;
    auto use = [](std::set<int>& s, int c) {
        if (!s.insert(c).second) throw std::invalid_argument("matching: column used twice");
    };
    for (const MatchArc& m : moves_) {
        switch (m.kind) {
            case MatchArc::Kind::ShiftRight:
                if (m.j != m.i + 1) throw std::invalid_argument("shift must move one column");
                if (source_.at(m.i) != BlockSym::Star || target_.at(m.j) != BlockSym::Star)
                    throw std::invalid_argument("shift endpoints must be stars");
                use(src_used, m.i);
                use(tgt_used, m.j);
                break;
            case MatchArc::Kind::ShiftLeft:
                if (m.j != m.i + 1) throw std::invalid_argument("shift must move one column");
                if (source_.at(m.j) != BlockSym::Star || target_.at(m.i) != BlockSym::Star)
                    throw std::invalid_argument("shift endpoints must be stars");
                use(src_used, m.j);
                use(tgt_used, m.i);
                break;
            case MatchArc::Kind::Cup:
                if (m.i >= m.j) throw std::invalid_argument("cup span needs i < j");
                if (target_.at(m.i) != BlockSym::Star || target_.at(m.j) != BlockSym::Star)
                    throw std::invalid_argument("cup endpoints must be target stars");
                use(tgt_used, m.i);
                use(tgt_used, m.j);
                break;
            case MatchArc::Kind::Cap:
                if (m.i >= m.j) throw std::invalid_argument("cap span needs i < j");
                if (source_.at(m.i) != BlockSym::Star || source_.at(m.j) != BlockSym::Star)
                    throw std::invalid_argument("cap endpoints must be source stars");
                use(src_used, m.i);
                use(src_used, m.j);
                break;
        }
    }
    for (size_t x = 0; x < moves_.size(); ++x)
        for (size_t y = x + 1; y < moves_.size(); ++y) {
            auto [i, j] = span_of(moves_[x]);
            auto [k, l] = span_of(moves_[y]);
            bool crossing = (i < k && k < j && j < l) || (k < i && i < l && l < j);
            if (crossing) throw std::invalid_argument("matching arcs cross");
        }
    verticals_.clear();
    for (int c : source_.star_positions())
        if (!src_used.count(c)) {
            if (target_.at(c) != BlockSym::Star) throw std::invalid_argument("unmatched source star");
            verticals_.push_back(c);
        }
    for (int c : target_.star_positions())
        if (!tgt_used.count(c)) {
            if (std::find(verticals_.begin(), verticals_.end(), c) == verticals_.end())
                throw std::invalid_argument("unmatched target star");
        }
}

Matching Matching::basic(const Block& source, int sign, int i, int shape) {
    auto need = [&](int pos, BlockSym s) {
        if (source.at(pos) != s) throw std::invalid_argument("source block does not fit the move shape");
    };
    auto edit = [&](std::initializer_list<std::pair<int, BlockSym>> changes) {
        int lo = std::min(source.start(), i);
        int hi = std::max(source.end(), i + 2);
        std::vector<BlockSym> syms;
        for (int c = lo; c < hi; ++c) syms.push_back(source.at(c));
        for (auto [pos, sym] : changes) syms[pos - lo] = sym;
        return Block(lo, std::move(syms));
    };
    if (sign == +1) {
        switch (shape) {
            case 1:
                need(i, BlockSym::Star); need(i + 1, BlockSym::O);
                return Matching(source, edit({{i, BlockSym::O}, {i + 1, BlockSym::Star}}),
                                {{MatchArc::Kind::ShiftRight, i, i + 1}});
            case 2:
                need(i, BlockSym::Star); need(i + 1, BlockSym::X);
                return Matching(source, edit({{i, BlockSym::X}, {i + 1, BlockSym::Star}}),
                                {{MatchArc::Kind::ShiftRight, i, i + 1}});
            case 3:
                need(i, BlockSym::O); need(i + 1, BlockSym::X);
                return Matching(source, edit({{i, BlockSym::Star}, {i + 1, BlockSym::Star}}),
                                {{MatchArc::Kind::Cup, i, i + 1}});
            case 4:
                need(i, BlockSym::Star); need(i + 1, BlockSym::Star);
                return Matching(source, edit({{i, BlockSym::X}, {i + 1, BlockSym::O}}),
                                {{MatchArc::Kind::Cap, i, i + 1}});
        }
    } else if (sign == -1) {
        switch (shape) {
            case 1:
                need(i, BlockSym::O); need(i + 1, BlockSym::Star);
                return Matching(source, edit({{i, BlockSym::Star}, {i + 1, BlockSym::O}}),
                                {{MatchArc::Kind::ShiftLeft, i, i + 1}});
            case 2:
                need(i, BlockSym::X); need(i + 1, BlockSym::Star);
                return Matching(source, edit({{i, BlockSym::Star}, {i + 1, BlockSym::X}}),
                                {{MatchArc::Kind::ShiftLeft, i, i + 1}});
            case 3:
                need(i, BlockSym::X); need(i + 1, BlockSym::O);
                return Matching(source, edit({{i, BlockSym::Star}, {i + 1, BlockSym::Star}}),
                                {{MatchArc::Kind::Cup, i, i + 1}});
            case 4:
                need(i, BlockSym::Star); need(i + 1, BlockSym::Star);
                return Matching(source, edit({{i, BlockSym::O}, {i + 1, BlockSym::X}}),
                                {{MatchArc::Kind::Cap, i, i + 1}});
        }
    }
    throw std::invalid_argument("move sign must be +-1 and shape 1..4");
}

std::string Matching::to_string() const {
    std::ostringstream os;
    os << source_.to_string() << " -> " << target_.to_string() << " [";
    for (size_t k = 0; k < moves_.size(); ++k) {
        if (k) os << ",";
        const MatchArc& m = moves_[k];
        const char* names[] = {"shr", "shl", "cup", "cap"};
        os << names[static_cast<int>(m.kind)] << "(" << m.i << "," << m.j << ")";
    }
    os << "]";
    return os.str();
}

CompositeMatching::CompositeMatching(std::vector<Block> blocks, std::vector<Matching> layers)
    : blocks_(std::move(blocks)), layers_(std::move(layers)) {
    if (blocks_.empty()) throw std::invalid_argument("composite matching needs at least one block");
    if (blocks_.size() != layers_.size() + 1) throw std::invalid_argument("blocks/layers size mismatch");
    for (size_t k = 0; k < layers_.size(); ++k) {
        if (!(layers_[k].source() == blocks_[k]) || !(layers_[k].target() == blocks_[k + 1]))
            throw std::invalid_argument("layer blocks do not chain");
    }
    for (const Block& b : blocks_)
        if (!b.balanced()) throw std::invalid_argument("composite matching blocks must be balanced");
}

int CompositeMatching::degree_shift() const {
    const Block& b = blocks_.front();
    return -(b.star_count() + 2 * b.x_count());  // up + down counts x twice
}

std::string CompositeMatching::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < layers_.size(); ++k) os << "t" << (k + 1) << ": " << layers_[k].to_string() << "\n";
    if (layers_.empty()) os << "identity on " << blocks_[0].to_string() << "\n";
    return os.str();
}

StackedDiagram matching_diagram(const CompositeMatching& m, const CupDiagram& cup, const CapDiagram& cap) {
    if (!(cup.block() == m.bottom())) throw BlockMismatch("cup diagram block mismatch");
    if (!(cap.block() == m.top())) throw BlockMismatch("cap diagram block mismatch");
    std::vector<Arc> arcs;
    for (auto [i, j] : cup.cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
    for (int k = 0; k < m.layer_count(); ++k) {
        const Matching& t = m.layer(k);
        for (int c : t.verticals()) arcs.push_back({Arc::Kind::Vertical, k, c, c});
        for (const MatchArc& mv : t.moves()) {
            switch (mv.kind) {
                case MatchArc::Kind::ShiftRight: arcs.push_back({Arc::Kind::Shift, k, mv.i, mv.j}); break;
                case MatchArc::Kind::ShiftLeft: arcs.push_back({Arc::Kind::Shift, k, mv.j, mv.i}); break;
                case MatchArc::Kind::Cup: arcs.push_back({Arc::Kind::Cup, k + 1, mv.i, mv.j}); break;
                case MatchArc::Kind::Cap: arcs.push_back({Arc::Kind::Cap, k, mv.i, mv.j}); break;
            }
        }
    }
    int top = m.layer_count();
    for (auto [i, j] : cap.cups()) arcs.push_back({Arc::Kind::Cap, top, i, j});
    return StackedDiagram(m.blocks(), std::move(arcs));
}

BimodBasis::BimodBasis(const CompositeMatching& m, CupDiagram cup, std::vector<Weight> mids, CapDiagram cap)
    : cup_(std::move(cup)), mids_(std::move(mids)), cap_(std::move(cap)) {
    StackedDiagram d = diagram(m);
    Orientation o = orientation_from_weights(d, mids_);
    degree_ = oriented_degree(d, o);
}

StackedDiagram BimodBasis::diagram(const CompositeMatching& m) const { return matching_diagram(m, cup_, cap_); }

std::string BimodBasis::to_string() const {
    std::ostringstream os;
    os << cup_.to_string() << " (";
    for (size_t k = 0; k < mids_.size(); ++k) {
        if (k) os << " | ";
        os << mids_[k].to_string();
    }
    os << ") " << cap_.to_string();
    return os.str();
}

void BimodElement::add(BimodBasis b, SymbolicScalar s) {
    if (s.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) terms_.emplace(std::move(b), std::move(s));
    else {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BimodElement operator+(const BimodElement& x, const BimodElement& y) {
    BimodElement r = x;
    for (const auto& [b, s] : y.terms_) r.add(b, s);
    return r;
}

BimodElement operator-(const BimodElement& x, const BimodElement& y) {
    BimodElement r = x;
    for (const auto& [b, s] : y.terms_) r.add(b, -s);
    return r;
}

BimodElement BimodElement::scaled(const SymbolicScalar& s) const {
    BimodElement r;
    for (const auto& [b, c] : terms_) r.add(b, c * s);
    return r;
}

std::string BimodElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s.to_string() << ") " << b.to_string();
    }
    return os.str();
}

std::vector<BimodBasis> bimodule_basis(const CompositeMatching& m) {
    std::vector<BimodBasis> out;
    for (const CupDiagram& cup : cup_diagrams(m.bottom()))
        for (const CapDiagram& cap : cup_diagrams(m.top())) {
            StackedDiagram d = matching_diagram(m, cup, cap);
            for (const Orientation& o : all_orientations(d))
                out.push_back(BimodBasis(m, cup, orientation_weights(d, o), cap));
        }
    return out;
}

namespace {

BimodElement run_action(const CompositeMatching& m, const StackedDiagram& start, const Orientation& start_or,
                        int band, size_t steps, bool drop_bottom, const CupDiagram& final_cup,
                        const CapDiagram& final_cap) {
    StackedDiagram d = start;
    std::vector<std::pair<Orientation, SymbolicScalar>> branches{{start_or, SymbolicScalar::one()}};
    for (size_t k = 0; k < steps; ++k) {
        auto [cap_arc, cup_arc] = leftmost_available_pair(d, band);
        std::vector<std::pair<Orientation, SymbolicScalar>> next;
        StackedDiagram result;
        for (const auto& [orient, scalar] : branches) {
            SurgeryStep st = surgery_step(d, orient, cap_arc, cup_arc, SurgeryRules::algebra());
            for (auto& [o2, s2] : st.branches) next.push_back({o2, scalar * s2});
            result = std::move(st.result);
        }
        d = std::move(result);
        branches = std::move(next);
    }
    BimodElement out;
    for (const auto& [o, s] : branches) {
        std::vector<Weight> ws = orientation_weights(d, o);
        std::vector<Weight> mids;
        if (drop_bottom) mids.assign(ws.begin() + 1, ws.end());
        else mids.assign(ws.begin(), ws.end() - 1);
        out.add(BimodBasis(m, final_cup, std::move(mids), final_cap), s);
    }
    return out;
}

}  // namespace

BimodElement act_left(const ArcElement& a, const CompositeMatching& m, const BimodElement& x) {
    BimodElement out;
    for (const auto& [ab, as] : a.terms()) {
        if (!(ab.block() == m.bottom())) throw BlockMismatch("left action block mismatch");
        for (const auto& [xb, xs] : x.terms()) {
            if (!(ab.cap() == xb.cup())) continue;
            std::vector<Block> lines{ab.block()};
            for (const Block& b : m.blocks()) lines.push_back(b);
            std::vector<Arc> arcs;
            for (auto [i, j] : ab.cup().cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
            for (auto [i, j] : ab.cap().cups()) arcs.push_back({Arc::Kind::Cap, 0, i, j});
            StackedDiagram md = xb.diagram(m);
            for (Arc arc : md.arcs()) {
                arc.line += 1;
                arcs.push_back(arc);
            }
            StackedDiagram d(lines, std::move(arcs));
            std::vector<Weight> ws{ab.mid()};
            for (const Weight& w : xb.mids()) ws.push_back(w);
            Orientation o = orientation_from_weights(d, ws);
            BimodElement part = run_action(m, d, o, 0, xb.cup().cups().size(), true, ab.cup(), xb.cap());
            out = out + part.scaled(as * xs);
        }
    }
    return out;
}

BimodElement act_right(const CompositeMatching& m, const BimodElement& x, const ArcElement& a) {
    BimodElement out;
    int r = m.layer_count();
    for (const auto& [ab, as] : a.terms()) {
        if (!(ab.block() == m.top())) throw BlockMismatch("right action block mismatch");
        for (const auto& [xb, xs] : x.terms()) {
            if (!(xb.cap() == ab.cup())) continue;
            std::vector<Block> lines = m.blocks();
            lines.push_back(ab.block());
            StackedDiagram md = xb.diagram(m);
            std::vector<Arc> arcs(md.arcs().begin(), md.arcs().end());
            for (auto [i, j] : ab.cup().cups()) arcs.push_back({Arc::Kind::Cup, r + 1, i, j});
            for (auto [i, j] : ab.cap().cups()) arcs.push_back({Arc::Kind::Cap, r + 1, i, j});
            StackedDiagram d(lines, std::move(arcs));
            std::vector<Weight> ws = xb.mids();
            ws.push_back(ab.mid());
            Orientation o = orientation_from_weights(d, ws);
            BimodElement part = run_action(m, d, o, r, ab.cup().cups().size(), false, xb.cup(), ab.cap());
            out = out + part.scaled(as * xs);
        }
    }
    return out;
}

std::vector<std::tuple<int, int, int>> rmult_sites(const CompositeMatching& m) {
    std::vector<std::tuple<int, int, int>> out;
    for (int k = 0; k < m.layer_count(); ++k) {
        const auto& verts = m.layer(k).verticals();
        for (size_t x = 0; x < verts.size(); ++x)
            for (size_t y = x + 1; y < verts.size(); ++y) {
                int a = verts[x], b = verts[y];
                bool clear = true;
                for (int c = a + 1; c < b && clear; ++c)
                    if (m.blocks()[k].at(c) == BlockSym::Star || m.blocks()[k + 1].at(c) == BlockSym::Star)
                        clear = false;
                if (clear) out.push_back({k, a, b});
            }
    }
    return out;
}

ReverseSurgeryResult rmult(const CompositeMatching& m, int layer, int col_a, int col_b, const BimodElement& x) {
    if (col_a > col_b) std::swap(col_a, col_b);
    auto sites = rmult_sites(m);
    if (std::find(sites.begin(), sites.end(), std::tuple(layer, col_a, col_b)) == sites.end())
        throw InvalidSite("not a pair of neighboring verticals");

    // refine the layer: caps and shifts stay below the inserted line, cups
    // above; the site verticals become a cap/cup pair across it
    const Matching& t = m.layer(layer);
    const Block& lo = m.blocks()[layer];
    const Block& hi = m.blocks()[layer + 1];
    int start = std::min({lo.start(), hi.start(), col_a});
    int stop = std::max({lo.end(), hi.end(), col_b + 1});
    std::vector<BlockSym> mid_syms;
    for (int c = start; c < stop; ++c) mid_syms.push_back(lo.at(c));
    auto set_mid = [&](int c, BlockSym s) { mid_syms[c - start] = s; };
    std::vector<MatchArc> lower_moves, upper_moves;
    for (const MatchArc& mv : t.moves()) {
        switch (mv.kind) {
            case MatchArc::Kind::ShiftRight:
            case MatchArc::Kind::ShiftLeft:
            case MatchArc::Kind::Cap:
                lower_moves.push_back(mv);
                set_mid(mv.i, hi.at(mv.i));
                set_mid(mv.j, hi.at(mv.j));
                break;
            case MatchArc::Kind::Cup:
                upper_moves.push_back(mv);
                break;
        }
    }
    lower_moves.push_back({MatchArc::Kind::Cap, col_a, col_b});
    set_mid(col_a, BlockSym::X);  // keeps the position weight of the consumed star pair
    set_mid(col_b, BlockSym::O);
    upper_moves.push_back({MatchArc::Kind::Cup, col_a, col_b});
    Block mid(start, std::move(mid_syms));
    Matching lower(lo, mid, std::move(lower_moves));
    Matching upper(mid, hi, std::move(upper_moves));

    std::vector<Block> blocks2;
    std::vector<Matching> layers2;
    for (int k = 0; k < m.layer_count(); ++k) {
        blocks2.push_back(m.blocks()[k]);
        if (k == layer) {
            blocks2.push_back(mid);
            layers2.push_back(lower);
            layers2.push_back(upper);
        } else {
            layers2.push_back(m.layer(k));
        }
    }
    blocks2.push_back(m.blocks().back());
    CompositeMatching m2(blocks2, layers2);

    ReverseSurgeryResult res{m2, {}};
    for (const auto& [xb, xs] : x.terms()) {
        StackedDiagram d = xb.diagram(m);
        Orientation o = orientation_from_weights(d, xb.mids());
        SurgeryStep st = reverse_surgery_step(d, o, layer, col_a, col_b, SurgeryRules::reverse());
        for (const auto& [o2, s2] : st.branches) {
            std::vector<Weight> ws = orientation_weights(st.result, o2);
            Weight wm;
            for (int c = mid.start(); c < mid.end(); ++c)
                if (mid.at(c) == BlockSym::X) wm.set(c, WeightSym::X);
            for (int c : mid.star_positions()) {
                WeightSym sym = WeightSym::O;
                bool found = false;
                for (const MatchArc& mv : lower.moves()) {
                    if (mv.kind == MatchArc::Kind::ShiftRight && mv.j == c) {
                        sym = ws[layer].at(mv.i);
                        found = true;
                    } else if (mv.kind == MatchArc::Kind::ShiftLeft && mv.i == c) {
                        sym = ws[layer].at(mv.j);
                        found = true;
                    }
                }
                if (!found) sym = ws[layer + 1].at(c);  // a vertical passes straight through
                wm.set(c, sym);
            }
            std::vector<Weight> mids2;
            for (int k = 0; k <= layer; ++k) mids2.push_back(ws[k]);
            mids2.push_back(wm);
            for (int k = layer + 1; k <= m.layer_count(); ++k) mids2.push_back(ws[k]);
            res.element.add(BimodBasis(m2, xb.cup(), std::move(mids2), xb.cap()), xs * s2);
        }
    }
    return res;
}

}  // namespace arcalg
