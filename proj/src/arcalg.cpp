#include "arcalg/arcalg.hpp"

#include <sstream>

namespace arcalg {

BasisDiagram::BasisDiagram(CupDiagram cup, Weight mid, CapDiagram cap)
    : cup_(std::move(cup)), mid_(std::move(mid)), cap_(std::move(cap)) {
    if (cup_.block() != cap_.block()) throw BlockMismatch("cup and cap diagrams live on different blocks");
    StackedDiagram d = diagram();
    Orientation o = orientation_from_weights(d, {mid_});  // throws if not oriented
    degree_ = oriented_degree(d, o);
}

StackedDiagram BasisDiagram::diagram() const {
    std::vector<Arc> arcs;
    for (auto [i, j] : cup_.cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
    for (auto [i, j] : cap_.cups()) arcs.push_back({Arc::Kind::Cap, 0, i, j});
    return StackedDiagram({block()}, std::move(arcs));
}

std::string BasisDiagram::to_string() const {
    std::ostringstream os;
    os << cup_.to_string() << " " << mid_.to_string() << " " << cap_.to_string();
    return os.str();
}

void ArcElement::add(BasisDiagram b, SymbolicScalar s) {
    if (s.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(std::move(b), std::move(s));
    } else {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ArcElement operator+(const ArcElement& x, const ArcElement& y) {
    ArcElement r = x;
    for (const auto& [b, s] : y.terms_) r.add(b, s);
    return r;
}

ArcElement operator-(const ArcElement& x, const ArcElement& y) {
    ArcElement r = x;
    for (const auto& [b, s] : y.terms_) r.add(b, -s);
    return r;
}

ArcElement ArcElement::scaled(const SymbolicScalar& s) const {
    ArcElement r;
    for (const auto& [b, c] : terms_) r.add(b, c * s);
    return r;
}

std::string ArcElement::to_string() const {
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

std::vector<BasisDiagram> basis(const Block& b) {
    std::vector<BasisDiagram> out;
    if (!b.balanced()) return out;
    auto diagrams = cup_diagrams(b);
    for (const auto& cup : diagrams) {
        for (const auto& cap : diagrams) {
            std::vector<Arc> arcs;
            for (auto [i, j] : cup.cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
            for (auto [i, j] : cap.cups()) arcs.push_back({Arc::Kind::Cap, 0, i, j});
            StackedDiagram d({b}, std::move(arcs));
            for (const auto& o : all_orientations(d)) {
                Weight mid = orientation_weights(d, o)[0];
                out.push_back(BasisDiagram(cup, mid, cap));
            }
        }
    }
    return out;
}

ArcElement idempotent(const Weight& lambda) {
    CupDiagram c = underline(lambda);
    return ArcElement(BasisDiagram(c, lambda, c));
}

ArcElement unit(const Block& b) {
    ArcElement r;
    for (const Weight& w : cup_weights(b)) r = r + idempotent(w);
    return r;
}

namespace {

StackedDiagram stack_pair(const BasisDiagram& x, const BasisDiagram& y) {
    std::vector<Arc> arcs;
    for (auto [i, j] : x.cup().cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
    for (auto [i, j] : x.cap().cups()) arcs.push_back({Arc::Kind::Cap, 0, i, j});
    for (auto [i, j] : y.cup().cups()) arcs.push_back({Arc::Kind::Cup, 1, i, j});
    for (auto [i, j] : y.cap().cups()) arcs.push_back({Arc::Kind::Cap, 1, i, j});
    return StackedDiagram({x.block(), y.block()}, std::move(arcs));
}

ArcElement collapse(const StackedDiagram& d, const CupDiagram& bottom, const CapDiagram& top,
                    const std::vector<std::pair<Orientation, SymbolicScalar>>& branches) {
    ArcElement out;
    for (const auto& [o, s] : branches) {
        Weight mid = orientation_weights(d, o)[0];
        out.add(BasisDiagram(bottom, mid, top), s);
    }
    return out;
}

}  // namespace

ArcElement mult_basis(const BasisDiagram& x, const BasisDiagram& y) {
    if (x.block() != y.block()) throw BlockMismatch("product needs a common block");
    if (!(x.cap() == y.cup())) return {};
    StackedDiagram d = stack_pair(x, y);
    Orientation o = orientation_from_weights(d, {x.mid(), y.mid()});
    std::vector<std::pair<Orientation, SymbolicScalar>> branches{{o, SymbolicScalar::one()}};
    size_t steps = y.cup().cups().size();
    for (size_t k = 0; k < steps; ++k) {
        auto [cap_arc, cup_arc] = leftmost_available_pair(d, 0);
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
    return collapse(d, x.cup(), y.cap(), branches);
}

ArcElement mult(const ArcElement& x, const ArcElement& y) {
    ArcElement out;
    for (const auto& [bx, sx] : x.terms())
        for (const auto& [by, sy] : y.terms()) {
            if (!(bx.cap() == by.cup())) continue;
            ArcElement p = mult_basis(bx, by);
            for (const auto& [b, s] : p.terms()) out.add(b, s * sx * sy);
        }
    return out;
}

MultTrace mult_trace(const BasisDiagram& x, const BasisDiagram& y) {
    if (x.block() != y.block()) throw BlockMismatch("product needs a common block");
    if (!(x.cap() == y.cup())) throw InvalidPair("cap/cup mismatch, product is zero");
    MultTrace tr;
    StackedDiagram d = stack_pair(x, y);
    Orientation o = orientation_from_weights(d, {x.mid(), y.mid()});
    std::vector<std::pair<Orientation, SymbolicScalar>> branches{{o, SymbolicScalar::one()}};
    tr.diagrams.push_back(d);
    tr.branch_history.push_back(branches);
    size_t steps = y.cup().cups().size();
    for (size_t k = 0; k < steps; ++k) {
        auto [cap_arc, cup_arc] = leftmost_available_pair(d, 0);
        std::vector<std::pair<Orientation, SymbolicScalar>> next;
        StackedDiagram result;
        for (const auto& [orient, scalar] : branches) {
            SurgeryStep st = surgery_step(d, orient, cap_arc, cup_arc, SurgeryRules::algebra());
            for (auto& [o2, s2] : st.branches) next.push_back({o2, scalar * s2});
            result = std::move(st.result);
        }
        d = std::move(result);
        branches = std::move(next);
        tr.diagrams.push_back(d);
        tr.branch_history.push_back(branches);
    }
    return tr;
}

}  // namespace arcalg
