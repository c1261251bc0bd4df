#include "arcalg/genalg.hpp"

#include <algorithm>
#include <sstream>

namespace arcalg {

std::vector<Weight> block_weights(const Block& base, int ups) {
    std::vector<int> stars = base.star_positions();
    int n = static_cast<int>(stars.size());
    if (ups < 0 || ups > n) return {};
    std::vector<Weight> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != ups) continue;
        Weight w;
        for (int i = base.start(); i < base.end(); ++i)
            if (base.at(i) == BlockSym::X) w.set(i, WeightSym::X);
        for (int k = 0; k < n; ++k) w.set(stars[k], (mask >> k) & 1 ? WeightSym::Up : WeightSym::Down);
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

HullData m_hull(const Block& base, int base_up, int m) {
    for (int i = base.start(); i < base.end(); ++i)
        if (base.at(i) != BlockSym::O && (i < -m || i > m))
            throw MTooSmall("block symbol at position " + std::to_string(i) + " outside [-m, m]");
    int stars = base.star_count();
    if (base_up < 0 || base_up > stars) throw std::invalid_argument("bad up count");
    int xs = base.x_count();
    int up = base_up + xs;
    int down = (stars - base_up) + xs;

    HullData h;
    h.base = base;
    h.base_up = base_up;
    h.m = m;
    // hull block: base symbols plus `up` stars on the left, `down` on the right
    std::vector<BlockSym> syms;
    int lo = -m - up, hi = m + down;
    for (int i = lo; i <= hi; ++i) {
        if (i < -m || i > m) syms.push_back(BlockSym::Star);
        else syms.push_back(base.at(i));
    }
    h.hull = Block(lo, std::move(syms));
    for (const Weight& lam : block_weights(base, base_up)) {
        Weight cl;
        for (int i = lo; i <= hi; ++i) {
            if (i < -m) cl.set(i, WeightSym::Down);
            else if (i > m) cl.set(i, WeightSym::Up);
            else if (lam.at(i) != WeightSym::O) cl.set(i, lam.at(i));
            else if (base.at(i) == BlockSym::X) cl.set(i, WeightSym::X);
        }
        underline(cl);  // the closure must close with cups only
        h.closure.push_back(std::move(cl));
    }
    std::sort(h.closure.begin(), h.closure.end());
    return h;
}

HullData m_hull(const Block& base, int m) {
    if (base.star_count() % 2 != 0) throw std::invalid_argument("balanced base needed without an up count");
    return m_hull(base, base.star_count() / 2, m);
}

namespace {

bool in_closure(const HullData& h, const Weight& w) {
    return std::binary_search(h.closure.begin(), h.closure.end(), w);
}

}  // namespace

std::vector<BasisDiagram> ideal_basis(const HullData& h) {
    std::vector<BasisDiagram> out;
    for (const Weight& lam : h.closure)
        for (const Weight& mu : h.closure) {
            CupDiagram cup = underline(lam);
            CapDiagram cap = underline(mu);
            std::vector<Arc> arcs;
            for (auto [i, j] : cup.cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
            for (auto [i, j] : cap.cups()) arcs.push_back({Arc::Kind::Cap, 0, i, j});
            StackedDiagram d({h.hull}, std::move(arcs));
            for (const Orientation& o : all_orientations(d)) {
                Weight mid = orientation_weights(d, o)[0];
                if (!in_closure(h, mid)) out.push_back(BasisDiagram(cup, mid, cap));
            }
        }
    return out;
}

std::vector<BasisDiagram> quotient_basis(const HullData& h) {
    std::vector<BasisDiagram> out;
    for (const Weight& lam : h.closure)
        for (const Weight& mu : h.closure) {
            CupDiagram cup = underline(lam);
            CapDiagram cap = underline(mu);
            std::vector<Arc> arcs;
            for (auto [i, j] : cup.cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
            for (auto [i, j] : cap.cups()) arcs.push_back({Arc::Kind::Cap, 0, i, j});
            StackedDiagram d({h.hull}, std::move(arcs));
            for (const Orientation& o : all_orientations(d)) {
                Weight mid = orientation_weights(d, o)[0];
                if (in_closure(h, mid)) out.push_back(BasisDiagram(cup, mid, cap));
            }
        }
    return out;
}

namespace {

// alpha = 0: kill every term with a positive alpha exponent
SymbolicScalar drop_alpha(const SymbolicScalar& s) {
    SymbolicScalar out;
    for (const auto& [m, c] : s.terms())
        if (m.a == 0) out += SymbolicScalar(m, c);
    return out;
}

ArcElement reduce(const HullData& h, const ArcElement& x) {
    ArcElement out;
    for (const auto& [b, s] : x.terms()) {
        SymbolicScalar s0 = drop_alpha(s);
        if (s0.is_zero()) continue;
        if (in_closure(h, b.mid())) out.add(b, s0);
    }
    return out;
}

}  // namespace

ArcElement quotient_mult(const HullData& h, const ArcElement& x, const ArcElement& y) {
    return reduce(h, mult(x, y));
}

bool check_ideal_closure(const HullData& h, std::string* failure, bool alpha_zero) {
    std::vector<BasisDiagram> trunc;  // subalgebra basis: closure cup/cap, any middle
    for (const Weight& lam : h.closure)
        for (const Weight& mu : h.closure) {
            CupDiagram cup = underline(lam);
            CapDiagram cap = underline(mu);
            std::vector<Arc> arcs;
            for (auto [i, j] : cup.cups()) arcs.push_back({Arc::Kind::Cup, 0, i, j});
            for (auto [i, j] : cap.cups()) arcs.push_back({Arc::Kind::Cap, 0, i, j});
            StackedDiagram d({h.hull}, std::move(arcs));
            for (const Orientation& o : all_orientations(d))
                trunc.push_back(BasisDiagram(cup, orientation_weights(d, o)[0], cap));
        }
    std::vector<BasisDiagram> ideal = ideal_basis(h);
    auto is_ideal_elem = [&](const ArcElement& e) {
        for (const auto& [b, s] : e.terms()) {
            (void)s;
            if (in_closure(h, b.mid())) return false;
        }
        return true;
    };
    for (const BasisDiagram& x : trunc)
        for (const BasisDiagram& i : ideal) {
            for (bool left : {true, false}) {
                ArcElement prod = left ? mult(ArcElement(x), ArcElement(i)) : mult(ArcElement(i), ArcElement(x));
                ArcElement prod0;
                for (const auto& [b, s] : prod.terms()) {
                    SymbolicScalar s0 = alpha_zero ? drop_alpha(s) : s;
                    if (!s0.is_zero()) prod0.add(b, s0);
                }
                if (!is_ideal_elem(prod0)) {
                    if (failure) {
                        std::ostringstream os;
                        os << "ideal not closed: " << x.to_string() << (left ? " * " : " *' ") << i.to_string();
                        *failure = os.str();
                    }
                    return false;
                }
            }
        }
    return true;
}

Quiver quiver(const HullData& h) {
    Quiver q;
    q.vertices = h.closure;
    for (const BasisDiagram& b : quotient_basis(h))
        if (b.degree() == 1) q.arrows.push_back(b);
    for (size_t x = 0; x < q.arrows.size(); ++x)
        for (size_t y = 0; y < q.arrows.size(); ++y) {
            const BasisDiagram& a = q.arrows[x];
            const BasisDiagram& b = q.arrows[y];
            if (!(a.cap() == b.cup())) continue;
            Quiver::Relation rel;
            rel.left = x;
            rel.right = y;
            rel.value = quotient_mult(h, ArcElement(a), ArcElement(b));
            q.relations.push_back(std::move(rel));
        }
    return q;
}

}  // namespace arcalg
