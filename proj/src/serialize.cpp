#include "arcalg/serialize.hpp"

namespace arcalg {

json to_json(const SymbolicScalar& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms()) {
        terms.push_back({{"c", c.fits_int64() ? json(c.to_int64()) : json(c.to_string())},
                         {"a", m.a},
                         {"w", m.w},
                         {"e", m.e}});
    }
    return {{"terms", terms}};
}

SymbolicScalar scalar_from_json(const json& j) {
    SymbolicScalar s;
    for (const auto& t : j.at("terms")) {
        BigInt c = t.at("c").is_string() ? BigInt::from_string(t.at("c").get<std::string>())
                                         : BigInt(t.at("c").get<long long>());
        Monomial m{t.value("a", 0u), t.value("w", 0), static_cast<uint8_t>(t.value("e", 0) & 1)};
        s += SymbolicScalar(m, c);
    }
    return s;
}

json to_json(const CupDiagram& c) {
    json arr = json::array();
    for (auto [i, j] : c.cups()) arr.push_back({i, j});
    return arr;
}

CupDiagram cup_from_json(const json& j, const Block& b) {
    std::vector<std::pair<int, int>> cups;
    for (const auto& p : j) cups.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    return CupDiagram(b, std::move(cups));
}

json to_json(const StackedDiagram& d) {
    json lines = json::array();
    for (int k = 0; k < d.line_count(); ++k) lines.push_back(d.line(k).to_string());
    json rows = json::array();
    for (const Arc& a : d.arcs()) {
        const char* kinds[] = {"cup", "cap", "vertical", "shift"};
        rows.push_back({{"kind", kinds[static_cast<int>(a.kind)]}, {"line", a.line}, {"i", a.i}, {"j", a.j}});
    }
    return {{"lines", lines}, {"rows", rows}};
}

json to_json(const BasisDiagram& b) {
    return {{"cup", to_json(b.cup())},
            {"weight", b.mid().to_string()},
            {"cap", to_json(b.cap())},
            {"degree", b.degree()}};
}

BasisDiagram basis_from_json(const json& j, const Block& b) {
    CupDiagram cup = cup_from_json(j.at("cup"), b);
    CapDiagram cap = cup_from_json(j.at("cap"), b);
    Weight mid = Weight::parse(j.at("weight").get<std::string>(), b.start());
    return BasisDiagram(cup, mid, cap);
}

json to_json(const ArcElement& x) {
    json terms = json::array();
    std::string block;
    for (const auto& [b, s] : x.terms()) {
        block = b.block().to_string();
        json t = to_json(b);
        t["scalar"] = to_json(s);
        terms.push_back(std::move(t));
    }
    return {{"block", block}, {"terms", terms}};
}

ArcElement element_from_json(const json& j) {
    Block b = Block::parse(j.at("block").get<std::string>());
    ArcElement out;
    for (const auto& t : j.at("terms")) {
        BasisDiagram bd = basis_from_json(t, b);
        SymbolicScalar s = t.contains("scalar") ? scalar_from_json(t.at("scalar")) : SymbolicScalar::one();
        out.add(bd, s);
    }
    return out;
}

json to_json(const CompositeMatching& m) {
    json blocks = json::array();
    for (const Block& b : m.blocks()) blocks.push_back(b.to_string());
    json layers = json::array();
    for (int k = 0; k < m.layer_count(); ++k) {
        json moves = json::array();
        for (const MatchArc& mv : m.layer(k).moves()) {
            const char* kinds[] = {"shift-right", "shift-left", "cup", "cap"};
            moves.push_back({{"kind", kinds[static_cast<int>(mv.kind)]}, {"i", mv.i}, {"j", mv.j}});
        }
        layers.push_back({{"moves", moves}});
    }
    return {{"blocks", blocks}, {"layers", layers}};
}

CompositeMatching matching_from_json(const json& j) {
    std::vector<Block> blocks;
    int start = 0;
    for (const auto& b : j.at("blocks")) blocks.push_back(Block::parse(b.get<std::string>(), start));
    if (j.contains("moves")) {
        // basic-move form: a list of {sign, i, shape} chained from blocks[0]
        std::vector<Matching> layers;
        Block cur = blocks.at(0);
        std::vector<Block> chain{cur};
        for (const auto& mv : j.at("moves")) {
            int sign = mv.at("sign").is_string() ? (mv.at("sign").get<std::string>() == "+" ? 1 : -1)
                                                 : mv.at("sign").get<int>();
            Matching t = Matching::basic(cur, sign, mv.at("i").get<int>(), mv.at("shape").get<int>());
            cur = t.target();
            chain.push_back(cur);
            layers.push_back(std::move(t));
        }
        return CompositeMatching(chain, layers);
    }
    std::vector<Matching> layers;
    const auto& jl = j.at("layers");
    for (size_t k = 0; k < jl.size(); ++k) {
        std::vector<MatchArc> moves;
        for (const auto& mv : jl[k].at("moves")) {
            std::string kind = mv.at("kind").get<std::string>();
            MatchArc::Kind mk;
            if (kind == "shift-right") mk = MatchArc::Kind::ShiftRight;
            else if (kind == "shift-left") mk = MatchArc::Kind::ShiftLeft;
            else if (kind == "cup") mk = MatchArc::Kind::Cup;
            else if (kind == "cap") mk = MatchArc::Kind::Cap;
            else throw std::invalid_argument("bad move kind " + kind);
            moves.push_back({mk, mv.at("i").get<int>(), mv.at("j").get<int>()});
        }
        layers.push_back(Matching(blocks.at(k), blocks.at(k + 1), std::move(moves)));
    }
    return CompositeMatching(blocks, layers);
}

json to_json(const BimodBasis& b) {
    json mids = json::array();
    for (const Weight& w : b.mids()) mids.push_back(w.to_string());
    return {{"cup", to_json(b.cup())}, {"weights", mids}, {"cap", to_json(b.cap())}, {"degree", b.degree()}};
}

json to_json(const BimodElement& x) {
    json terms = json::array();
    for (const auto& [b, s] : x.terms()) {
        json t = to_json(b);
        t["scalar"] = to_json(s);
        terms.push_back(std::move(t));
    }
    return {{"terms", terms}};
}

json to_json(const HomologyResult& h) {
    json rows = json::array();
    for (const auto& [hq, g] : h.groups) {
        json torsion = json::array();
        for (const auto& t : g.torsion) torsion.push_back(t);
        rows.push_back({{"h", hq.first}, {"q", hq.second}, {"rank", g.free_rank}, {"torsion", torsion}});
    }
    return rows;
}

json poincare_json(const CubeComplex& c) {
    json rows = json::array();
    std::map<std::pair<int, int>, long long> counts;
    for (const auto& col : c.gens)
        for (const CubeGenerator& g : col) counts[{g.h, g.q}]++;
    for (const auto& [hq, n] : counts) rows.push_back({{"h", hq.first}, {"q", hq.second}, {"dim", n}});
    return rows;
}

json to_json(const Quiver& q) {
    json vertices = json::array();
    for (const Weight& w : q.vertices) vertices.push_back(w.to_string());
    json arrows = json::array();
    for (const BasisDiagram& a : q.arrows) arrows.push_back(to_json(a));
    json relations = json::array();
    for (const auto& rel : q.relations) {
        json terms = json::array();
        for (const auto& [b, s] : rel.value.terms()) {
            json t = to_json(b);
            t["scalar"] = to_json(s);
            terms.push_back(std::move(t));
        }
        relations.push_back({{"left", rel.left}, {"right", rel.right}, {"value", terms}});
    }
    return {{"vertices", vertices}, {"arrows", arrows}, {"relations", relations}};
}

}  // namespace arcalg
