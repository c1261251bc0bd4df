// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (tolerance zero). Exit code 0 only if every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "arcalg/genalg.hpp"
#include "arcalg/homology.hpp"

using namespace arcalg;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

void criterion(int n, const char* name, const std::function<bool()>& body) {
    notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[criterion %d] %s  (%.2fs)  %s\n", n, ok ? "PASS" : "FAIL", secs, name);
    if (!ok) {
        ++failures;
        for (const auto& s : notes) std::printf("    note: %s\n", s.c_str());
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    }
    std::fflush(stdout);
}

bool expect(bool cond, const std::string& what) {
    if (!cond) note(what);
    return cond;
}

BasisDiagram bd(const std::string& cup_w, const std::string& mid, const std::string& cap_w) {
    return BasisDiagram(underline(Weight::parse(cup_w)), Weight::parse(mid), underline(Weight::parse(cap_w)));
}

SymbolicScalar eomega(long long e, long long w) { return SymbolicScalar::unit_monomial(0, w, e); }

// balanced blocks with at most three stars and one x, width at most five
std::vector<Block> scope3() {
    std::vector<Block> out;
    std::vector<std::string> seen;
    std::string alphabet = "ox*";
    for (int len = 0; len <= 5; ++len) {
        std::vector<int> idx(len, 0);
        while (true) {
            std::string s;
            for (int k : idx) s.push_back(alphabet[k]);
            int st = static_cast<int>(std::count(s.begin(), s.end(), '*'));
            int xs = static_cast<int>(std::count(s.begin(), s.end(), 'x'));
            bool trimmed = s.empty() || (s.front() != 'o' && s.back() != 'o');
            if (trimmed && st % 2 == 0 && st <= 3 && xs <= 1 &&
                std::find(seen.begin(), seen.end(), s) == seen.end()) {
                seen.push_back(s);
                out.push_back(Block::parse(s));
            }
            int k = len - 1;
            while (k >= 0 && idx[k] == 2) idx[k--] = 0;
            if (k < 0) break;
            ++idx[k];
        }
    }
    return out;
}

std::vector<CompositeMatching> matchings3() {
    std::vector<CompositeMatching> out;
    for (const Block& b : scope3()) {
        if (b.star_count() == 0) continue;
        out.push_back(CompositeMatching({b, b}, {Matching::identity(b)}));
        for (int i = b.start() - 1; i < b.end(); ++i)
            for (int sign : {+1, -1})
                for (int shape = 1; shape <= 4; ++shape) {
                    try {
                        Matching t = Matching::basic(b, sign, i, shape);
                        out.push_back(CompositeMatching({b, t.target()}, {t}));
                    } catch (const std::invalid_argument&) {
                    }
                }
    }
    return out;
}

StackedDiagram nested_merge_small() {
    std::vector<Arc> arcs = {
        {Arc::Kind::Cup, 0, 0, 3},  {Arc::Kind::Cup, 0, 1, 2},      {Arc::Kind::Cap, 0, 1, 2},
        {Arc::Kind::Vertical, 0, 0, 0}, {Arc::Kind::Vertical, 0, 3, 3}, {Arc::Kind::Cup, 1, 1, 2},
        {Arc::Kind::Cap, 1, 0, 1},  {Arc::Kind::Cap, 1, 2, 3},
    };
    return StackedDiagram({Block::parse("****"), Block::parse("****")}, std::move(arcs));
}

StackedDiagram nested_merge_large() {
    std::vector<Arc> arcs = {
        {Arc::Kind::Cup, 0, 0, 5},  {Arc::Kind::Cup, 0, 1, 4},      {Arc::Kind::Cup, 0, 2, 3},
        {Arc::Kind::Cap, 0, 1, 2},  {Arc::Kind::Cap, 0, 3, 4},      {Arc::Kind::Vertical, 0, 0, 0},
        {Arc::Kind::Vertical, 0, 5, 5}, {Arc::Kind::Cup, 1, 3, 4},  {Arc::Kind::Cap, 1, 0, 3},
        {Arc::Kind::Cap, 1, 4, 5},
    };
    return StackedDiagram({Block::parse("******"), Block::parse("*xo***")}, std::move(arcs));
}

// ---------------------------------------------------------------- criteria

bool criterion1() {
    bool ok = true;
    // plain non-nested merge: e e = e with coefficient one
    BasisDiagram e = bd("v^", "v^", "v^");
    ok &= expect(mult_trace(e, e).diagrams[0].circles().size() == 2, "merge input needs two circles");
    ok &= expect(mult_basis(e, e) == ArcElement(e), "e*e != e");

    // nested merges with coefficients 1 and eps
    {
        BasisDiagram a = bd("vv^^", "vv^^", "vv^^");
        BasisDiagram b = bd("vv^^", "v^v^", "v^v^");
        MultTrace tr = mult_trace(a, b);
        const StackedDiagram& d1 = tr.diagrams[1];
        auto [cap_arc, cup_arc] = leftmost_available_pair(d1, 0);
        auto cls = classify_surgery(d1, cap_arc, cup_arc);
        ok &= expect(cls.shape == SurgeryShape::NestedMerge, "expected a nested merge");
        ok &= expect(d1.circle_distance(cls.first) == 2, "inner distance 2");
        SurgeryStep st = surgery_step(d1, Orientation(d1.circles().size(), false), cap_arc, cup_arc);
        ok &= expect(st.branches.size() == 1 && st.branches[0].second == SymbolicScalar::one(),
                     "nested merge coefficient 1");
    }
    {
        StackedDiagram d3 = nested_merge_large();
        auto cls = classify_surgery(d3, 4, 7);
        ok &= expect(cls.shape == SurgeryShape::NestedMerge && d3.circle_distance(cls.first) == 6,
                     "inner distance 6");
        SurgeryStep st = surgery_step(d3, Orientation(2, false), 4, 7);
        ok &= expect(st.branches.size() == 1 && st.branches[0].second == SymbolicScalar::eps(),
                     "nested merge coefficient eps");
    }

    SymbolicScalar ew = SymbolicScalar::eps() * SymbolicScalar::omega();
    SymbolicScalar om = SymbolicScalar::omega();
    SymbolicScalar al = SymbolicScalar::alpha();
    // H shape: eps w + eps^3 w, dotted variant eps w + alpha eps^3 w
    {
        BasisDiagram x = bd("v^v^", "v^v^", "vv^^");
        BasisDiagram y = bd("vv^^", "v^v^", "v^v^");
        ArcElement expect_xy(bd("v^v^", "^vv^", "v^v^"), ew);
        expect_xy = expect_xy + ArcElement(bd("v^v^", "v^^v", "v^v^"), eomega(3, 1));
        ok &= expect(mult_basis(x, y) == expect_xy, "H shape anticlockwise");
        BasisDiagram xc = bd("v^v^", "^v^v", "vv^^");
        ArcElement expect_xc(bd("v^v^", "^v^v", "v^v^"), ew);
        expect_xc = expect_xc + ArcElement(bd("v^v^", "v^v^", "v^v^"), al * eomega(3, 1));
        ok &= expect(mult_basis(xc, y) == expect_xc, "H shape clockwise");
    }
    // C shape: w + eps w, dotted variant w + alpha eps w
    {
        BasisDiagram u = bd("vv^^", "v^v^", "v^v^");
        BasisDiagram w = bd("v^v^", "v^v^", "vv^^");
        ArcElement expect_uw(bd("vv^^", "v^v^", "vv^^"), om);
        expect_uw = expect_uw + ArcElement(bd("vv^^", "^v^v", "vv^^"), ew);
        ok &= expect(mult_basis(u, w) == expect_uw, "C shape anticlockwise");
        BasisDiagram uc = bd("vv^^", "^v^v", "v^v^");
        ArcElement expect_uc(bd("vv^^", "^^vv", "vv^^"), om);
        expect_uc = expect_uc + ArcElement(bd("vv^^", "vv^^", "vv^^"), al * ew);
        ok &= expect(mult_basis(uc, w) == expect_uc, "C shape clockwise");
    }
    return ok;
}

bool criterion2() {
    bool ok = true;
    // circle coefficients of the nested-merge picture and the step identity
    StackedDiagram d3 = nested_merge_large();
    int inner = -1, outer = -1;
    for (int c = 0; c < 2; ++c) (d3.circle_inside(c, 1 - c) ? inner : outer) = c;
    ok &= expect(circle_coeff(CoeffKind::Algebra, d3, outer, false) == eomega(0, -1), "coeff(C_out) = w^-1");
    ok &= expect(circle_coeff(CoeffKind::Algebra, d3, inner, false) == eomega(0, -1), "coeff(C_in) = w^-1");
    StackedDiagram d4 = d3.with_surgery(4, 7);
    ok &= expect(circle_coeff(CoeffKind::Algebra, d4, 0, false) == eomega(1, -2), "coeff(C) = eps w^-2");
    SurgeryStep st = surgery_step(d3, Orientation(2, false), 4, 7);
    ok &= expect(circle_coeff(CoeffKind::Algebra, d3, outer, false) *
                         circle_coeff(CoeffKind::Algebra, d3, inner, false) * st.branches[0].second ==
                     eomega(1, -2),
                 "step identity w^-1 w^-1 eps = eps w^-2");

    // reverse goldens: the tall circle carries eps w
    CompositeMatching ident2({Block::parse("**"), Block::parse("**")}, {Matching::identity(Block::parse("**"))});
    CupDiagram c2 = underline(Weight::parse("v^"));
    StackedDiagram tall = matching_diagram(ident2, c2, c2);
    ok &= expect(circle_coeff(CoeffKind::Reverse, tall, 0, false) ==
                     SymbolicScalar::eps() * SymbolicScalar::omega(),
                 "reverse coeff of tall circle");

    // displayed reverse split: w eps^1 on the bottom copy, eps w eps^1 on the
    // top copy, and the clockwise tags differ by exactly eps
    CompositeMatching ident4({Block::parse("****"), Block::parse("****")},
                             {Matching::identity(Block::parse("****"))});
    CupDiagram cup = underline(Weight::parse("v^v^"));
    CapDiagram cap = underline(Weight::parse("vv^^"));
    StackedDiagram d = matching_diagram(ident4, cup, cap);
    SurgeryStep split = reverse_surgery_step(d, Orientation{false}, 0, 1, 2, SurgeryRules::reverse());
    ok &= expect(split.branches.size() == 2, "reverse split has two branches");
    {
        // identify bottom (owns the new cap) and top circles
        const StackedDiagram& d2 = split.result;
        int bot = d2.circle_of_vertex({0, 1});
        int top = d2.circle_of_vertex({1, 1});
        SymbolicScalar bot_coeff, top_coeff;
        for (const auto& [o, s] : split.branches) (o[bot] ? bot_coeff : top_coeff) = s;
        ok &= expect(bot_coeff == SymbolicScalar::omega() * SymbolicScalar::eps(), "bottom copy w eps^1");
        ok &= expect(top_coeff == SymbolicScalar::eps() * SymbolicScalar::omega() * SymbolicScalar::eps(),
                     "top copy eps w eps^1");
        // the two clockwise taggings differ by eps under the reverse map
        SymbolicScalar rb = circle_coeff(CoeffKind::Reverse, d2, bot, true) *
                            circle_coeff(CoeffKind::Reverse, d2, top, false);
        SymbolicScalar rt = circle_coeff(CoeffKind::Reverse, d2, bot, false) *
                            circle_coeff(CoeffKind::Reverse, d2, top, true);
        ok &= expect(rt == rb * SymbolicScalar::eps(), "reverse values differ by eps");
        // commuting square on this example: rev-coeff(after) = rev-coeff(before) * unit(step)
        SymbolicScalar before = diagram_coeff(CoeffKind::Reverse, d, Orientation{false});
        for (const auto& [o, s] : split.branches) {
            SymbolicScalar after = diagram_coeff(CoeffKind::Reverse, d2, o);
            ok &= expect(after == before * s, "commuting square on the example");
        }
    }
    return ok;
}

bool criterion3() {
    bool ok = true;
    for (const Block& b : scope3()) {
        auto bs = basis(b);
        ArcElement one = unit(b);
        for (const auto& z : bs) {
            ok &= expect(mult(one, ArcElement(z)) == ArcElement(z), "left unit law");
            ok &= expect(mult(ArcElement(z), one) == ArcElement(z), "right unit law");
        }
        for (const Weight& lw : cup_weights(b))
            for (const Weight& mw : cup_weights(b)) {
                ArcElement p = mult(idempotent(lw), idempotent(mw));
                if (lw == mw) ok &= expect(p == idempotent(lw), "idempotent squared");
                else ok &= expect(p.is_zero(), "orthogonality");
            }
        size_t n = bs.size();
        std::vector<ArcElement> table(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (!(bs[i].cap() == bs[j].cup())) continue;
                table[i * n + j] = mult_basis(bs[i], bs[j]);
                for (const auto& [term, s] : table[i * n + j].terms()) {
                    ok &= expect(s.is_signed_monomial(), "structure constant is a signed monomial");
                    auto hd = s.homogeneous_degree();
                    ok &= expect(hd.has_value() && term.degree() + *hd == bs[i].degree() + bs[j].degree(),
                                 "degree additivity");
                }
            }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    ArcElement lhs = mult(table[i * n + j], ArcElement(bs[k]));
                    ArcElement rhs = mult(ArcElement(bs[i]), table[j * n + k]);
                    ok &= expect(lhs == rhs, "associativity");
                }
    }
    return ok;
}

bool criterion4() {
    bool ok = true;
    auto rep = check_intertwine_algebra(scope3(), false, true);
    ok &= expect(rep.ok && rep.steps_checked > 0, "stepwise intertwining: " + rep.failure);
    auto kbn = Specialization::named("kbn");
    auto bl = Specialization::named("bl");
    auto ca = Specialization::named("ca");
    for (const auto& [src, tgt] :
         std::vector<std::pair<Specialization, Specialization>>{{kbn, bl}, {bl, kbn}, {kbn, ca}, {ca, kbn}}) {
        for (const Block& blk : scope3()) {
            auto bs = basis(blk);
            for (const auto& p : bs)
                for (const auto& q : bs) {
                    SpecElement sx = iso_map(src, tgt, CoeffKind::Algebra, ArcElement(p));
                    SpecElement sy = iso_map(src, tgt, CoeffKind::Algebra, ArcElement(q));
                    SpecElement rhs = spec_mult(tgt, sx, sy);
                    SpecElement prod =
                        spec_mult(src, specialize(src, ArcElement(p)), specialize(src, ArcElement(q)));
                    SpecElement mapped;
                    for (const auto& [b, c] : prod.terms())
                        mapped.add(b, c * iso_factor(src, tgt, CoeffKind::Algebra, b));
                    ok &= expect(mapped == rhs, "iso multiplicativity " + src.name() + "->" + tgt.name());
                }
        }
    }
    return ok;
}

bool criterion5() {
    bool ok = true;
    // the rank six bimodule with its exact degrees
    Block lam = Block::parse("**ox");
    Matching t = Matching::basic(lam, +1, 2, 3);
    CompositeMatching rank6({lam, t.target()}, {t});
    auto bs6 = bimodule_basis(rank6);
    std::vector<int> degs;
    for (const auto& b : bs6) degs.push_back(b.degree());
    std::sort(degs.begin(), degs.end());
    ok &= expect(bs6.size() == 6, "rank 6");
    ok &= expect(degs == std::vector<int>{0, 1, 2, 2, 3, 4}, "degrees 0,2,2,4,1,3");

    std::vector<CompositeMatching> ms = matchings3();
    ms.push_back(rank6);
    for (const CompositeMatching& m : ms) {
        auto lb = basis(m.bottom());
        auto rb = basis(m.top());
        for (const BimodBasis& x : bimodule_basis(m)) {
            for (const auto& a : lb)
                for (const auto& c : rb) {
                    BimodElement lhs = act_right(m, act_left(ArcElement(a), m, BimodElement(x)), ArcElement(c));
                    BimodElement rhs = act_left(ArcElement(a), m, act_right(m, BimodElement(x), ArcElement(c)));
                    ok &= expect(lhs == rhs, "actions commute");
                }
        }
        for (const auto& [layer, a, bcol] : rmult_sites(m)) {
            for (const BimodBasis& x : bimodule_basis(m)) {
                auto rx = rmult(m, layer, a, bcol, BimodElement(x));
                for (const auto& g : lb) {
                    BimodElement lhs = rmult(m, layer, a, bcol, act_left(ArcElement(g), m, BimodElement(x))).element;
                    BimodElement rhs = act_left(ArcElement(g), rx.matching, rx.element);
                    ok &= expect(lhs == rhs, "rmult is a left module map");
                }
                for (const auto& g : rb) {
                    BimodElement lhs =
                        rmult(m, layer, a, bcol, act_right(m, BimodElement(x), ArcElement(g))).element;
                    BimodElement rhs = act_right(rx.matching, rx.element, ArcElement(g));
                    ok &= expect(lhs == rhs, "rmult is a right module map");
                }
            }
        }
    }
    return ok;
}

bool criterion6() {
    bool ok = true;
    // sweep: every stacked diagram of every product over the scope, plus
    // bimodule diagrams with shift arcs
    std::vector<StackedDiagram> sweep{nested_merge_small(), nested_merge_large()};
    for (const Block& b : scope3()) {
        auto bs = basis(b);
        for (const auto& x : bs)
            for (const auto& y : bs) {
                if (!(x.cap() == y.cup())) continue;
                MultTrace tr = mult_trace(x, y);
                for (auto& d : tr.diagrams) sweep.push_back(d);
            }
    }
    for (const CompositeMatching& m : matchings3())
        for (const CupDiagram& cup : cup_diagrams(m.bottom()))
            for (const CapDiagram& cap : cup_diagrams(m.top())) sweep.push_back(matching_diagram(m, cup, cap));

    for (const StackedDiagram& d : sweep) {
        for (size_t ci = 0; ci < d.circles().size(); ++ci) {
            auto cls = d.classify(static_cast<int>(ci));
            ok &= expect(cls.icup.size() + 1 == cls.ecap.size(), "icup + 1 = ecap");
            ok &= expect(cls.icap.size() + 1 == cls.ecup.size(), "icap + 1 = ecup");
            int tt = d.rightmost(static_cast<int>(ci));
            auto leftpos = [&](int arc) {
                auto [u, v] = d.endpoints(arc);
                return std::min(d.p(u), d.p(v));
            };
            for (int a : cls.icup) ok &= expect((leftpos(a) - tt) % 2 == 0, "icup parity");
            for (int a : cls.icap) ok &= expect((leftpos(a) - tt) % 2 == 0, "icap parity");
            for (int a : cls.ecup) ok &= expect((leftpos(a) - tt) % 2 != 0, "ecup parity");
            for (int a : cls.ecap) ok &= expect((leftpos(a) - tt) % 2 != 0, "ecap parity");
            for (int a : cls.eright) ok &= expect((leftpos(a) - tt) % 2 != 0, "eright parity");
            for (int a : cls.eleft) ok &= expect((leftpos(a) - tt) % 2 == 0, "eleft parity");
            for (int a : cls.ileft) ok &= expect((leftpos(a) - tt) % 2 != 0, "ileft parity");
            for (int a : cls.iright) ok &= expect((leftpos(a) - tt) % 2 == 0, "iright parity");
            int quarter = d.circle_distance(static_cast<int>(ci)) - 2;
            ok &= expect(quarter % 4 == 0, "circle distance is 2 mod 4");
            quarter /= 4;
            int s1 = 0, s2 = 0;
            for (int a : cls.icup) s1 += d.saddle_width(a);
            for (int a : cls.ecap) s1 += d.saddle_width(a) - 1;
            s1 += static_cast<int>(cls.ileft.size() + cls.iright.size());
            for (int a : cls.icap) s2 += d.saddle_width(a);
            for (int a : cls.ecup) s2 += d.saddle_width(a) - 1;
            s2 += static_cast<int>(cls.eleft.size() + cls.eright.size());
            ok &= expect(s1 == quarter && s2 == quarter, "saddle sums equal (d-2)/4");
        }
        std::string why;
        bool chi = check_chi_factorization(d, &why);
        if (!chi) note(why);
        ok &= chi;
    }
    return ok;
}

bool criterion7() {
    bool ok = true;
    HullData h = m_hull(Block::parse("**"), 2);
    ok &= expect(quotient_basis(h).size() == 5, "quotient rank 5");
    Quiver q = quiver(h);
    ok &= expect(q.arrows.size() == 2 && q.relations.size() == 2, "two arrows, two relations");
    int zeros = 0, loops = 0;
    for (const auto& rel : q.relations) {
        if (rel.value.is_zero()) { ++zeros; continue; }
        if (rel.value.terms().size() == 1) {
            const auto& [b, s] = *rel.value.terms().begin();
            if (b.degree() == 2 && b.cup() == b.cap() && s == SymbolicScalar::omega()) ++loops;
        }
    }
    ok &= expect(zeros == 1 && loops == 1, "relations: one zero, one omega loop");
    std::string why;
    ok &= expect(check_ideal_closure(h, &why), "ideal closure: " + why);
    HullData h3 = m_hull(Block::parse("**"), 3);
    auto table = [](const HullData& hh) {
        auto qb = quotient_basis(hh);
        std::vector<std::string> out;
        for (const auto& x : qb)
            for (const auto& y : qb) {
                ArcElement p = quotient_mult(hh, ArcElement(x), ArcElement(y));
                std::string row;
                for (const auto& [b, s] : p.terms()) {
                    size_t idx = std::find(qb.begin(), qb.end(), b) - qb.begin();
                    row += "[" + std::to_string(idx) + "]" + s.to_string() + ";";
                }
                out.push_back(row);
            }
        return out;
    };
    ok &= expect(table(h) == table(h3), "hull radius independence m in {2,3}");
    return ok;
}

using Table = std::map<std::pair<int, int>, long long>;

Table engine_table(const MorseWord& w, const std::string& spec, CoeffRing ring) {
    CubeComplex c = build_cube(w, Specialization::parse(spec));
    if (!c.d_squared_zero()) throw std::logic_error("d^2 != 0");
    HomologyResult h = homology(c, ring);
    Table t;
    for (const auto& [hq, g] : h.groups)
        if (g.free_rank) t[hq] = g.free_rank;
    return t;
}

bool criterion8() {
    bool ok = true;
    MorseWord unknot = MorseWord::parse("u0 n0");
    MorseWord hopf = MorseWord::parse("u0 u2 x+1 x+1 n2 n0");
    MorseWord trefoil = MorseWord::parse("u0 u2 x+1 x+1 x+1 n2 n0");
    ok &= expect(engine_table(unknot, "custom:0,1,1", CoeffRing::Q) ==
                     Table{{{0, -1}, 1}, {{0, 1}, 1}},
                 "unknot q + 1/q");
    ok &= expect(engine_table(hopf, "custom:0,1,1", CoeffRing::Q) ==
                     Table{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}},
                 "positive hopf over Q");
    ok &= expect(engine_table(trefoil, "custom:0,1,1", CoeffRing::Q) ==
                     Table{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}},
                 "right trefoil over Q");
    CubeComplex c = build_cube(trefoil, Specialization::parse("custom:0,1,1"));
    HomologyResult hz = homology(c, CoeffRing::Z);
    bool torsion_ok = false;
    for (const auto& [hq, g] : hz.groups) {
        if (hq == std::pair(3, 7)) torsion_ok = g.torsion == std::vector<std::string>{"2"};
        else if (!g.torsion.empty()) torsion_ok = false;
    }
    ok &= expect(torsion_ok, "trefoil Z/2 at (3,7) over Z");
    // d^2 = 0 for every cube built above and for the remaining specializations
    for (const char* spec : {"custom:0,1,1", "custom:0,-1,1", "custom:0,-1,i"})
        for (const MorseWord* w : {&unknot, &hopf, &trefoil})
            ok &= expect(build_cube(*w, Specialization::parse(spec)).d_squared_zero(), "d^2 = 0");
    // the rational minimal complex of the trefoil has total dimension four
    CubeComplex ef = gaussian_eliminate(c, true);
    long long total = 0;
    for (const auto& col : ef.gens) total += static_cast<long long>(col.size());
    ok &= expect(total == 4, "trefoil reduces to dimension 4 over Q");
    ok &= expect(homology(ef, CoeffRing::Q).groups == homology(c, CoeffRing::Q).groups,
                 "elimination preserves homology");
    return ok;
}

bool criterion9() {
    bool ok = true;
    auto table = [](const std::string& word, const char* spec, CoeffRing ring) {
        return engine_table(MorseWord::parse(word), spec, ring);
    };
    // R1, R2 (both strand patterns), R3; at most five crossings each
    ok &= expect(table("u0 u2 x+1 n2 n0", "custom:0,1,1", CoeffRing::Q) ==
                     table("u0 n0", "custom:0,1,1", CoeffRing::Q),
                 "R1 positive kink");
    ok &= expect(table("u0 u2 x-1 n2 n0", "custom:0,1,1", CoeffRing::Q) ==
                     table("u0 n0", "custom:0,1,1", CoeffRing::Q),
                 "R1 negative kink");
    ok &= expect(table("u0 u2 x+1 x-1 n2 n0", "custom:0,1,1", CoeffRing::Q) ==
                     table("u0 u2 n2 n0", "custom:0,1,1", CoeffRing::Q),
                 "R2 mixed");
    ok &= expect(table("u0 u2 u4 x+2 x-2 n4 n2 n0", "custom:0,1,1", CoeffRing::Q) ==
                     table("u0 u2 u4 n4 n2 n0", "custom:0,1,1", CoeffRing::Q),
                 "R2 on one cup");
    ok &= expect(table("u0 u2 u4 x+1 x+2 x+1 n4 n2 n0", "custom:0,1,1", CoeffRing::Q) ==
                     table("u0 u2 u4 x+2 x+1 x+2 n4 n2 n0", "custom:0,1,1", CoeffRing::Q),
                 "R3 braid move");
    // cross-specialization equality over Q(i), alpha = 0
    for (const char* word : {"u0 n0", "u0 u2 x+1 x+1 n2 n0", "u0 u2 x+1 x+1 x+1 n2 n0",
                             "u0 u2 x+1 x+1 x-0 x+1 n2 n0"}) {
        Table kbn = table(word, "custom:0,1,1", CoeffRing::Qi);
        Table bl = table(word, "custom:0,-1,1", CoeffRing::Qi);
        Table ca = table(word, "custom:0,-1,i", CoeffRing::Qi);
        ok &= expect(kbn == bl, std::string("kbn = bl on ") + word);
        ok &= expect(kbn == ca, std::string("kbn = ca on ") + word);
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "worked multiplication goldens (merge, nested merges, H and C shapes)", criterion1);
    criterion(2, "coefficient-map goldens and the reverse commuting square", criterion2);
    criterion(3, "algebra axioms, exhaustive over balanced blocks with <=3 stars and <=1 x", criterion3);
    criterion(4, "intertwining of every surgery step and iso multiplicativity", criterion4);
    criterion(5, "bimodule suite: rank six, commuting actions, rmult bimodule maps", criterion5);
    criterion(6, "counting, parity, saddle and chi lemmas on every swept circle", criterion6);
    criterion(7, "generalized algebra: quiver, ideal closure, hull independence", criterion7);
    criterion(8, "homology goldens: unknot, hopf, trefoil with integral torsion", criterion8);
    criterion(9, "reidemeister invariance and cross-specialization equality", criterion9);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
