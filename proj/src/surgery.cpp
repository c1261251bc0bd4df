#include "arcalg/surgery.hpp"

#include <algorithm>

namespace arcalg {

namespace {

SymbolicScalar eps_pow(long long k) { return SymbolicScalar::eps(k); }

// orientation transfer for circles untouched by the surgery: match by the
// vertex set, which the surgery never changes
Orientation carry_spectators(const StackedDiagram& before, const Orientation& orient, const StackedDiagram& after,
                             const std::vector<int>& touched_before) {
    Orientation out(after.circles().size(), false);
    for (size_t ci = 0; ci < after.circles().size(); ++ci) {
        Vertex v = after.circles()[ci].min_vertex();
        int old_ci = before.circle_of_vertex(v);
        if (std::find(touched_before.begin(), touched_before.end(), old_ci) == touched_before.end())
            out[ci] = orient[old_ci];
    }
    return out;
}

int quarter_sign_exponent(const StackedDiagram& d, int inner_circle) {
    int dist = d.circle_distance(inner_circle);
    if ((dist - 2) % 4 != 0)
        throw std::logic_error("circle distance " + std::to_string(dist) + " is not 2 mod 4");
    return (dist - 2) / 4;
}

Vertex t_vertex(const StackedDiagram& d, int ci) { return d.circles()[ci].rightmost_vertex(); }

}  // namespace

std::string to_string(SurgeryShape s) {
    switch (s) {
        case SurgeryShape::NonNestedMerge: return "non-nested merge";
        case SurgeryShape::NestedMerge: return "nested merge";
        case SurgeryShape::NonNestedSplit: return "non-nested split";
        case SurgeryShape::NestedSplit: return "nested split";
    }
    return "?";
}

std::vector<std::pair<int, int>> surgery_pairs(const StackedDiagram& d, int band) {
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < static_cast<int>(d.arcs().size()); ++c) {
        const Arc& cap = d.arc(c);
        if (cap.kind != Arc::Kind::Cap || cap.line != band) continue;
        for (int u = 0; u < static_cast<int>(d.arcs().size()); ++u) {
            const Arc& cup = d.arc(u);
            if (cup.kind == Arc::Kind::Cup && cup.line == band + 1 && cup.i == cap.i && cup.j == cap.j)
                out.push_back({c, u});
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                  return d.arc(a.first).i < d.arc(b.first).i;
              });
    return out;
}

std::pair<int, int> leftmost_available_pair(const StackedDiagram& d, int band) {
    auto pairs = surgery_pairs(d, band);
    if (pairs.empty()) throw InvalidPair("no surgery pair left in band " + std::to_string(band));
    for (const auto& p : pairs) {
        const Arc& cap = d.arc(p.first);
        bool nested_in_other = false;
        for (const auto& q : pairs) {
            if (q == p) continue;
            const Arc& other = d.arc(q.first);
            if (other.i < cap.i && cap.j < other.j) { nested_in_other = true; break; }
        }
        if (!nested_in_other) return p;  // pairs are sorted, so this is leftmost available
    }
    throw std::logic_error("no available surgery pair");
}

SurgeryClassification classify_surgery(const StackedDiagram& d, int cap_arc, int cup_arc) {
    const Arc& cap = d.arc(cap_arc);
    const Arc& cup = d.arc(cup_arc);
    if (cap.kind != Arc::Kind::Cap || cup.kind != Arc::Kind::Cup || cup.line != cap.line + 1 || cap.i != cup.i ||
        cap.j != cup.j)
        throw InvalidPair("not a symmetric cap/cup pair");
    int ca = d.circle_of_arc(cap_arc);
    int cb = d.circle_of_arc(cup_arc);
    SurgeryClassification cls;
    if (ca != cb) {
        bool ab = d.circle_inside(ca, cb), ba = d.circle_inside(cb, ca);
        cls.shape = (ab || ba) ? SurgeryShape::NestedMerge : SurgeryShape::NonNestedMerge;
        cls.first = ab ? ca : (ba ? cb : ca);  // inner first when nested
        cls.second = ab ? cb : (ba ? ca : cb);
    } else {
        StackedDiagram after = d.with_surgery(cap_arc, cup_arc);
        int ci = after.circle_of_vertex({cap.line, cap.i});
        int cj = after.circle_of_vertex({cap.line, cap.j});
        if (ci == cj) throw std::logic_error("surgery on one circle did not split it");
        bool ij = after.circle_inside(ci, cj), ji = after.circle_inside(cj, ci);
        if (ij || ji) {
            cls.shape = SurgeryShape::NestedSplit;
            cls.first = ij ? ci : cj;
            cls.second = ij ? cj : ci;
        } else {
            cls.shape = SurgeryShape::NonNestedSplit;
            cls.first = ci;
            cls.second = cj;
        }
    }
    return cls;
}

namespace {

// shared coefficient engine; the geometric edit has already produced `after`
// and located the pair columns (i, j) and the band
SurgeryStep run_step(const StackedDiagram& before, const Orientation& orient, StackedDiagram after, int band, int i,
                     int j, int saddle, const SurgeryRules& rules,
                     int cap_circle_before, int cup_circle_before) {
    SurgeryStep step{std::move(after), {}, {}};
    const StackedDiagram& d2 = step.result;

    if (cap_circle_before != cup_circle_before) {
        // ---- merge
        int ca = cap_circle_before, cb = cup_circle_before;
        bool a_in_b = before.circle_inside(ca, cb);
        bool b_in_a = before.circle_inside(cb, ca);
        bool nested = a_in_b || b_in_a;
        step.cls.shape = nested ? SurgeryShape::NestedMerge : SurgeryShape::NonNestedMerge;
        step.cls.first = nested ? (a_in_b ? ca : cb) : ca;
        step.cls.second = nested ? (a_in_b ? cb : ca) : cb;

        Orientation base = carry_spectators(before, orient, d2, {ca, cb});
        int merged = d2.circle_of_vertex({band, i});

        SymbolicScalar factor = SymbolicScalar::one();
        if (nested) {
            int q = quarter_sign_exponent(before, step.cls.first);
            factor = eps_pow(1 + q + saddle);
            if (rules.nested_merge_extra_eps) factor *= SymbolicScalar::eps();
        }
        bool oa = orient[ca], ob = orient[cb];
        if (!oa && !ob) {
            base[merged] = false;
            step.branches.push_back({base, factor});
        } else if (oa != ob) {
            int cw = oa ? ca : cb;
            int dd = d2.path_distance(merged, t_vertex(before, cw), t_vertex(d2, merged));
            base[merged] = true;
            step.branches.push_back({base, eps_pow(dd) * factor});
        } else {
            int da = d2.path_distance(merged, t_vertex(before, ca), t_vertex(d2, merged));
            int db = d2.path_distance(merged, t_vertex(before, cb), t_vertex(d2, merged));
            base[merged] = false;
            step.branches.push_back({base, SymbolicScalar::alpha() * eps_pow(da + db) * factor});
        }
        return step;
    }

    // ---- split
    int c0 = cap_circle_before;
    Orientation base = carry_spectators(before, orient, d2, {c0});
    int ci, cj;  // named circles per convention
    Vertex vi, vj;  // distinguished vertices for the ndot paths
    if (rules.split_naming == SurgeryRules::SplitNaming::Column) {
        ci = d2.circle_of_vertex({band, i});
        cj = d2.circle_of_vertex({band, j});
        vi = {band, i};
        vj = {band, j};
    } else {
        // bottom circle owns the new cap (left endpoint), top circle the new cup (right endpoint)
        ci = d2.circle_of_vertex({band, i});        // cap endpoints live on `band`
        cj = d2.circle_of_vertex({band + 1, j});    // cup endpoints live on `band`+1
        vi = {band, i};
        vj = {band + 1, j};
    }
    if (ci == cj) throw std::logic_error("split produced one circle");

    bool i_in_j = d2.circle_inside(ci, cj);
    bool j_in_i = d2.circle_inside(cj, ci);
    bool nested = i_in_j || j_in_i;
    bool cw = orient[c0];

    if (nested) {
        int cin = i_in_j ? ci : cj;
        int cout = i_in_j ? cj : ci;
        step.cls.shape = SurgeryShape::NestedSplit;
        step.cls.first = cin;
        step.cls.second = cout;
        int q = quarter_sign_exponent(d2, cin);
        if (!cw) {
            Orientation o1 = base; o1[cin] = true; o1[cout] = false;
            Orientation o2 = base; o2[cin] = false; o2[cout] = true;
            step.branches.push_back({o1, SymbolicScalar::omega() * eps_pow(q)});
            step.branches.push_back({o2, SymbolicScalar::eps() * SymbolicScalar::omega() * eps_pow(q)});
        } else {
            Orientation o1 = base; o1[cin] = true; o1[cout] = true;
            Orientation o2 = base; o2[cin] = false; o2[cout] = false;
            step.branches.push_back({o1, SymbolicScalar::omega() * eps_pow(q)});
            step.branches.push_back(
                {o2, SymbolicScalar::alpha() * SymbolicScalar::eps() * SymbolicScalar::omega() * eps_pow(q)});
        }
        return step;
    }

    step.cls.shape = SurgeryShape::NonNestedSplit;
    step.cls.first = ci;
    step.cls.second = cj;
    int di_ndot = d2.path_distance(ci, vi, t_vertex(d2, ci));
    int dj_ndot = d2.path_distance(cj, vj, t_vertex(d2, cj));
    if (!cw) {
        Orientation o1 = base; o1[ci] = true; o1[cj] = false;
        Orientation o2 = base; o2[ci] = false; o2[cj] = true;
        step.branches.push_back({o1, SymbolicScalar::omega() * eps_pow(di_ndot + saddle)});
        step.branches.push_back(
            {o2, SymbolicScalar::eps() * SymbolicScalar::omega() * eps_pow(dj_ndot + saddle)});
    } else {
        int dj_dot = before.path_distance(c0, t_vertex(before, c0), t_vertex(d2, cj));
        Orientation o1 = base; o1[ci] = true; o1[cj] = true;
        Orientation o2 = base; o2[ci] = false; o2[cj] = false;
        step.branches.push_back({o1, SymbolicScalar::omega() * eps_pow(dj_dot + di_ndot + saddle)});
        step.branches.push_back({o2, SymbolicScalar::alpha() * SymbolicScalar::eps() * SymbolicScalar::omega() *
                                         eps_pow(dj_dot + dj_ndot + saddle)});
    }
    return step;
}

}  // namespace

SurgeryStep surgery_step(const StackedDiagram& d, const Orientation& orient, int cap_arc, int cup_arc,
                         const SurgeryRules& rules) {
    const Arc& cap = d.arc(cap_arc);
    const Arc& cup = d.arc(cup_arc);
    if (cap.kind != Arc::Kind::Cap || cup.kind != Arc::Kind::Cup || cup.line != cap.line + 1 || cap.i != cup.i ||
        cap.j != cup.j)
        throw InvalidPair("not a symmetric cap/cup pair");
    // a pair nested inside another unsurgered pair of the band would need the
    // mirrored-C coefficients, which the leftmost order never produces
    for (const auto& [c2, u2] : surgery_pairs(d, cap.line)) {
        (void)u2;
        const Arc& other = d.arc(c2);
        if (other.i < cap.i && cap.j < other.j)
            throw CShapeUnsupported("surgery pair nested inside another pair");
    }
    int saddle = d.saddle_width(cup_arc);
    StackedDiagram after = d.with_surgery(cap_arc, cup_arc);
    return run_step(d, orient, std::move(after), cap.line, cap.i, cap.j, saddle, rules, d.circle_of_arc(cap_arc),
                    d.circle_of_arc(cup_arc));
}

SurgeryStep reverse_surgery_step(const StackedDiagram& d, const Orientation& orient, int band, int i, int j,
                                 const SurgeryRules& rules) {
    if (i > j) std::swap(i, j);
    StackedDiagram after = d.with_reverse_surgery(band, i, j);
    // the new cup is the last arc added by with_reverse_surgery
    int new_cup = static_cast<int>(after.arcs().size()) - 1;
    int saddle = after.saddle_width(new_cup);
    int ca = d.circle_of_vertex({band, i});
    int cb = d.circle_of_vertex({band + 1, j});
    // careful: before the reverse surgery the verticals at i and j define
    // the circles; the cap side is the one through column i's vertical
    int circle_vi = d.circle_of_vertex({band, i});
    int circle_vj = d.circle_of_vertex({band, j});
    (void)ca;
    (void)cb;
    return run_step(d, orient, std::move(after), band, i, j, saddle, rules, circle_vi, circle_vj);
}

}  // namespace arcalg
