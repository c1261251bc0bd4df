#include "arcalg/coeffmap.hpp"

#include <sstream>

#include "arcalg/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arcalg {

namespace {

long long left_p(const StackedDiagram& d, int arc) {
    auto [u, v] = d.endpoints(arc);
    int pu = d.p(u), pv = d.p(v);
    return std::min(pu, pv);
}

}  // namespace

SymbolicScalar circle_coeff(CoeffKind kind, const StackedDiagram& d, int circle, bool clockwise) {
    auto cls = d.classify(circle);
    long long e = 0;   // eps exponent
    long long w = 0;   // omega exponent
    if (kind == CoeffKind::Algebra || kind == CoeffKind::Bimodule) {
        for (int a : cls.icup) {
            long long s = d.saddle_width(a), p = left_p(d, a);
            e += (s + 1) * p;
            w -= s;
        }
        for (int a : cls.icap) {
            long long s = d.saddle_width(a), p = left_p(d, a);
            e += s * (p + 1);
            w += s - 1;
        }
        if (kind == CoeffKind::Bimodule) {
            for (int a : cls.eright) e += left_p(d, a);
            for (int a : cls.eleft) e += left_p(d, a) + 1;
            w += static_cast<long long>(cls.eright.size() + cls.eleft.size());
        }
    } else {
        for (int a : cls.ecup) {
            long long s = d.saddle_width(a), p = left_p(d, a);
            e += s * (p + 1);
            w += -s + 1;
        }
        for (int a : cls.ecap) {
            long long s = d.saddle_width(a), p = left_p(d, a);
            e += (s + 1) * p;
            w += s;
        }
        for (int a : cls.iright) e += left_p(d, a) + 1;
        for (int a : cls.ileft) e += left_p(d, a);
        w += static_cast<long long>(cls.iright.size() + cls.ileft.size());
    }
    if (clockwise) e += d.rightmost(circle);
    return SymbolicScalar::unit_monomial(0, w, e);
}

SymbolicScalar diagram_coeff(CoeffKind kind, const StackedDiagram& d, const Orientation& orient) {
    SymbolicScalar out = SymbolicScalar::one();
    for (size_t ci = 0; ci < d.circles().size(); ++ci)
        out *= circle_coeff(kind, d, static_cast<int>(ci), orient[ci]);
    return out;
}

SymbolicScalar basis_coeff(CoeffKind kind, const BasisDiagram& b) {
    StackedDiagram d = b.diagram();
    Orientation o = b.orientation(d);
    return diagram_coeff(kind, d, o);
}

ArcElement coeff_map(CoeffKind kind, const ArcElement& x) {
    ArcElement out;
    for (const auto& [b, s] : x.terms()) out.add(b, s * basis_coeff(kind, b));
    return out;
}

ArcElement coeff_map_inverse(CoeffKind kind, const ArcElement& x) {
    ArcElement out;
    for (const auto& [b, s] : x.terms()) out.add(b, s * basis_coeff(kind, b).inverse_unit());
    return out;
}

void SpecElement::add(BasisDiagram b, AlphaPoly c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) terms_.emplace(std::move(b), std::move(c));
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SpecElement operator+(const SpecElement& a, const SpecElement& b) {
    SpecElement r = a;
    for (const auto& [k, v] : b.terms_) r.add(k, v);
    return r;
}

std::string SpecElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") " << b.to_string();
    }
    return os.str();
}

SpecElement specialize(const Specialization& s, const ArcElement& x) {
    SpecElement out;
    for (const auto& [b, c] : x.terms()) out.add(b, s.apply(c));
    return out;
}

SpecElement spec_mult(const Specialization& s, const SpecElement& x, const SpecElement& y) {
    SpecElement out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) {
            if (!(bx.cap() == by.cup())) continue;
            ArcElement generic = mult_basis(bx, by);
            for (const auto& [b, c] : generic.terms()) out.add(b, s.apply(c) * cx * cy);
        }
    return out;
}

AlphaPoly iso_factor(const Specialization& source, const Specialization& target, CoeffKind kind,
                     const BasisDiagram& b) {
    SymbolicScalar c = basis_coeff(kind, b);
    AlphaPoly num = target.apply(c);
    AlphaPoly den = source.apply(c);
    // both are unit constants under a specialization
    GaussInt d = den.constant();
    if (!d.is_unit()) throw std::logic_error("coefficient did not specialize to a unit");
    GaussInt inv = d.is_real() ? d : d.conj();  // unit inverse
    return num * AlphaPoly(inv);
}

SpecElement iso_map(const Specialization& source, const Specialization& target, CoeffKind kind,
                    const ArcElement& x) {
    SpecElement out;
    for (const auto& [b, c] : x.terms()) out.add(b, target.apply(c) * iso_factor(source, target, kind, b));
    return out;
}

namespace {

// drop alpha from a surgery scalar, leaving the unit omega^m eps^j that the
// parameter-free multiplication lacks
SymbolicScalar unit_part(const SymbolicScalar& s) {
    if (!s.is_signed_monomial()) throw std::logic_error("surgery scalar is not a signed monomial");
    const auto& [m, c] = s.terms()[0];
    return SymbolicScalar(Monomial{0, m.w, m.e}, c);
}

}  // namespace

namespace {

IntertwineReport check_pair(const Block& blk, const BasisDiagram& x, const BasisDiagram& y,
                            bool corrupt_saddle) {
    IntertwineReport rep;
    MultTrace tr = mult_trace(x, y);
    for (size_t step = 0; step + 1 < tr.diagrams.size(); ++step) {
        const auto& before = tr.diagrams[step];
        const auto& after = tr.diagrams[step + 1];
        for (const auto& [o_before, s_before] : tr.branch_history[step]) {
            (void)s_before;
            auto [cap_arc, cup_arc] = leftmost_available_pair(before, 0);
            SurgeryStep st = surgery_step(before, o_before, cap_arc, cup_arc);
            for (const auto& [o_after, s_step] : st.branches) {
                SymbolicScalar lhs = diagram_coeff(CoeffKind::Algebra, before, o_before) * unit_part(s_step);
                if (corrupt_saddle) lhs *= SymbolicScalar::eps();
                SymbolicScalar rhs = diagram_coeff(CoeffKind::Algebra, after, o_after);
                ++rep.steps_checked;
                if (lhs != rhs) {
                    rep.ok = false;
                    if (rep.failure.empty()) {
                        std::ostringstream os;
                        os << "step identity failed on block " << blk.to_string() << ": " << lhs.to_string()
                           << " vs " << rhs.to_string();
                        rep.failure = os.str();
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace

IntertwineReport check_intertwine_algebra(const std::vector<Block>& scope, bool corrupt_saddle, bool parallel) {
    IntertwineReport rep;
    std::vector<std::tuple<const Block*, BasisDiagram, BasisDiagram>> pairs;
    std::vector<std::vector<BasisDiagram>> bases;
    bases.reserve(scope.size());
    for (const Block& blk : scope) {
        bases.push_back(basis(blk));
        for (const auto& x : bases.back())
            for (const auto& y : bases.back())
                if (x.cap() == y.cup()) pairs.push_back({&blk, x, y});
    }
    auto merge = [&rep](const IntertwineReport& r) {
        rep.steps_checked += r.steps_checked;
        if (!r.ok && rep.ok) {
            rep.ok = false;
            rep.failure = r.failure;
        }
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel num_threads(thread_count())
        {
            IntertwineReport local;
#pragma omp for schedule(dynamic) nowait
            for (long k = 0; k < static_cast<long>(pairs.size()); ++k) {
                const auto& [blk, x, y] = pairs[k];
                IntertwineReport r = check_pair(*blk, x, y, corrupt_saddle);
                local.steps_checked += r.steps_checked;
                if (!r.ok && local.ok) {
                    local.ok = false;
                    local.failure = r.failure;
                }
            }
#pragma omp critical
            merge(local);
        }
        return rep;
#endif
    }
    for (const auto& [blk, x, y] : pairs) merge(check_pair(*blk, x, y, corrupt_saddle));
    return rep;
}

std::vector<ArcElement> mult_table(const Block& b, bool parallel) {
    auto bs = basis(b);
    size_t n = bs.size();
    std::vector<ArcElement> out(n * n);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (long k = 0; k < static_cast<long>(n * n); ++k) {
            size_t i = static_cast<size_t>(k) / n, j = static_cast<size_t>(k) % n;
            if (bs[i].cap() == bs[j].cup()) out[k] = mult_basis(bs[i], bs[j]);
        }
        return out;
#endif
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (bs[i].cap() == bs[j].cup()) out[i * n + j] = mult_basis(bs[i], bs[j]);
    return out;
}

bool check_chi_factorization(const StackedDiagram& d, std::string* failure) {
    for (size_t ci = 0; ci < d.circles().size(); ++ci) {
        auto cls = d.classify(ci);
        for (bool cw : {false, true}) {
            SymbolicScalar rev = circle_coeff(CoeffKind::Reverse, d, static_cast<int>(ci), cw);
            SymbolicScalar fwd = circle_coeff(CoeffKind::Bimodule, d, static_cast<int>(ci), cw);
            // chi via cups
            long long e1 = 0;
            for (int a : cls.icup) e1 += left_p(d, a) + d.saddle_width(a);
            for (int a : cls.ecup) e1 += left_p(d, a) + d.saddle_width(a);
            long long w1 = static_cast<long long>(cls.icup.size() + cls.ecup.size());
            SymbolicScalar chi_cups = SymbolicScalar::unit_monomial(0, w1, e1 % 2);
            // chi via caps plus one sign per classified shift arc
            long long e2 = 0;
            for (int a : cls.icap) e2 += left_p(d, a) + d.saddle_width(a);
            for (int a : cls.ecap) e2 += left_p(d, a) + d.saddle_width(a);
            e2 += static_cast<long long>(cls.eright.size() + cls.eleft.size() + cls.iright.size() +
                                         cls.ileft.size());
            long long w2 = static_cast<long long>(cls.icap.size() + cls.ecap.size());
            SymbolicScalar chi_caps = SymbolicScalar::unit_monomial(0, w2, e2 % 2);
            if (chi_cups != chi_caps || rev != fwd * chi_cups) {
                if (failure) {
                    std::ostringstream os;
                    os << "chi factorization failed on circle " << ci << " (cw=" << cw << "): rev "
                       << rev.to_string() << ", fwd " << fwd.to_string() << ", chi " << chi_cups.to_string()
                       << " / " << chi_caps.to_string();
                    *failure = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace arcalg

namespace arcalg {

SymbolicScalar bimod_coeff(CoeffKind kind, const CompositeMatching& m, const BimodBasis& b) {
    StackedDiagram d = b.diagram(m);
    Orientation o = orientation_from_weights(d, b.mids());
    return diagram_coeff(kind, d, o);
}

IntertwineReport check_intertwine_bimodule(const CompositeMatching& m) {
    IntertwineReport rep;
    auto left_basis = basis(m.bottom());
    for (const BimodBasis& x : bimodule_basis(m)) {
        SymbolicScalar cm = bimod_coeff(CoeffKind::Bimodule, m, x);
        for (const BasisDiagram& a : left_basis) {
            if (!(a.cap() == x.cup())) continue;
            SymbolicScalar ca = basis_coeff(CoeffKind::Algebra, a);
            BimodElement prod = act_left(ArcElement(a), m, BimodElement(x));
            for (const auto& [term, s] : prod.terms()) {
                if (!s.is_signed_monomial()) {
                    rep.ok = false;
                    rep.failure = "action structure constant is not a signed monomial";
                    continue;
                }
                const auto& [mono, c] = s.terms()[0];
                SymbolicScalar alpha_part(Monomial{mono.a, 0, 0}, c);
                SymbolicScalar lhs = bimod_coeff(CoeffKind::Bimodule, m, term) * alpha_part;
                SymbolicScalar rhs = ca * cm * s;
                ++rep.steps_checked;
                if (lhs != rhs) {
                    rep.ok = false;
                    if (rep.failure.empty())
                        rep.failure = "bimodule intertwine failed: " + lhs.to_string() + " vs " + rhs.to_string();
                }
            }
        }
    }
    return rep;
}

IntertwineReport check_intertwine_reverse(const CompositeMatching& m) {
    IntertwineReport rep;
    for (const auto& [layer, a, bcol] : rmult_sites(m)) {
        for (const CupDiagram& cup : cup_diagrams(m.bottom()))
            for (const CapDiagram& cap : cup_diagrams(m.top())) {
                StackedDiagram d = matching_diagram(m, cup, cap);
                for (const Orientation& o : all_orientations(d)) {
                    SymbolicScalar before = diagram_coeff(CoeffKind::Reverse, d, o);
                    SurgeryStep st = reverse_surgery_step(d, o, layer, a, bcol, SurgeryRules::reverse());
                    for (const auto& [o2, s2] : st.branches) {
                        if (!s2.is_signed_monomial()) continue;
                        const auto& [mono, c] = s2.terms()[0];
                        SymbolicScalar unit(Monomial{0, mono.w, mono.e}, c);
                        SymbolicScalar after = diagram_coeff(CoeffKind::Reverse, st.result, o2);
                        ++rep.steps_checked;
                        if (after != before * unit) {
                            rep.ok = false;
                            if (rep.failure.empty())
                                rep.failure = "reverse square failed: " + after.to_string() + " vs " +
                                              (before * unit).to_string();
                        }
                    }
                }
            }
    }
    return rep;
}

}  // namespace arcalg
