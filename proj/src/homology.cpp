#include "arcalg/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arcalg {

MorseWord::MorseWord(std::vector<MorseToken> tokens) : tokens_(std::move(tokens)) {
    std::set<int> active;
    for (const MorseToken& t : tokens_) {
        switch (t.kind) {
            case MorseToken::Kind::Cup:
                if (active.count(t.pos) || active.count(t.pos + 1))
                    throw std::invalid_argument("cup on occupied strand positions");
                active.insert(t.pos);
                active.insert(t.pos + 1);
                break;
            case MorseToken::Kind::Cap:
                if (!active.count(t.pos) || !active.count(t.pos + 1))
                    throw std::invalid_argument("cap needs two active strands");
                active.erase(t.pos);
                active.erase(t.pos + 1);
                break;
            case MorseToken::Kind::PosCross:
            case MorseToken::Kind::NegCross:
                if (!active.count(t.pos) || !active.count(t.pos + 1))
                    throw std::invalid_argument("crossing needs two active strands");
                ++crossings_;
                if (t.kind == MorseToken::Kind::NegCross) ++negatives_;
                break;
        }
        if (active.size() % 2 != 0) throw std::invalid_argument("odd strand count");
    }
    closed_ = active.empty();
}

MorseWord MorseWord::parse(const std::string& text) {
    std::vector<MorseToken> tokens;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2) throw std::invalid_argument("bad morse token: " + tok);
        if (tok[0] == 'u') tokens.push_back({MorseToken::Kind::Cup, std::stoi(tok.substr(1))});
        else if (tok[0] == 'n') tokens.push_back({MorseToken::Kind::Cap, std::stoi(tok.substr(1))});
        else if (tok[0] == 'x' && tok[1] == '+') tokens.push_back({MorseToken::Kind::PosCross, std::stoi(tok.substr(2))});
        else if (tok[0] == 'x' && tok[1] == '-') tokens.push_back({MorseToken::Kind::NegCross, std::stoi(tok.substr(2))});
        else throw std::invalid_argument("bad morse token: " + tok);
    }
    return MorseWord(std::move(tokens));
}

MorseWord MorseWord::braid_closure(const std::vector<int>& braid, int strands) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    // closure template: cup pairs at (0,1), (2,3), ...; generator k crosses
    // the neighboring legs at positions 2k-1 and 2k
    std::vector<MorseToken> tokens;
    for (int k = 0; k < strands; ++k) tokens.push_back({MorseToken::Kind::Cup, 2 * k});
    for (int g : braid) {
        if (g == 0 || std::abs(g) >= strands) throw std::invalid_argument("bad braid generator");
        int pos = 2 * std::abs(g) - 1;
        tokens.push_back({g > 0 ? MorseToken::Kind::PosCross : MorseToken::Kind::NegCross, pos});
    }
    for (int k = strands - 1; k >= 0; --k) tokens.push_back({MorseToken::Kind::Cap, 2 * k});
    return MorseWord(std::move(tokens));
}

std::string MorseWord::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const MorseToken& t : tokens_) {
        if (!first) os << " ";
        first = false;
        switch (t.kind) {
            case MorseToken::Kind::Cup: os << "u" << t.pos; break;
            case MorseToken::Kind::Cap: os << "n" << t.pos; break;
            case MorseToken::Kind::PosCross: os << "x+" << t.pos; break;
            case MorseToken::Kind::NegCross: os << "x-" << t.pos; break;
        }
    }
    return os.str();
}

ResolvedDiagram resolve(const MorseWord& w, uint32_t resolution) {
    if (!w.closed()) throw NotClosed("homology needs a closed morse word");
    ResolvedDiagram out;
    std::set<int> active;
    std::vector<Block> lines;
    std::vector<Arc> arcs;
    auto block_of = [](const std::set<int>& act) {
        if (act.empty()) return Block();
        std::vector<BlockSym> syms;
        int lo = *act.begin(), hi = *act.rbegin();
        for (int c = lo; c <= hi; ++c) syms.push_back(act.count(c) ? BlockSym::Star : BlockSym::O);
        return Block(lo, std::move(syms));
    };
    lines.push_back(block_of(active));
    int cbit = 0;
    for (size_t k = 0; k < w.tokens().size(); ++k) {
        const MorseToken& t = w.tokens()[k];
        int band = static_cast<int>(k);
        auto verticals_except = [&](int skip_a, int skip_b) {
            for (int c : active)
                if (c != skip_a && c != skip_b) arcs.push_back({Arc::Kind::Vertical, band, c, c});
        };
        switch (t.kind) {
            case MorseToken::Kind::Cup:
                verticals_except(-1, -1);
                arcs.push_back({Arc::Kind::Cup, band + 1, t.pos, t.pos + 1});
                active.insert(t.pos);
                active.insert(t.pos + 1);
                break;
            case MorseToken::Kind::Cap:
                verticals_except(t.pos, t.pos + 1);
                arcs.push_back({Arc::Kind::Cap, band, t.pos, t.pos + 1});
                active.erase(t.pos);
                active.erase(t.pos + 1);
                break;
            case MorseToken::Kind::PosCross:
            case MorseToken::Kind::NegCross: {
                bool positive = t.kind == MorseToken::Kind::PosCross;
                int bit = (resolution >> cbit) & 1;
                bool cupcap = positive ? (bit == 1) : (bit == 0);
                out.crossing_band.push_back(band);
                if (cupcap) {
                    verticals_except(t.pos, t.pos + 1);
                    arcs.push_back({Arc::Kind::Cap, band, t.pos, t.pos + 1});
                    arcs.push_back({Arc::Kind::Cup, band + 1, t.pos, t.pos + 1});
                } else {
                    verticals_except(-1, -1);
                }
                out.hom_offset += positive ? 0 : -1;
                out.q_shift += positive ? 1 + bit : -2 + bit;
                ++cbit;
                break;
            }
        }
        lines.push_back(block_of(active));
    }
    out.diagram = StackedDiagram(std::move(lines), std::move(arcs));
    return out;
}

bool CubeComplex::d_squared_zero() const {
    for (size_t k = 0; k + 1 < diff.size(); ++k) {
        // compose diff[k+1] * diff[k]
        std::map<std::pair<int, int>, AlphaPoly> comp;
        for (const auto& [ij, a] : diff[k])
            for (const auto& [jl, b] : diff[k + 1]) {
                if (ij.second != jl.first) continue;
                auto key = std::pair(ij.first, jl.second);
                auto it = comp.find(key);
                if (it == comp.end()) comp.emplace(key, a * b);
                else it->second += a * b;
            }
        for (const auto& [ij, v] : comp)
            if (!v.is_zero()) return false;
    }
    return true;
}

std::map<int, long long> CubeComplex::euler() const {
    std::map<int, long long> e;
    for (size_t k = 0; k < gens.size(); ++k)
        for (const CubeGenerator& g : gens[k]) e[g.q] += (((g.h % 2) + 2) % 2 == 0) ? 1 : -1;
    return e;
}

CubeComplex build_cube(const MorseWord& w, const Specialization& spec) {
    if (!w.closed()) throw NotClosed("homology needs a closed morse word");
    if (spec.symbolic_target()) throw RingNotSupported("cube entries need a specialization with numeric images");
    int n = w.crossings();
    int nneg = w.negative_crossings();
    CubeComplex cube;
    cube.min_h = -nneg;
    cube.max_h = n - nneg;
    cube.gens.resize(n + 1);
    cube.diff.resize(n);

    std::vector<ResolvedDiagram> resolved(1u << n);
    std::vector<std::vector<int>> gen_index(1u << n);  // orientation mask -> index in gens[h]
    for (uint32_t r = 0; r < (1u << n); ++r) resolved[r] = resolve(w, r);

    for (uint32_t r = 0; r < (1u << n); ++r) {
        const ResolvedDiagram& rd = resolved[r];
        int circles = static_cast<int>(rd.diagram.circles().size());
        int h = static_cast<int>(__builtin_popcount(r)) + rd.hom_offset;
        gen_index[r].resize(1u << circles);
        for (uint32_t om = 0; om < (1u << circles); ++om) {
            CubeGenerator g;
            g.resolution = r;
            g.orientation = om;
            g.h = h;
            g.q = rd.q_shift;
            // anticlockwise carries +1: the merge unit must sit in the top
            // q-degree for the differentials to preserve q
            for (int c = 0; c < circles; ++c) g.q += ((om >> c) & 1) ? -1 : 1;
            gen_index[r][om] = static_cast<int>(cube.gens[h - cube.min_h].size());
            cube.gens[h - cube.min_h].push_back(g);
        }
    }

    // edge maps
    std::vector<MorseToken> cross_tokens;
    for (const MorseToken& t : w.tokens())
        if (t.kind == MorseToken::Kind::PosCross || t.kind == MorseToken::Kind::NegCross) cross_tokens.push_back(t);

    for (uint32_t r = 0; r < (1u << n); ++r) {
        const ResolvedDiagram& rd = resolved[r];
        int h = static_cast<int>(__builtin_popcount(r)) + rd.hom_offset;
        int circles = static_cast<int>(rd.diagram.circles().size());
        for (int k = 0; k < n; ++k) {
            if ((r >> k) & 1) continue;
            uint32_t r2 = r | (1u << k);
            const ResolvedDiagram& rd2 = resolved[r2];
            int band = rd.crossing_band[k];
            int pos = cross_tokens[k].pos;
            bool positive = cross_tokens[k].kind == MorseToken::Kind::PosCross;
            // Koszul sign: bits below k already set
            int sign = __builtin_popcount(r & ((1u << k) - 1)) % 2 ? -1 : 1;
            for (uint32_t om = 0; om < (1u << circles); ++om) {
                Orientation orient(circles);
                for (int c = 0; c < circles; ++c) orient[c] = (om >> c) & 1;
                SurgeryStep st;
                if (positive) {
                    // identity smoothing -> cup/cap: reverse surgery
                    st = reverse_surgery_step(rd.diagram, orient, band, pos, pos + 1, SurgeryRules::cube());
                } else {
                    // cup/cap -> identity smoothing: forward surgery at that pair
                    int cap_arc = -1, cup_arc = -1;
                    for (int a = 0; a < static_cast<int>(rd.diagram.arcs().size()); ++a) {
                        const Arc& arc = rd.diagram.arc(a);
                        if (arc.i == pos && arc.j == pos + 1) {
                            if (arc.kind == Arc::Kind::Cap && arc.line == band) cap_arc = a;
                            if (arc.kind == Arc::Kind::Cup && arc.line == band + 1) cup_arc = a;
                        }
                    }
                    st = surgery_step(rd.diagram, orient, cap_arc, cup_arc, SurgeryRules::algebra());
                }
                // match the resulting orientations against rd2's circle order
                if (!(st.result == rd2.diagram)) throw std::logic_error("cube edge diagram mismatch");
                for (const auto& [o2, s2] : st.branches) {
                    // the circles of st.result and rd2.diagram are both sorted
                    // by minimal vertex over the same vertex set
                    uint32_t om2 = 0;
                    for (size_t c = 0; c < o2.size(); ++c)
                        if (o2[c]) om2 |= (1u << c);
                    AlphaPoly entry = spec.apply(s2);
                    if (entry.is_zero()) continue;
                    if (sign < 0) entry = -entry;
                    auto key = std::pair(gen_index[r][om], gen_index[r2][om2]);
                    auto& mat = cube.diff[h - cube.min_h];
                    auto it = mat.find(key);
                    if (it == mat.end()) mat.emplace(key, entry);
                    else {
                        it->second += entry;
                        if (it->second.is_zero()) mat.erase(it);
                    }
                }
            }
        }
    }
    return cube;
}

CubeComplex gaussian_eliminate(const CubeComplex& c, bool over_field) {
    // mutable copy with alive flags
    CubeComplex out = c;
    std::vector<std::vector<bool>> alive(out.gens.size());
    for (size_t k = 0; k < out.gens.size(); ++k) alive[k].assign(out.gens[k].size(), true);

    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t k = 0; k < out.diff.size(); ++k) {
            // find an invertible entry between alive generators
            std::pair<int, int> pivot{-1, -1};
            AlphaPoly u;
            for (const auto& [ij, v] : out.diff[k]) {
                if (!alive[k][ij.first] || !alive[k + 1][ij.second]) continue;
                if (v.is_constant() && (over_field ? !v.constant().is_zero() : v.constant().is_unit())) {
                    pivot = ij;
                    u = v;
                    break;
                }
            }
            if (pivot.first < 0) continue;
            progress = true;
            int x = pivot.first, y = pivot.second;
            // collect row of x and column of y
            std::vector<std::pair<int, AlphaPoly>> row, col;
            for (const auto& [ij, v] : out.diff[k]) {
                if (!alive[k][ij.first] || !alive[k + 1][ij.second]) continue;
                if (ij.first == x && ij.second != y) row.push_back({ij.second, v});
                if (ij.second == y && ij.first != x) col.push_back({ij.first, v});
            }
            if (u.constant().is_unit()) {
                GaussInt g = u.constant();
                AlphaPoly uinv(g.is_real() ? g : g.conj());
                for (const auto& [a, va] : col)
                    for (const auto& [b, vb] : row) {
                        auto key = std::pair(a, b);
                        AlphaPoly delta = va * uinv * vb;
                        auto it = out.diff[k].find(key);
                        if (it == out.diff[k].end()) out.diff[k].emplace(key, -delta);
                        else {
                            it->second = it->second - delta;
                            if (it->second.is_zero()) out.diff[k].erase(it);
                        }
                    }
            } else {
                // fraction-free: rescale each affected source row by the pivot
                // (a chain isomorphism over the fraction field only)
                for (const auto& [a, va] : col) {
                    for (auto& [ij, v] : out.diff[k])
                        if (ij.first == a && alive[k + 1][ij.second]) v = v * u;
                    for (const auto& [b, vb] : row) {
                        auto key = std::pair(a, b);
                        AlphaPoly delta = va * vb;
                        auto it = out.diff[k].find(key);
                        if (it == out.diff[k].end()) out.diff[k].emplace(key, -delta);
                        else it->second = it->second - delta;
                    }
                    // entries of row a into the dead column y are now multiples
                    // of u but the column is removed anyway
                }
                // also the incoming differentials of row a must be rescaled to
                // keep d a chain map; equivalently rescale the basis vector a
                if (k > 0) {
                    for (const auto& [a, va] : col) {
                        (void)va;
                        for (auto& [ij, v] : out.diff[k - 1])
                            if (ij.second == a && alive[k - 1][ij.first]) v = v * u;
                    }
                }
                // drop freshly created zeros
                for (auto it = out.diff[k].begin(); it != out.diff[k].end();) {
                    if (it->second.is_zero()) it = out.diff[k].erase(it);
                    else ++it;
                }
            }
            alive[k][x] = false;
            alive[k + 1][y] = false;
        }
    }

    // compact: rebuild with only alive generators
    CubeComplex res;
    res.min_h = out.min_h;
    res.max_h = out.max_h;
    res.gens.resize(out.gens.size());
    res.diff.resize(out.diff.size());
    std::vector<std::vector<int>> remap(out.gens.size());
    for (size_t k = 0; k < out.gens.size(); ++k) {
        remap[k].assign(out.gens[k].size(), -1);
        for (size_t i = 0; i < out.gens[k].size(); ++i)
            if (alive[k][i]) {
                remap[k][i] = static_cast<int>(res.gens[k].size());
                res.gens[k].push_back(out.gens[k][i]);
            }
    }
    for (size_t k = 0; k < out.diff.size(); ++k)
        for (const auto& [ij, v] : out.diff[k]) {
            if (!alive[k][ij.first] || !alive[k + 1][ij.second] || v.is_zero()) continue;
            res.diff[k].emplace(std::pair(remap[k][ij.first], remap[k + 1][ij.second]), v);
        }
    return res;
}

namespace {

// dense matrix over the Gaussian rationals; returns the rank
int rank_field(std::vector<std::vector<GaussRational>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        GaussRational inv = GaussRational(BigRational(1)) / m[rank][c];
        for (int cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            GaussRational f = m[r][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] = m[r][cc] - f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// Smith normal form over the Gaussian integers (Z embeds as the real ones);
// returns the diagonal entries
std::vector<GaussInt> smith_diagonal(std::vector<std::vector<GaussInt>> m) {
    std::vector<GaussInt> diag;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int top = 0, left = 0;
    while (top < rows && left < cols) {
        // find a nonzero entry of minimal norm
        int pr = -1, pc = -1;
        BigInt best;
        for (int r = top; r < rows; ++r)
            for (int c = left; c < cols; ++c) {
                if (m[r][c].is_zero()) continue;
                BigInt nn = m[r][c].norm();
                if (pr < 0 || nn < best) { pr = r; pc = c; best = nn; }
            }
        if (pr < 0) break;
        std::swap(m[top], m[pr]);
        for (int r = 0; r < rows; ++r) std::swap(m[r][left], m[r][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = top + 1; r < rows; ++r) {
                if (m[r][left].is_zero()) continue;
                GaussInt q, rem;
                divmod(m[r][left], m[top][left], q, rem);
                for (int c = left; c < cols; ++c) m[r][c] -= q * m[top][c];
                if (!m[r][left].is_zero()) {
                    std::swap(m[top], m[r]);
                    clean = false;
                }
            }
            for (int c = left + 1; c < cols; ++c) {
                if (m[top][c].is_zero()) continue;
                GaussInt q, rem;
                divmod(m[top][c], m[top][left], q, rem);
                for (int r = top; r < rows; ++r) m[r][c] -= q * m[r][left];
                if (!m[top][c].is_zero()) {
                    for (int r = 0; r < rows; ++r) std::swap(m[r][left], m[r][c]);
                    clean = false;
                }
            }
        }
        // ensure divisibility of the remaining block
        bool again = false;
        for (int r = top + 1; r < rows && !again; ++r)
            for (int c = left + 1; c < cols && !again; ++c) {
                if (m[r][c].is_zero()) continue;
                GaussInt q, rem;
                divmod(m[r][c], m[top][left], q, rem);
                if (!rem.is_zero()) {
                    for (int cc = left; cc < cols; ++cc) m[top][cc] += m[r][cc];
                    again = true;
                }
            }
        if (again) continue;
        diag.push_back(m[top][left].canonical_associate());
        ++top;
        ++left;
    }
    return diag;
}

}  // namespace

std::map<int, long long> HomologyResult::euler() const {
    std::map<int, long long> e;
    for (const auto& [hq, g] : groups) e[hq.second] += (hq.first % 2 == 0 ? 1 : -1) * g.free_rank;
    return e;
}

std::string HomologyResult::to_string() const {
    std::ostringstream os;
    for (const auto& [hq, g] : groups) {
        os << "(h=" << hq.first << ", q=" << hq.second << ") rank " << g.free_rank;
        if (!g.torsion.empty()) {
            os << " torsion";
            for (const auto& t : g.torsion) os << " " << t;
        }
        os << "\n";
    }
    return os.str();
}

HomologyResult homology(const CubeComplex& c, CoeffRing ring) {
    bool gaussian = (ring == CoeffRing::Qi || ring == CoeffRing::Zi);
    bool field = (ring == CoeffRing::Q || ring == CoeffRing::Qi);
    // collect q-degrees and check entries
    std::set<int> qs;
    for (const auto& col : c.gens)
        for (const CubeGenerator& g : col) qs.insert(g.q);
    for (const auto& mat : c.diff)
        for (const auto& [ij, v] : mat) {
            (void)ij;
            if (!v.is_constant()) throw RingNotSupported("generic alpha entries: not a PID computation");
            if (!gaussian && !v.constant().is_real()) throw RingNotSupported("entry not real; use a Gaussian ring");
        }

    // differentials must be q-homogeneous for the slicing below
    for (size_t k = 0; k + 1 < c.gens.size(); ++k)
        for (const auto& [ij, v] : c.diff[k]) {
            (void)v;
            if (c.gens[k][ij.first].q != c.gens[k + 1][ij.second].q)
                throw std::logic_error("differential does not preserve q");
        }

    HomologyResult out;
    int H = static_cast<int>(c.gens.size());
    for (int q : qs) {
        // q-graded slices: indices of generators with this q
        std::vector<std::vector<int>> idx(H);
        for (int k = 0; k < H; ++k)
            for (size_t i = 0; i < c.gens[k].size(); ++i)
                if (c.gens[k][i].q == q) idx[k].push_back(static_cast<int>(i));
        // per degree: matrix of d_k restricted to the slice
        std::vector<std::vector<std::vector<GaussInt>>> mats(H - 1);
        for (int k = 0; k + 1 < H; ++k) {
            auto& m = mats[k];
            m.assign(idx[k].size(), std::vector<GaussInt>(idx[k + 1].size(), GaussInt()));
            for (size_t a = 0; a < idx[k].size(); ++a)
                for (size_t b = 0; b < idx[k + 1].size(); ++b) {
                    auto it = c.diff[k].find({idx[k][a], idx[k + 1][b]});
                    if (it != c.diff[k].end()) m[a][b] = it->second.constant();
                }
        }
        for (int k = 0; k < H; ++k) {
            long long dim = static_cast<long long>(idx[k].size());
            if (dim == 0 && (k == 0 || mats[k - 1].empty())) continue;
            long long rank_out = 0, rank_in = 0;
            std::vector<std::string> torsion;
            if (field) {
                auto to_q = [](const std::vector<std::vector<GaussInt>>& m) {
                    std::vector<std::vector<GaussRational>> r(m.size());
                    for (size_t i = 0; i < m.size(); ++i)
                        for (const GaussInt& v : m[i]) r[i].push_back(GaussRational(v));
                    return r;
                };
                if (k + 1 < H && !idx[k + 1].empty()) rank_out = rank_field(to_q(mats[k]));
                if (k > 0 && !idx[k - 1].empty()) rank_in = rank_field(to_q(mats[k - 1]));
            } else {
                if (k + 1 < H && !idx[k + 1].empty()) {
                    auto diag = smith_diagonal(mats[k]);
                    rank_out = static_cast<long long>(diag.size());
                }
                if (k > 0 && !idx[k - 1].empty()) {
                    auto diag = smith_diagonal(mats[k - 1]);
                    rank_in = static_cast<long long>(diag.size());
                    for (const GaussInt& dgl : diag)
                        if (!dgl.is_unit()) torsion.push_back(dgl.to_string());
                }
            }
            long long free_rank = dim - rank_out - rank_in;
            if (free_rank != 0 || !torsion.empty()) {
                HomologyResult::Group g;
                g.free_rank = free_rank;
                g.torsion = std::move(torsion);
                out.groups[{k + c.min_h, q}] = std::move(g);
            }
        }
    }
    return out;
}

}  // namespace arcalg
