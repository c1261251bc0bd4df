// Command-line front end: diagram algebra queries, coefficient maps,
// generalized quotients and link homology, all over exact arithmetic.

#include <CLI11.hpp>
#include <iostream>

#include "arcalg/genalg.hpp"
#include "arcalg/homology.hpp"
#include "arcalg/parallel.hpp"
#include "arcalg/serialize.hpp"

using namespace arcalg;

namespace {

struct DomainError {
    std::string what;
};

Specialization parse_spec(const std::string& text) {
    try {
        return Specialization::parse(text);
    } catch (const std::invalid_argument&) {
        // allow a bare "a,e,w" triple as shorthand for custom:a,e,w
        return Specialization::parse("custom:" + text);
    }
}

// balanced blocks with at most `stars` stars and one x, bounded width
std::vector<Block> scope_blocks(int stars) {
    std::vector<Block> out;
    std::vector<std::string> seen;
    std::string alphabet = "ox*";
    for (int len = 0; len <= stars + 2; ++len) {
        std::vector<int> idx(len, 0);
        while (true) {
            std::string s;
            for (int k : idx) s.push_back(alphabet[k]);
            int st = static_cast<int>(std::count(s.begin(), s.end(), '*'));
            int xs = static_cast<int>(std::count(s.begin(), s.end(), 'x'));
            bool trimmed = s.empty() || (s.front() != 'o' && s.back() != 'o');
            if (trimmed && st % 2 == 0 && st <= stars && xs <= 1 &&
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

std::vector<CompositeMatching> scope_matchings(int stars) {
    std::vector<CompositeMatching> out;
    for (const Block& b : scope_blocks(stars)) {
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

BimodElement bimod_element_from_json(const CompositeMatching& m, const json& j) {
    BimodElement x;
    for (const auto& t : j.at("terms")) {
        CupDiagram cup = cup_from_json(t.at("cup"), m.bottom());
        CapDiagram cap = cup_from_json(t.at("cap"), m.top());
        std::vector<Weight> mids;
        size_t k = 0;
        for (const auto& wj : t.at("weights"))
            mids.push_back(Weight::parse(wj.get<std::string>(), m.blocks()[k++].start()));
        SymbolicScalar s = t.contains("scalar") ? scalar_from_json(t.at("scalar")) : SymbolicScalar::one();
        x.add(BimodBasis(m, cup, mids, cap), s);
    }
    return x;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for signed 2-parameter arc algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_mode = "json";
    app.add_option("--out", out_mode, "output format: json|text")->capture_default_str();

    auto* cmd_basis = app.add_subcommand("basis", "basis diagrams of a block");
    std::string basis_block;
    cmd_basis->add_option("--block", basis_block, "block over o x *")->required();

    auto* cmd_mult = app.add_subcommand("mult", "multiply two algebra elements");
    std::string mult_block, mult_x, mult_y, mult_spec = "generic";
    cmd_mult->add_option("--block", mult_block)->required();
    cmd_mult->add_option("--x", mult_x, "element json")->required();
    cmd_mult->add_option("--y", mult_y, "element json")->required();
    cmd_mult->add_option("--spec", mult_spec, "kbn|bl|ca|generic|custom:a,e,w");

    auto* cmd_bimod = app.add_subcommand("bimod-basis", "basis of an arc bimodule");
    std::string bimod_blocks, bimod_moves;
    cmd_bimod->add_option("--blocks", bimod_blocks, "comma-separated blocks, first is the bottom")->required();
    cmd_bimod->add_option("--moves", bimod_moves, "comma-separated basic moves like +a2 or -a0s3");

    auto* cmd_act = app.add_subcommand("act", "algebra action on a bimodule element");
    std::string act_side = "left", act_matching, act_a, act_m;
    cmd_act->add_option("--side", act_side, "left|right");
    cmd_act->add_option("--matching", act_matching, "composite matching json")->required();
    cmd_act->add_option("--a", act_a, "algebra element json")->required();
    cmd_act->add_option("--m", act_m, "bimodule element json")->required();

    auto* cmd_rmult = app.add_subcommand("rmult", "reverse surgery on a bimodule element");
    std::string rm_matching, rm_m;
    int rm_layer = 0, rm_a = 0, rm_b = 1;
    cmd_rmult->add_option("--matching", rm_matching)->required();
    cmd_rmult->add_option("--layer", rm_layer)->required();
    cmd_rmult->add_option("--col-a", rm_a)->required();
    cmd_rmult->add_option("--col-b", rm_b)->required();
    cmd_rmult->add_option("--m", rm_m, "bimodule element json")->required();

    auto* cmd_coeff = app.add_subcommand("coeff", "apply a coefficient map");
    std::string coeff_kind = "algebra", coeff_x;
    bool coeff_inverse = false;
    cmd_coeff->add_option("--kind", coeff_kind, "algebra|bimodule|reverse");
    cmd_coeff->add_option("--x", coeff_x, "element json")->required();
    cmd_coeff->add_flag("--inverse", coeff_inverse);

    auto* cmd_iso = app.add_subcommand("iso-check", "verify the intertwining identities");
    std::string iso_kind = "algebra", iso_specs = "kbn,bl,ca";
    int iso_stars = 3;
    cmd_iso->add_option("--kind", iso_kind, "algebra|bimodule|reverse");
    cmd_iso->add_option("--max-stars", iso_stars);
    cmd_iso->add_option("--specs", iso_specs, "comma separated specializations");

    auto* cmd_quiver = app.add_subcommand("quiver", "quiver of the generalized algebra");
    std::string qv_block, qv_spec = "0,1,1";
    int qv_hull = 2;
    cmd_quiver->add_option("--block", qv_block)->required();
    cmd_quiver->add_option("--hull", qv_hull, "hull radius m");
    cmd_quiver->add_option("--spec", qv_spec, "alpha,eps,omega images (alpha must be 0)");

    auto* cmd_hom = app.add_subcommand("homology", "link homology from a morse word");
    std::string hom_morse, hom_braid, hom_spec = "custom:0,1,1", hom_ring = "q";
    int hom_strands = 2;
    bool hom_eliminate = false;
    cmd_hom->add_option("--morse", hom_morse, "tokens like: u0 u2 x+1 x+1 n2 n0");
    cmd_hom->add_option("--braid", hom_braid, "signed braid generators, expanded to a morse word");
    cmd_hom->add_option("--strands", hom_strands, "strand count for --braid");
    cmd_hom->add_option("--spec", hom_spec, "specialization (alpha must be constant for homology)");
    cmd_hom->add_option("--ring", hom_ring, "q|z|zi|qi");
    cmd_hom->add_flag("--eliminate", hom_eliminate, "gaussian-eliminate before computing");

    auto* cmd_self = app.add_subcommand("selftest", "run the property suites");
    int self_stars = 3;
    cmd_self->add_option("--max-stars", self_stars);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        if (*cmd_basis) {
            Block b = Block::parse(basis_block);
            json arr = json::array();
            for (const BasisDiagram& d : basis(b)) arr.push_back(to_json(d));
            emit({{"block", b.to_string()}, {"basis", arr}});
        } else if (*cmd_mult) {
            ArcElement x = element_from_json(json::parse(mult_x));
            ArcElement y = element_from_json(json::parse(mult_y));
            ArcElement prod = mult(x, y);
            Specialization sp = parse_spec(mult_spec);
            if (sp.symbolic_target()) {
                ArcElement shown;
                for (const auto& [bd, s] : prod.terms()) shown.add(bd, sp.apply_symbolic(s));
                emit(to_json(shown));
            } else {
                json terms = json::array();
                for (const auto& [bd, s] : prod.terms()) {
                    json t = to_json(bd);
                    t["scalar"] = sp.apply(s).to_string();
                    terms.push_back(std::move(t));
                }
                emit({{"block", mult_block}, {"terms", terms}});
            }
        } else if (*cmd_bimod) {
            std::vector<Block> blocks;
            {
                std::istringstream is(bimod_blocks);
                std::string tok;
                while (std::getline(is, tok, ',')) blocks.push_back(Block::parse(tok));
            }
            std::vector<Matching> layers;
            Block cur = blocks.at(0);
            std::vector<Block> chain{cur};
            if (!bimod_moves.empty()) {
                std::istringstream is(bimod_moves);
                std::string tok;
                while (std::getline(is, tok, ',')) {
                    if (tok.size() < 3 || (tok[0] != '+' && tok[0] != '-') || tok[1] != 'a')
                        throw DomainError{"bad move " + tok + ", expected like +a2 or -a0s3"};
                    int sign = tok[0] == '+' ? 1 : -1;
                    size_t spos = tok.find('s');
                    int i = std::stoi(tok.substr(2, spos == std::string::npos ? std::string::npos : spos - 2));
                    int shape = spos == std::string::npos ? -1 : std::stoi(tok.substr(spos + 1));
                    Matching t = [&] {
                        if (shape > 0) return Matching::basic(cur, sign, i, shape);
                        for (int sh = 1; sh <= 4; ++sh) {
                            try {
                                return Matching::basic(cur, sign, i, sh);
                            } catch (const std::invalid_argument&) {
                            }
                        }
                        throw DomainError{"no admissible shape for move " + tok};
                    }();
                    cur = t.target();
                    chain.push_back(cur);
                    layers.push_back(std::move(t));
                }
            }
            if (blocks.size() > 1 && !(chain == blocks))
                throw DomainError{"moves do not reproduce the given block chain"};
            CompositeMatching m(chain, layers);
            json arr = json::array();
            for (const BimodBasis& b : bimodule_basis(m)) arr.push_back(to_json(b));
            emit({{"matching", to_json(m)}, {"shift", m.degree_shift()}, {"basis", arr}});
        } else if (*cmd_act) {
            CompositeMatching m = matching_from_json(json::parse(act_matching));
            ArcElement a = element_from_json(json::parse(act_a));
            BimodElement x = bimod_element_from_json(m, json::parse(act_m));
            BimodElement r = act_side == "left" ? act_left(a, m, x) : act_right(m, x, a);
            emit(to_json(r));
        } else if (*cmd_rmult) {
            CompositeMatching m = matching_from_json(json::parse(rm_matching));
            BimodElement x = bimod_element_from_json(m, json::parse(rm_m));
            auto res = rmult(m, rm_layer, rm_a, rm_b, x);
            emit({{"matching", to_json(res.matching)}, {"element", to_json(res.element)}});
        } else if (*cmd_coeff) {
            ArcElement x = element_from_json(json::parse(coeff_x));
            CoeffKind kind = coeff_kind == "algebra" ? CoeffKind::Algebra
                             : coeff_kind == "bimodule" ? CoeffKind::Bimodule
                                                        : CoeffKind::Reverse;
            ArcElement r = coeff_inverse ? coeff_map_inverse(kind, x) : coeff_map(kind, x);
            emit(to_json(r));
        } else if (*cmd_iso) {
            json report = json::object();
            bool ok = true;
            if (iso_kind == "algebra") {
                auto rep = check_intertwine_algebra(scope_blocks(iso_stars), false, true);
                ok = rep.ok;
                report["steps"] = rep.steps_checked;
                if (!rep.ok) report["failure"] = rep.failure;
                std::vector<Specialization> specs;
                {
                    std::istringstream is(iso_specs);
                    std::string tok;
                    while (std::getline(is, tok, ',')) specs.push_back(parse_spec(tok));
                }
                long long pairs = 0;
                for (const auto& src : specs)
                    for (const auto& tgt : specs) {
                        for (const Block& blk : scope_blocks(iso_stars)) {
                            auto bs = basis(blk);
                            for (const auto& p : bs)
                                for (const auto& q : bs) {
                                    SpecElement sx = iso_map(src, tgt, CoeffKind::Algebra, ArcElement(p));
                                    SpecElement sy = iso_map(src, tgt, CoeffKind::Algebra, ArcElement(q));
                                    SpecElement rhs = spec_mult(tgt, sx, sy);
                                    SpecElement prod = spec_mult(src, specialize(src, ArcElement(p)),
                                                                 specialize(src, ArcElement(q)));
                                    SpecElement mapped;
                                    for (const auto& [b, c] : prod.terms())
                                        mapped.add(b, c * iso_factor(src, tgt, CoeffKind::Algebra, b));
                                    if (!(mapped == rhs)) ok = false;
                                    ++pairs;
                                }
                        }
                    }
                report["iso_products"] = pairs;
            } else if (iso_kind == "bimodule") {
                long long steps = 0;
                for (const auto& m : scope_matchings(iso_stars)) {
                    auto rep = check_intertwine_bimodule(m);
                    steps += rep.steps_checked;
                    if (!rep.ok) {
                        ok = false;
                        report["failure"] = rep.failure;
                    }
                }
                report["steps"] = steps;
            } else {
                long long steps = 0;
                for (const auto& m : scope_matchings(iso_stars)) {
                    auto rep = check_intertwine_reverse(m);
                    steps += rep.steps_checked;
                    if (!rep.ok) {
                        ok = false;
                        report["failure"] = rep.failure;
                    }
                }
                report["steps"] = steps;
            }
            report["ok"] = ok;
            emit(report);
            return ok ? 0 : 1;
        } else if (*cmd_quiver) {
            Specialization sp = parse_spec(qv_spec);
            if (!sp.alpha_is_zero()) throw DomainError{"the generalized algebra needs alpha = 0"};
            HullData h = m_hull(Block::parse(qv_block), qv_hull);
            Quiver q = quiver(h);
            json j = to_json(q);
            std::string text;
            for (const auto& rel : q.relations) {
                text += "arrow" + std::to_string(rel.left) + " o arrow" + std::to_string(rel.right) + " = ";
                if (rel.value.is_zero()) {
                    text += "0";
                } else {
                    for (const auto& [b, s] : rel.value.terms()) {
                        SymbolicScalar img = sp.symbolic_target() ? sp.apply_symbolic(s) : s;
                        text += "(" + img.to_string() + ") " + b.to_string() + " ";
                    }
                }
                text += "\n";
            }
            if (out_mode == "text") std::cout << text;
            else {
                j["text"] = text;
                emit(j);
            }
        } else if (*cmd_hom) {
            MorseWord w;
            if (!hom_morse.empty()) {
                w = MorseWord::parse(hom_morse);
            } else if (!hom_braid.empty()) {
                std::vector<int> gens;
                std::istringstream is(hom_braid);
                int g;
                while (is >> g) gens.push_back(g);
                w = MorseWord::braid_closure(gens, hom_strands);
            } else {
                throw DomainError{"need --morse or --braid"};
            }
            Specialization sp = parse_spec(hom_spec);
            if (!sp.is_generic() && sp.alpha_image() == Specialization::AlphaImage::Keep) {
                // named specializations mean their alpha = 0 form here; generic
                // alpha has no PID homology
                sp = Specialization::custom(Specialization::AlphaImage::Constant, GaussInt(0), sp.eps_image(),
                                            sp.omega_image(), sp.name() + "0");
            }
            CubeComplex c = build_cube(w, sp);
            if (!c.d_squared_zero()) throw DomainError{"differential does not square to zero"};
            if (hom_eliminate) c = gaussian_eliminate(c, hom_ring == "q" || hom_ring == "qi");
            CoeffRing ring = hom_ring == "q" ? CoeffRing::Q
                             : hom_ring == "qi" ? CoeffRing::Qi
                             : hom_ring == "z" ? CoeffRing::Z
                                               : CoeffRing::Zi;
            HomologyResult h = homology(c, ring);
            if (out_mode == "text") {
                std::cout << "word: " << w.to_string() << "\n" << h.to_string();
            } else {
                emit({{"word", w.to_string()}, {"ring", hom_ring}, {"poincare", to_json(h)}});
            }
        } else if (*cmd_self) {
            auto blocks = scope_blocks(self_stars);
            json rep = json::object();
            bool ok = true;
            auto r1 = check_intertwine_algebra(blocks, false, true);
            rep["intertwine_algebra"] = r1.steps_checked;
            ok = ok && r1.ok;
            long long assoc = 0;
            for (const Block& b : blocks) {
                auto t_serial = mult_table(b, false);
                auto t_par = mult_table(b, true);
                if (!(t_serial == t_par)) ok = false;
                auto bs = basis(b);
                size_t n = bs.size();
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j)
                        for (size_t k = 0; k < n; ++k) {
                            ArcElement lhs = mult(t_serial[i * n + j], ArcElement(bs[k]));
                            ArcElement rhs = mult(ArcElement(bs[i]), t_serial[j * n + k]);
                            if (!(lhs == rhs)) ok = false;
                            ++assoc;
                        }
            }
            rep["associativity_triples"] = assoc;
            long long bim = 0, rev = 0;
            for (const auto& m : scope_matchings(std::min(self_stars, 2))) {
                auto r2 = check_intertwine_bimodule(m);
                auto r3 = check_intertwine_reverse(m);
                bim += r2.steps_checked;
                rev += r3.steps_checked;
                ok = ok && r2.ok && r3.ok;
            }
            rep["intertwine_bimodule"] = bim;
            rep["reverse_square"] = rev;
            for (const char* word : {"u0 n0", "u0 u2 x+1 x+1 n2 n0", "u0 u2 x+1 x+1 x+1 n2 n0"}) {
                CubeComplex c = build_cube(MorseWord::parse(word), Specialization::parse("custom:0,-1,i"));
                if (!c.d_squared_zero()) ok = false;
            }
            rep["ok"] = ok;
            emit(rep);
            return ok ? 0 : 1;
        }
    } catch (const DomainError& e) {
        std::cerr << json{{"error", e.what}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
