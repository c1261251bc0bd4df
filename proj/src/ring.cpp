#include "arcalg/ring.hpp"

#include <sstream>

namespace arcalg {

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& sym, long long exp) {
        if (exp == 0) return;
        if (!first) os << " ";
        os << sym;
        if (exp != 1) os << "^" << exp;
        first = false;
    };
    emit("a", a);
    emit("w", w);
    emit("e", e);
    if (first) os << "1";
    return os.str();
}

void SymbolicScalar::insert_term(const Monomial& m, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

SymbolicScalar operator+(const SymbolicScalar& x, const SymbolicScalar& y) {
    SymbolicScalar r = x;
    for (const auto& [m, c] : y.terms_) r.insert_term(m, c);
    return r;
}

SymbolicScalar operator-(const SymbolicScalar& x) {
    SymbolicScalar r = x;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SymbolicScalar operator-(const SymbolicScalar& x, const SymbolicScalar& y) { return x + (-y); }

SymbolicScalar operator*(const SymbolicScalar& x, const SymbolicScalar& y) {
    SymbolicScalar r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) r.insert_term(mx * my, cx * cy);
    return r;
}

bool operator<(const SymbolicScalar& x, const SymbolicScalar& y) {
    const auto& a = x.terms_;
    const auto& b = y.terms_;
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i].first < b[i].first) return true;
        if (b[i].first < a[i].first) return false;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

std::optional<int> SymbolicScalar::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    uint32_t a = terms_[0].first.a;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.a != a) return std::nullopt;
    }
    return 4 * static_cast<int>(a);
}

SymbolicScalar SymbolicScalar::inverse_unit() const {
    if (!is_unit()) throw std::domain_error("SymbolicScalar: not a unit: " + to_string());
    const Monomial& m = terms_[0].first;
    Monomial inv{0, -m.w, m.e};
    return SymbolicScalar(inv, terms_[0].second);  // coefficient +-1 is self-inverse
}

std::string SymbolicScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        if (!first) {
            if (c.sign() >= 0) os << " + ";
            else { os << " - "; cs = (-c).to_string(); }
        }
        first = false;
        bool trivial_mono = (m == Monomial{});
        if (trivial_mono) { os << cs; continue; }
        if (cs == "1") os << m.to_string();
        else if (cs == "-1") os << "-" << m.to_string();
        else os << cs << " " << m.to_string();
    }
    return os.str();
}

std::string AlphaPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) { os << coeffs_[k].to_string(); continue; }
        os << "(" << coeffs_[k].to_string() << ")a";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Specialization Specialization::generic() { return Specialization(); }

Specialization Specialization::named(const std::string& name) {
    if (name == "generic") return generic();
    Specialization s;
    s.generic_ = false;
    s.name_ = name;
    if (name == "kbn") { s.eps_ = 1; s.omega_ = GaussInt(1); }
    else if (name == "bl") { s.eps_ = -1; s.omega_ = GaussInt(1); }
    else if (name == "ca" || name == "cmw") { s.eps_ = -1; s.omega_ = GaussInt::i(); }
    else throw std::invalid_argument("unknown specialization: " + name);
    return s;
}

Specialization Specialization::custom(AlphaImage ai, GaussInt alpha_const, int eps_image, GaussInt omega_image,
                                      std::string name) {
    if (eps_image != 1 && eps_image != -1) throw ImageNotRepresentable("eps image must square to 1");
    if (!omega_image.is_unit()) throw ImageNotRepresentable("omega image must be a unit");
    Specialization s;
    s.generic_ = false;
    s.name_ = std::move(name);
    s.eps_ = eps_image;
    s.omega_ = std::move(omega_image);
    s.alpha_kind_ = ai;
    s.alpha_const_ = std::move(alpha_const);
    return s;
}

Specialization Specialization::parse(const std::string& text) {
    if (text == "kbn" || text == "bl" || text == "ca" || text == "cmw" || text == "generic")
        return named(text);
    const std::string prefix = "custom:";
    if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("bad specialization: " + text);
    std::string body = text.substr(prefix.size());
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') { parts.push_back(cur); cur.clear(); }
        else cur.push_back(ch);
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw std::invalid_argument("custom specialization needs alpha,eps,omega");

    AlphaImage ai = AlphaImage::Keep;
    GaussInt ac;
    if (parts[0] != "a") {
        ai = AlphaImage::Constant;
        ac = GaussInt(BigInt::from_string(parts[0]));
    }
    int ei = 0;
    if (parts[1] == "1") ei = 1;
    else if (parts[1] == "-1") ei = -1;
    else throw ImageNotRepresentable("eps image must be 1 or -1");

    if (parts[2] == "w") {
        Specialization s = custom(ai, ac, ei, GaussInt(1), "custom");
        s.symbolic_omega_ = true;
        return s;
    }
    GaussInt wi;
    if (parts[2] == "1") wi = GaussInt(1);
    else if (parts[2] == "-1") wi = GaussInt(-1);
    else if (parts[2] == "i") wi = GaussInt::i();
    else if (parts[2] == "-i") wi = -GaussInt::i();
    else throw ImageNotRepresentable("omega image must be one of 1,-1,i,-i,w");
    return custom(ai, ac, ei, wi, "custom");
}

AlphaPoly Specialization::apply(const SymbolicScalar& x) const {
    if (symbolic_target()) throw std::domain_error("specialization has a symbolic target; use apply_symbolic");
    AlphaPoly acc;
    for (const auto& [m, c] : x.terms()) {
        GaussInt g(c);
        if (m.e) g = (eps_ == 1) ? g : -g;
        // omega^w with w possibly negative; the image is a unit so inverse = conj for i, itself for +-1
        GaussInt wpow(1);
        GaussInt base = omega_;
        int32_t w = m.w;
        if (w < 0) {
            // unit inverse: 1 -> 1, -1 -> -1, i -> -i, -i -> i
            base = base.conj();
            if (!base.is_real()) {
                // conj(i) = -i which is indeed i^{-1}; for +-1 conj is identity
            }
            w = -w;
        }
        for (int32_t k = 0; k < w; ++k) wpow *= base;
        g *= wpow;
        AlphaPoly term(g);
        if (alpha_kind_ == AlphaImage::Keep) {
            for (uint32_t k = 0; k < m.a; ++k) term = term * AlphaPoly::alpha();
        } else {
            GaussInt apow(1);
            for (uint32_t k = 0; k < m.a; ++k) apow *= alpha_const_;
            term = term * AlphaPoly(apow);
        }
        acc += term;
    }
    return acc;
}

SymbolicScalar Specialization::apply_symbolic(const SymbolicScalar& x) const {
    if (generic_) return x;
    SymbolicScalar acc;
    SymbolicScalar eps_img = (eps_ == 1) ? SymbolicScalar::one() : -SymbolicScalar::one();
    for (const auto& [m, c] : x.terms()) {
        SymbolicScalar t{BigInt(c)};
        if (m.e) t *= eps_img;
        if (symbolic_omega_) {
            t *= SymbolicScalar::omega(m.w);
        } else {
            if (!omega_.is_real()) throw ImageNotRepresentable("omega -> i needs a Gaussian target");
            SymbolicScalar w1{omega_.re()};
            int32_t w = m.w < 0 ? -m.w : m.w;  // +-1 are self-inverse
            for (int32_t k = 0; k < w; ++k) t *= w1;
        }
        if (alpha_kind_ == AlphaImage::Keep) {
            t *= SymbolicScalar::alpha(m.a);
        } else {
            if (!alpha_const_.is_real()) throw ImageNotRepresentable("alpha constant must be real here");
            SymbolicScalar a1{alpha_const_.re()};
            for (uint32_t k = 0; k < m.a; ++k) t *= a1;
        }
        acc += t;
    }
    return acc;
}

}  // namespace arcalg
