#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcalg/bigint.hpp"

namespace arcalg {

// A monomial alpha^a * omega^w * eps^e in the coefficient ring
// Z[alpha, omega^{+-1}, eps]/(eps^2 - 1). The eps exponent is kept
// reduced mod 2, so eps^2 = 1 holds structurally.
struct Monomial {
    uint32_t a = 0;  // exponent of alpha (degree 4 each)
    int32_t w = 0;   // exponent of omega (degree 0)
    uint8_t e = 0;   // exponent of eps, 0 or 1

    int degree() const { return 4 * static_cast<int>(a); }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return Monomial{x.a + y.a, x.w + y.w, static_cast<uint8_t>((x.e + y.e) & 1)};
    }
    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.a == y.a && x.w == y.w && x.e == y.e;
    }
    friend bool operator<(const Monomial& x, const Monomial& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.w != y.w) return x.w < y.w;
        return x.e < y.e;
    }

    std::string to_string() const;
};

// Element of Z[alpha, omega^{+-1}, eps]/(eps^2-1): a finite sum of
// monomials with nonzero BigInt coefficients. Terms are kept sorted and
// zero coefficients are dropped eagerly, so equality is structural.
class SymbolicScalar {
public:
    SymbolicScalar() = default;
    SymbolicScalar(long long c) { if (c != 0) terms_.push_back({Monomial{}, BigInt(c)}); }
    SymbolicScalar(BigInt c) { if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)}); }
    SymbolicScalar(Monomial m, BigInt c = BigInt(1)) { if (!c.is_zero()) terms_.push_back({m, std::move(c)}); }

    static SymbolicScalar zero() { return SymbolicScalar(); }
    static SymbolicScalar one() { return SymbolicScalar(1); }
    static SymbolicScalar alpha(uint32_t k = 1) { return SymbolicScalar(Monomial{k, 0, 0}); }
    static SymbolicScalar omega(int32_t k = 1) { return SymbolicScalar(Monomial{0, k, 0}); }
    static SymbolicScalar eps(long long k = 1) { return SymbolicScalar(Monomial{0, 0, static_cast<uint8_t>(((k % 2) + 2) % 2)}); }
    // +-alpha^a omega^w eps^e in one go; exponents as produced by the surgery rules
    static SymbolicScalar unit_monomial(uint32_t a, long long w, long long e, bool negative = false) {
        Monomial m{a, static_cast<int32_t>(w), static_cast<uint8_t>(((e % 2) + 2) % 2)};
        return SymbolicScalar(m, BigInt(negative ? -1 : 1));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second.is_one(); }
    const std::vector<std::pair<Monomial, BigInt>>& terms() const { return terms_; }

    friend SymbolicScalar operator+(const SymbolicScalar& x, const SymbolicScalar& y);
    friend SymbolicScalar operator-(const SymbolicScalar& x, const SymbolicScalar& y);
    friend SymbolicScalar operator-(const SymbolicScalar& x);
    friend SymbolicScalar operator*(const SymbolicScalar& x, const SymbolicScalar& y);
    SymbolicScalar& operator+=(const SymbolicScalar& o) { *this = *this + o; return *this; }
    SymbolicScalar& operator*=(const SymbolicScalar& o) { *this = *this * o; return *this; }
    friend bool operator==(const SymbolicScalar& x, const SymbolicScalar& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const SymbolicScalar& x, const SymbolicScalar& y) { return !(x == y); }
    friend bool operator<(const SymbolicScalar& x, const SymbolicScalar& y);

    // 4a if every term has alpha-exponent a; nullopt for 0 and mixed sums
    std::optional<int> homogeneous_degree() const;

    // true iff the scalar is a single term +-alpha^k omega^m eps^j
    bool is_signed_monomial() const {
        return terms_.size() == 1 && (terms_[0].second.is_one() || terms_[0].second.is_minus_one());
    }
    // unit means invertible in the ring: +-omega^m eps^j (no alpha)
    bool is_unit() const { return is_signed_monomial() && terms_[0].first.a == 0; }
    SymbolicScalar inverse_unit() const;

    std::string to_string() const;

private:
    std::vector<std::pair<Monomial, BigInt>> terms_;  // sorted by Monomial
    void insert_term(const Monomial& m, const BigInt& c);
};

// Dense polynomial in alpha with Gaussian-integer coefficients. This is
// the common computational target of all built-in specializations.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(GaussInt c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }
    AlphaPoly(long long c) : AlphaPoly(GaussInt(c)) {}
    static AlphaPoly alpha() { AlphaPoly p; p.coeffs_ = {GaussInt(0), GaussInt(1)}; return p; }

    bool is_zero() const { return coeffs_.empty(); }
    size_t degree_plus_one() const { return coeffs_.size(); }
    GaussInt coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussInt(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    GaussInt constant() const { return coeff(0); }

    friend AlphaPoly operator+(const AlphaPoly& x, const AlphaPoly& y) {
        AlphaPoly r;
        r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()));
        for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = x.coeff(k) + y.coeff(k);
        r.trim();
        return r;
    }
    friend AlphaPoly operator-(const AlphaPoly& x, const AlphaPoly& y) {
        AlphaPoly r;
        r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()));
        for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = x.coeff(k) - y.coeff(k);
        r.trim();
        return r;
    }
    friend AlphaPoly operator-(const AlphaPoly& x) { return AlphaPoly() - x; }
    friend AlphaPoly operator*(const AlphaPoly& x, const AlphaPoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        AlphaPoly r;
        r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, GaussInt());
        for (size_t i = 0; i < x.coeffs_.size(); ++i)
            for (size_t j = 0; j < y.coeffs_.size(); ++j)
                r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
        r.trim();
        return r;
    }
    AlphaPoly& operator+=(const AlphaPoly& o) { *this = *this + o; return *this; }
    friend bool operator==(const AlphaPoly& x, const AlphaPoly& y) { return x.coeffs_ == y.coeffs_; }
    friend bool operator!=(const AlphaPoly& x, const AlphaPoly& y) { return !(x == y); }

    std::string to_string() const;

private:
    std::vector<GaussInt> coeffs_;
    void trim() { while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back(); }
};

struct ImageNotRepresentable : std::domain_error {
    explicit ImageNotRepresentable(const std::string& what) : std::domain_error(what) {}
};

// A ring homomorphism out of Z[alpha,omega^{+-1},eps]/(eps^2-1), fixed by
// the images of alpha, eps and omega.
//
// Built-in named specializations (composite of the paper-level parameter
// substitution {alpha, 1, eps omega^2, omega, eps omega} with the published
// parameter lists):
//   kbn: (alpha, eps, omega) -> (alpha,  1, 1)
//   bl : (alpha, eps, omega) -> (alpha, -1, 1)
//   ca : (alpha, eps, omega) -> (alpha, -1, i)   (also cmw)
// An alpha image may additionally pin alpha to a Gaussian-integer constant.
class Specialization {
public:
    enum class AlphaImage { Keep, Constant };

    Specialization() = default;
    static Specialization generic();
    static Specialization named(const std::string& name);  // kbn | bl | ca | cmw | generic
    static Specialization custom(AlphaImage ai, GaussInt alpha_const, int eps_image, GaussInt omega_image,
                                 std::string name = "custom");
    // parse "kbn" | "bl" | "ca" | "generic" | "custom:a,e,w" with
    // a in {0, a, <int>}, e in {1,-1}, w in {1,-1,i,-i,w}
    static Specialization parse(const std::string& text);

    const std::string& name() const { return name_; }
    bool is_generic() const { return generic_; }
    // generic omega image (symbolic): only for generic/custom-with-w
    bool symbolic_target() const { return generic_ || symbolic_omega_; }

    int eps_image() const { return eps_; }
    const GaussInt& omega_image() const { return omega_; }
    AlphaImage alpha_image() const { return alpha_kind_; }
    const GaussInt& alpha_constant() const { return alpha_const_; }
    bool alpha_is_zero() const { return alpha_kind_ == AlphaImage::Constant && alpha_const_.is_zero(); }

    // apply to a scalar; requires !symbolic_target()
    AlphaPoly apply(const SymbolicScalar& x) const;
    // apply symbolically (eps/omega images substituted inside the symbolic ring);
    // valid for every specialization, the generic one acts as the identity
    SymbolicScalar apply_symbolic(const SymbolicScalar& x) const;

private:
    std::string name_ = "generic";
    bool generic_ = true;
    bool symbolic_omega_ = false;  // custom with omega -> omega
    int eps_ = 1;
    GaussInt omega_ = GaussInt(1);
    AlphaImage alpha_kind_ = AlphaImage::Keep;
    GaussInt alpha_const_;
};

}  // namespace arcalg
