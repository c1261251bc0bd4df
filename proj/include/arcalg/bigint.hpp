#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcalg {

// Arbitrary-precision signed integer, little-endian base-2^32 limbs.
// Small enough for this project; no attempt at asymptotically fast
// multiplication (operands here stay tiny).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        unsigned long long u = (v < 0) ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (u) { mag_.push_back(static_cast<uint32_t>(u)); u >>= 32; }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) { sign = (s[i] == '-') ? -1 : 1; ++i; }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(s[i] - '0');
        }
        if (!r.is_zero()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_minus_one() const { return sign_ == -1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = mag_u64();
        return u <= 0x7fffffffffffffffULL || (sign_ < 0 && u == 0x8000000000000000ULL);
    }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        unsigned long long u = mag_u64();
        return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = r.mag_[i + j] + static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division (C semantics: quotient rounds toward zero).
    friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        if (b.mag_.size() == 1) {
            uint64_t d = b.mag_[0], rem = 0;
            std::vector<uint32_t> qs(a.mag_.size());
            for (size_t i = a.mag_.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a.mag_[i];
                qs[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            q.mag_ = std::move(qs); q.trim();
            q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
            r = BigInt(static_cast<long long>(rem));
            if (a.sign_ < 0) r = -r;
            return;
        }
        // schoolbook long division, bit by bit over limbs (slow but simple and exact)
        BigInt rem;
        std::vector<uint32_t> qs(a.mag_.size(), 0);
        for (size_t i = a.mag_.size(); i-- > 0;) {
            for (int bit = 31; bit >= 0; --bit) {
                rem = rem.shl1();
                if ((a.mag_[i] >> bit) & 1u) rem.set_low_bit();
                if (cmp_mag(rem.mag_, b.mag_) >= 0) {
                    rem.mag_ = sub_mag(rem.mag_, b.mag_);
                    rem.trim_keep_sign();
                    qs[i] |= (1u << bit);
                }
            }
        }
        q.mag_ = std::move(qs); q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r = rem;
        if (!r.mag_.empty()) r.sign_ = a.sign_; else r.sign_ = 0;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return q; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return r; }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.sign_ == b.sign_ && a.mag_ == b.mag_; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt abs() const { BigInt r = *this; if (r.sign_ < 0) r.sign_ = 1; return r; }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs(); b = b.abs();
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        BigInt t = abs();
        std::string digits;
        BigInt ten(10);
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, ten, q, r);
            digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.mag_[0])));
            t = q;
        }
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    unsigned long long mag_u64() const {
        unsigned long long u = 0;
        if (mag_.size() > 0) u = mag_[0];
        if (mag_.size() > 1) u |= static_cast<unsigned long long>(mag_[1]) << 32;
        return u;
    }
    void trim() { while (!mag_.empty() && mag_.back() == 0) mag_.pop_back(); if (mag_.empty()) sign_ = 0; }
    void trim_keep_sign() { while (!mag_.empty() && mag_.back() == 0) mag_.pop_back(); }
    BigInt shl1() const {
        BigInt r;
        r.mag_.assign(mag_.size() + 1, 0);
        for (size_t i = 0; i < mag_.size(); ++i) {
            r.mag_[i] |= mag_[i] << 1;
            r.mag_[i + 1] = mag_[i] >> 31;
        }
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : 1;
        return r;
    }
    void set_low_bit() {
        if (mag_.empty()) mag_.push_back(1u);
        else mag_[0] |= 1u;
        sign_ = 1;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) { cur += (int64_t(1) << 32); borrow = 1; } else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Rational numbers with BigInt numerator/denominator, always normalized
// (gcd 1, positive denominator).
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend BigRational operator-(const BigRational& a) { return BigRational(-a.num_, a.den_); }
    friend bool operator==(const BigRational& a, const BigRational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }
};

// Gaussian integers Z[i]. Euclidean with respect to the norm, which is
// what the Smith normal form code relies on.
class GaussInt {
public:
    GaussInt() = default;
    GaussInt(BigInt re) : re_(std::move(re)) {}
    GaussInt(long long re) : re_(re) {}
    GaussInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussInt i() { return GaussInt(BigInt(0), BigInt(1)); }

    const BigInt& re() const { return re_; }
    const BigInt& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    BigInt norm() const { return re_ * re_ + im_ * im_; }
    bool is_unit() const { return norm().is_one(); }

    GaussInt conj() const { return GaussInt(re_, -im_); }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re_, -a.im_}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    GaussInt& operator+=(const GaussInt& o) { *this = *this + o; return *this; }
    GaussInt& operator-=(const GaussInt& o) { *this = *this - o; return *this; }
    GaussInt& operator*=(const GaussInt& o) { *this = *this * o; return *this; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

    // Euclidean division: q = round(a/b) componentwise, |r| < |b| in norm.
    friend void divmod(const GaussInt& a, const GaussInt& b, GaussInt& q, GaussInt& r) {
        if (b.is_zero()) throw std::domain_error("GaussInt: division by zero");
        BigInt n = b.norm();
        GaussInt num = a * b.conj();
        q = GaussInt(round_div(num.re_, n), round_div(num.im_, n));
        r = a - q * b;
    }
    // exact division; throws if not divisible
    friend GaussInt operator/(const GaussInt& a, const GaussInt& b) {
        GaussInt q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("GaussInt: not divisible");
        return q;
    }

    static GaussInt gcd(GaussInt a, GaussInt b) {
        while (!b.is_zero()) {
            GaussInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    // canonical associate: multiply by a unit so that re > 0, im >= 0
    // (re > im for ties is not needed; this is enough to make SNF output stable)
    GaussInt canonical_associate() const {
        if (is_zero()) return *this;
        GaussInt v = *this;
        for (int k = 0; k < 4; ++k) {
            if (v.re_.sign() > 0 && v.im_.sign() >= 0) return v;
            v = v * i();
        }
        return v;
    }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string s;
        if (!re_.is_zero()) s = re_.to_string();
        if (im_.is_one()) s += s.empty() ? "i" : "+i";
        else if (im_.is_minus_one()) s += "-i";
        else {
            if (im_.sign() > 0 && !s.empty()) s += "+";
            s += im_.to_string() + "i";
        }
        return s;
    }

private:
    BigInt re_, im_;
    static BigInt round_div(const BigInt& a, const BigInt& b) {
        // nearest integer, ties toward zero; b > 0
        BigInt q, r;
        divmod(a, b, q, r);
        BigInt twice = r.abs() + r.abs();
        if (twice > b) q = (a.sign() * b.sign() >= 0) ? q + BigInt(1) : q - BigInt(1);
        return q;
    }
};

// Gaussian rationals Q(i).
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(BigRational re) : re_(std::move(re)) {}
    GaussRational(long long re) : re_(re) {}
    GaussRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussRational(const GaussInt& g) : re_(g.re()), im_(g.im()) {}

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussRational: division by zero");
        BigRational n = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        return "(" + re_.to_string() + "," + im_.to_string() + "i)";
    }

private:
    BigRational re_, im_;
};

}  // namespace arcalg
