#ifndef TRICOVER_BIGINT_HPP
#define TRICOVER_BIGINT_HPP

// Minimal signed arbitrary-precision integer: just enough ring arithmetic
// (add, sub, mul, small divisor divmod, gcd, comparisons) for exact
// Eisenstein-integer and rational matrix work. Not a general bignum.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricover {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v) {
        if (v < 0) { neg_ = true; }
        std::uint64_t m = neg_ ? (~static_cast<std::uint64_t>(v) + 1u) : static_cast<std::uint64_t>(v);
        while (m != 0) { limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu)); m >>= 32; }
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
            r.trim();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        BigInt r;
        if (c == 0) return r;
        if (c > 0) { r.limbs_ = sub_mag(a.limbs_, b.limbs_); r.neg_ = a.neg_; }
        else       { r.limbs_ = sub_mag(b.limbs_, a.limbs_); r.neg_ = b.neg_; }
        r.trim();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j]
                                  + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.neg_ = a.neg_ != b.neg_;
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    // Quotient (truncated toward zero) and remainder for a small divisor.
    BigInt divmod_small(std::uint32_t d, std::uint32_t& rem) const {
        if (d == 0) throw std::invalid_argument("BigInt: division by zero");
        BigInt q;
        q.limbs_.assign(limbs_.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<std::uint32_t>(r);
        q.neg_ = neg_ && !q.all_zero();
        q.trim();
        return q;
    }

    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        std::uint64_t m = mag_u64();
        return neg_ ? m <= 0x8000000000000000ull : m < 0x8000000000000000ull;
    }

    std::int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        std::uint64_t m = mag_u64();
        return neg_ ? -static_cast<std::int64_t>(m - 1) - 1 : static_cast<std::int64_t>(m);
    }

    double to_double() const {
        double r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
        return neg_ ? -r : r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt t = *this;
        t.neg_ = false;
        std::string digits;
        while (!t.is_zero()) {
            std::uint32_t rem = 0;
            t = t.divmod_small(1000000000u, rem);
            for (int k = 0; k < 9; ++k) { digits.push_back(static_cast<char>('0' + rem % 10)); rem /= 10; }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (neg_) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    BigInt half() const { // arithmetic shift of magnitude; requires even or caller not caring about rounding
        BigInt r = *this;
        std::uint32_t carry = 0;
        for (std::size_t i = r.limbs_.size(); i-- > 0;) {
            std::uint32_t cur = r.limbs_[i];
            r.limbs_[i] = (cur >> 1) | (carry << 31);
            carry = cur & 1u;
        }
        r.trim();
        return r;
    }

    friend BigInt abs(const BigInt& a) {
        BigInt r = a;
        r.neg_ = false;
        return r;
    }

    // gcd of magnitudes (binary algorithm); gcd(0,0) = 0.
    friend BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int shift = 0;
        while (a.is_even() && b.is_even()) { a = a.half(); b = b.half(); ++shift; }
        while (a.is_even()) a = a.half();
        while (!b.is_zero()) {
            while (b.is_even()) b = b.half();
            if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a, b);
            b = b - a;
            b.neg_ = false;
        }
        for (int i = 0; i < shift; ++i) a = a + a;
        return a;
    }

private:
    bool neg_ = false;
    std::vector<std::uint32_t> limbs_; // little endian, no leading zeros

    bool all_zero() const {
        for (auto l : limbs_) if (l) return false;
        return true;
    }
    std::uint64_t mag_u64() const {
        std::uint64_t m = 0;
        if (limbs_.size() > 1) m = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) m |= limbs_[0];
        return m;
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += 0x100000000ll;
            r[i] = static_cast<std::uint32_t>(cur);
        }
        return r;
    }
};

// Exact rational with BigInt numerator/denominator, denominator > 0, reduced.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(std::int64_t n) : num_(n), den_(1) {}
    BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static BigRat frac(std::int64_t n, std::int64_t d) { return BigRat(BigInt(n), BigInt(d)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw std::invalid_argument("BigRat: division by zero");
        return BigRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend BigRat operator-(const BigRat& a) { return BigRat(-a.num_, a.den_); }
    BigRat& operator+=(const BigRat& b) { *this = *this + b; return *this; }
    BigRat& operator-=(const BigRat& b) { *this = *this - b; return *this; }
    BigRat& operator*=(const BigRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const {
        return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;
    void normalize() {
        if (den_.is_zero()) throw std::invalid_argument("BigRat: zero denominator");
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    // exact division by a known divisor, via repeated small steps is too slow;
    // use long division against g limb-by-limb through to_string-free method:
    // here divisor fits the general case, so implement via classic schoolbook.
    static BigInt exact_div(const BigInt& a, const BigInt& g);
};

// Schoolbook magnitude division (quotient only), sufficient for reduction.
inline BigInt BigRat::exact_div(const BigInt& a, const BigInt& g) {
    // binary long division on magnitudes
    BigInt n = abs(a), d = abs(g), q(0), r(0);
    // collect bits of n from most significant
    std::vector<bool> bits;
    {
        BigInt t = n;
        while (!t.is_zero()) { bits.push_back(!t.is_even()); t = t.half(); }
    }
    for (std::size_t i = bits.size(); i-- > 0;) {
        r = r + r;
        if (bits[i]) r = r + BigInt(1);
        q = q + q;
        if (!(r < d)) { r = r - d; q = q + BigInt(1); }
    }
    if (a.is_negative() != g.is_negative()) q = -q;
    return q;
}

} // namespace tricover

#endif
