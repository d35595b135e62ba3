#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace liesurf {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
/// Sized for exact linear algebra on 16-dimensional spaces: operands stay
/// in the hundreds of digits, so schoolbook algorithms are enough.
class BigInt {
public:
    BigInt() : neg_(false) {}
    BigInt(long long v) : neg_(v < 0) {
        unsigned long long m = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
            m >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.neg_ ? -c : c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        BigInt r;
        if (c == 0) return r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.neg_ = b.neg_;
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry != 0) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_) && !r.limbs_.empty();
        return r;
    }

    /// Truncated quotient and remainder; remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> quot, rem;
        divmod_mag(a.limbs_, b.limbs_, quot, rem);
        q.limbs_ = std::move(quot);
        q.trim();
        r.limbs_ = std::move(rem);
        r.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.limbs_.empty();
        r.neg_ = a.neg_ && !r.limbs_.empty();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int shift = 0;
        while (!a.is_odd() && !b.is_odd()) {
            a.shr1();
            b.shr1();
            ++shift;
        }
        while (!a.is_odd()) a.shr1();
        while (!b.is_zero()) {
            while (!b.is_odd()) b.shr1();
            if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a.limbs_, b.limbs_);
            b.limbs_ = sub_mag(b.limbs_, a.limbs_);
            BigInt::trim(b.limbs_);
        }
        for (int i = 0; i < shift; ++i) a.shl1();
        return a;
    }

    /// Integer square root of a perfect square; nullopt-style: returns false if not a square.
    static bool sqrt_exact(const BigInt& a, BigInt& root) {
        if (a.is_negative()) return false;
        if (a.is_zero()) {
            root = BigInt();
            return true;
        }
        BigInt lo(1), hi = a;
        while (lo <= hi) {
            BigInt mid = (lo + hi).half();
            BigInt sq = mid * mid;
            int c = cmp(sq, a);
            if (c == 0) {
                root = mid;
                return true;
            }
            if (c < 0)
                lo = mid + BigInt(1);
            else
                hi = mid - BigInt(1);
        }
        return false;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> chunks;
        BigInt t = abs();
        while (!t.is_zero()) chunks.push_back(t.divmod_small_inplace(1000000000u));
        std::string s = neg_ ? "-" : "";
        s += std::to_string(chunks.back());
        for (size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    /// Exact conversion when the value fits in long long; throws otherwise.
    long long to_ll() const {
        unsigned long long m = 0;
        if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
        for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        if (!neg_ && m > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in long long");
        if (neg_ && m > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in long long");
        return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

private:
    bool neg_;
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros

    void trim() { trim(limbs_); }
    static void trim(std::vector<uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    BigInt half() const {
        BigInt r = *this;
        r.shr1();
        return r;
    }

    void shr1() {
        uint32_t carry = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint32_t cur = limbs_[i];
            limbs_[i] = (cur >> 1) | (carry << 31);
            carry = cur & 1u;
        }
        trim();
        if (limbs_.empty()) neg_ = false;
    }
    void shl1() {
        uint32_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint32_t cur = limbs_[i];
            limbs_[i] = (cur << 1) | carry;
            carry = cur >> 31;
        }
        if (carry) limbs_.push_back(carry);
    }

    void mul_small_inplace(uint32_t m) {
        uint64_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) * m + carry;
            limbs_[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
        trim();
    }
    void add_small_inplace(uint32_t a) {
        uint64_t carry = a;
        for (size_t i = 0; i < limbs_.size() && carry; ++i) {
            uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }
    uint32_t divmod_small_inplace(uint32_t d) {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<uint32_t>(rem);
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const std::vector<uint32_t>& big = a.size() >= b.size() ? a : b;
        const std::vector<uint32_t>& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < small.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + small[i] + carry;
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        for (size_t i = small.size(); i < r.size() && carry; ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry;
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < b.size() || borrow; ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += int64_t(1) << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        trim(r);
        return r;
    }
    static size_t bit_length(const std::vector<uint32_t>& v) {
        if (v.empty()) return 0;
        uint32_t top = v.back();
        size_t bits = (v.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }
    // binary long division on magnitudes; |a| >= |b| > 0
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        BigInt rem;
        BigInt div;
        div.limbs_ = b;
        // process bits of a from most significant down
        for (size_t i = bit_length(a); i-- > 0;) {
            rem.shl1();
            if (a[i / 32] & (1u << (i % 32))) {
                if (rem.limbs_.empty())
                    rem.limbs_.push_back(1);
                else
                    rem.limbs_[0] |= 1u;
            }
            if (cmp_mag(rem.limbs_, div.limbs_) >= 0) {
                rem.limbs_ = sub_mag(rem.limbs_, div.limbs_);
                q[i / 32] |= (1u << (i % 32));
            }
        }
        trim(q);
        r = rem.limbs_;
    }
};

}  // namespace liesurf
