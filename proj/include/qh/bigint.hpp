#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

// Arbitrary-precision signed integer, base 10^9 limbs, little-endian.
// Zero is canonical: empty limb vector, non-negative sign.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { negative_ = true; }
        unsigned long long m = negative_ ? 0ULL - static_cast<unsigned long long>(v)
                                         : static_cast<unsigned long long>(v);
        while (m > 0) {
            limbs_.push_back(static_cast<uint32_t>(m % kBase));
            m /= kBase;
        }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
        // parse in chunks of 9 digits from the end
        size_t len = s.size() - i;
        size_t nchunks = (len + 8) / 9;
        r.limbs_.resize(nchunks, 0);
        size_t end = s.size();
        for (size_t c = 0; c < nchunks; ++c) {
            size_t begin = (end >= i + 9) ? end - 9 : i;
            r.limbs_[c] = static_cast<uint32_t>(std::stoul(s.substr(begin, end - begin)));
            end = begin;
        }
        r.trim();
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out = negative_ ? "-" : "";
        out += std::to_string(limbs_.back());
        for (size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    // Returns value if it fits in long long, throws otherwise.
    long long to_long_long() const {
        unsigned long long m = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            if (m > (~0ULL - limbs_[i]) / kBase) throw std::overflow_error("BigInt: to_long_long overflow");
            m = m * kBase + limbs_[i];
        }
        if (!negative_ && m > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt: to_long_long overflow");
        if (negative_ && m > 0x8000000000000000ULL) throw std::overflow_error("BigInt: to_long_long overflow");
        return negative_ ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        r.negative_ = (a.negative_ != b.negative_);
        return r;
    }

    // Truncated division (quotient rounds toward zero), matching C semantics.
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) return {BigInt(), a};
        // long division, limb by limb with binary search on the digit
        BigInt rem, quo;
        quo.limbs_.assign(a.limbs_.size(), 0);
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            rem.shift_up_one_limb(a.limbs_[i]);
            uint32_t lo = 0, hi = kBase - 1, digit = 0;
            while (lo <= hi) {
                uint32_t mid = lo + (hi - lo) / 2;
                if (cmp_mag(mul_mag_small(b.limbs_, mid), rem.limbs_) <= 0) {
                    digit = mid;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            if (digit) {
                rem.limbs_ = sub_mag(rem.limbs_, mul_mag_small(b.limbs_, digit));
                rem.trim();
            }
            quo.limbs_[i] = digit;
        }
        quo.trim();
        rem.trim();
        quo.negative_ = (a.negative_ != b.negative_) && !quo.is_zero();
        rem.negative_ = a.negative_ && !rem.is_zero();
        return {quo, rem};
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        while (!b.is_zero()) {
            BigInt r = a % b;
            r.negative_ = false;
            a = b;
            b = r;
        }
        return a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    size_t hash() const {
        size_t h = negative_ ? 0x9e3779b97f4a7c15ULL : 0;
        for (uint32_t l : limbs_) h = h * 1000003u + l;
        return h;
    }

private:
    static constexpr uint32_t kBase = 1000000000u;
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    void shift_up_one_limb(uint32_t low) {
        if (limbs_.empty() && low == 0) return;
        limbs_.insert(limbs_.begin(), low);
        trim();
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint32_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = static_cast<uint32_t>(cur / kBase);
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(carry);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> mul_mag_small(const std::vector<uint32_t>& a, uint32_t m) {
        if (m == 0 || a.empty()) return {};
        std::vector<uint32_t> r(a.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * m + carry;
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r[a.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

} // namespace qh
