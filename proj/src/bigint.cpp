#include "crosscut/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace crosscut {

namespace {
constexpr unsigned long long kAbsInt64Min =
    static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ULL;

unsigned long long abs_ull(long long v) {
    return v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                 : static_cast<unsigned long long>(v);
}
}  // namespace

std::vector<std::uint32_t> BigInt::limbs_of(unsigned long long v) {
    std::vector<std::uint32_t> m;
    while (v != 0) {
        m.push_back(static_cast<std::uint32_t>(v & 0xffffffffULL));
        v >>= 32;
    }
    return m;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r(hi.size());
    unsigned long long carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        unsigned long long s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    long long borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long d = static_cast<long long>(a[i]) - borrow -
                      (i < b.size() ? static_cast<long long>(b[i]) : 0LL);
        if (d < 0) {
            d += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned long long carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            unsigned long long cur = r[i + j] +
                                     static_cast<unsigned long long>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            unsigned long long cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::make(int sign, std::vector<std::uint32_t> mag) {
    BigInt v;
    if (mag.empty() || sign == 0) return v;
    // demote to the inline representation when it fits
    if (mag.size() <= 2) {
        unsigned long long u = mag[0];
        if (mag.size() == 2) u |= static_cast<unsigned long long>(mag[1]) << 32;
        if (sign > 0 &&
            u <= static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
            v.small_ = static_cast<long long>(u);
            return v;
        }
        if (sign < 0 && u <= kAbsInt64Min) {
            v.small_ = (u == kAbsInt64Min) ? std::numeric_limits<long long>::min()
                                           : -static_cast<long long>(u);
            return v;
        }
    }
    v.sign_ = sign;
    v.mag_ = std::move(mag);
    return v;
}

void BigInt::split(int& sign, std::vector<std::uint32_t>& mag) const {
    if (mag_.empty()) {
        sign = small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
        mag = limbs_of(abs_ull(small_));
    } else {
        sign = sign_;
        mag = mag_;
    }
}

int BigInt::sign() const {
    if (!mag_.empty()) return sign_;
    return small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
}

long long BigInt::to_int64() const {
    if (!mag_.empty()) throw std::overflow_error("BigInt::to_int64: out of range");
    return small_;
}

BigInt BigInt::operator-() const {
    if (mag_.empty()) {
        if (small_ != std::numeric_limits<long long>::min()) return BigInt(-small_);
        return make(1, limbs_of(kAbsInt64Min));
    }
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (mag_.empty() && o.mag_.empty()) {
        long long r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) return BigInt(r);
    }
    int sa, sb;
    std::vector<std::uint32_t> ma, mb;
    split(sa, ma);
    o.split(sb, mb);
    if (sa == 0) return o;
    if (sb == 0) return *this;
    if (sa == sb) return make(sa, add_mag(ma, mb));
    int c = cmp_mag(ma, mb);
    if (c == 0) return BigInt();
    return c > 0 ? make(sa, sub_mag(ma, mb)) : make(sb, sub_mag(mb, ma));
}

BigInt BigInt::operator-(const BigInt& o) const {
    if (mag_.empty() && o.mag_.empty()) {
        long long r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) return BigInt(r);
    }
    return *this + (-o);
}

BigInt BigInt::operator*(const BigInt& o) const {
    if (mag_.empty() && o.mag_.empty()) {
        long long r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) return BigInt(r);
    }
    int sa, sb;
    std::vector<std::uint32_t> ma, mb;
    split(sa, ma);
    o.split(sb, mb);
    if (sa == 0 || sb == 0) return BigInt();
    return make(sa * sb, mul_mag(ma, mb));
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (mag_.empty() && o.mag_.empty()) return small_ <=> o.small_;
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa <=> sb;
    int sa2, sb2;
    std::vector<std::uint32_t> ma, mb;
    split(sa2, ma);
    o.split(sb2, mb);
    int c = cmp_mag(ma, mb);
    if (sa < 0) c = -c;
    return c <=> 0;
}

BigInt BigInt::from_decimal(std::string_view s) {
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty number");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in number");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    return sign < 0 ? -r : r;
}

BigInt BigInt::pow10(int exp) {
    BigInt r(1);
    for (int i = 0; i < exp; ++i) r *= BigInt(10);
    return r;
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return std::to_string(small_);
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide magnitude by 10^9, emit remainder
        unsigned long long rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        std::string chunk = std::to_string(rem);
        if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
        digits.insert(0, chunk);
    }
    if (sign_ < 0) digits.insert(0, 1, '-');
    return digits;
}

std::string BigInt::to_decimal_string(int scale) const {
    std::string s = (sign() < 0 ? (-*this).to_string() : to_string());
    std::string out;
    if (scale > 0) {
        if (s.size() <= static_cast<std::size_t>(scale))
            s.insert(0, scale + 1 - s.size(), '0');
        std::string frac = s.substr(s.size() - scale);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = s.substr(0, s.size() - scale);
        if (!frac.empty()) out += "." + frac;
    } else {
        out = s;
    }
    if (sign() < 0) out.insert(0, 1, '-');
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
}

}  // namespace crosscut
