#ifndef CROSSCUT_BIGINT_HPP
#define CROSSCUT_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace crosscut {

/// Signed arbitrary-precision integer used for all edge weights and cut
/// values. Values that fit in a machine word stay on a fast inline path;
/// anything larger spills into a limb vector. All arithmetic is exact.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)

    /// Parses "[+-]?digits". Throws std::invalid_argument on anything else.
    static BigInt from_decimal(std::string_view s);
    static BigInt pow10(int exp);

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return (*this <=> o) == 0; }

    BigInt abs() const { return sign() < 0 ? -*this : *this; }
    int sign() const;
    bool is_zero() const { return sign() == 0; }

    bool fits_int64() const { return mag_.empty(); }
    long long to_int64() const;  // throws std::overflow_error if too large

    std::string to_string() const;
    /// Renders value / 10^scale as an exact decimal string, e.g. 2500 with
    /// scale 3 -> "2.5". Trailing fractional zeros are trimmed.
    std::string to_decimal_string(int scale) const;

private:
    // Invariant: either mag_ is empty and small_ holds the value, or mag_ is
    // a normalized little-endian magnitude (top limb nonzero), sign_ in
    // {-1,+1}, and the value does not fit in int64.
    long long small_ = 0;
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static std::vector<std::uint32_t> limbs_of(unsigned long long v);
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static BigInt make(int sign, std::vector<std::uint32_t> mag);
    void split(int& sign, std::vector<std::uint32_t>& mag) const;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace crosscut

#endif
