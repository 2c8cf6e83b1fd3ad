#include "specpos/field.hpp"

#include <array>
#include <cctype>

namespace specpos {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on signed 128-bit accumulators.
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a proven deterministic witness set for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
    if (p < 2 || p > kMaxModulus)
        fail(ErrorCode::InvalidInput, "prime-field modulus out of range [2, 2^61-1]");
    if (!is_prime_u64(p))
        fail(ErrorCode::InvalidInput, "prime-field modulus " + std::to_string(p) + " is not prime");
    return FieldDescriptor(FieldKind::PrimeField, p);
}

std::string FieldDescriptor::to_string() const {
    if (is_rational()) return "Q";
    return "GF(" + std::to_string(modulus_) + ")";
}

FieldElement FieldElement::zero(const FieldDescriptor& field) {
    if (field.is_rational()) return FieldElement(field, mpq_class(0));
    return FieldElement(field, std::uint64_t{0});
}

FieldElement FieldElement::one(const FieldDescriptor& field) {
    if (field.is_rational()) return FieldElement(field, mpq_class(1));
    return FieldElement(field, std::uint64_t{1} % field.modulus());
}

FieldElement FieldElement::from_integer(const FieldDescriptor& field, long long value) {
    if (field.is_rational()) return FieldElement(field, mpq_class(static_cast<long>(value)));
    const std::uint64_t p = field.modulus();
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return FieldElement(field, static_cast<std::uint64_t>(r));
}

FieldElement FieldElement::from_string(const FieldDescriptor& field, const std::string& text) {
    // Accept optional sign, digits, optional "/digits".
    const auto bad = [&]() {
        fail(ErrorCode::InvalidInput, "malformed scalar \"" + text + "\"");
    };
    if (text.empty()) bad();
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) bad();
    bool seen_slash = false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/') {
            if (seen_slash || j + 1 >= text.size()) bad();
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) bad();
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) bad();
    if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "scalar with zero denominator");
    q.canonicalize();
    if (field.is_rational()) return FieldElement(field, std::move(q));

    const std::uint64_t p = field.modulus();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    if (d == 0) fail(ErrorCode::DivisionByZero, "denominator of \"" + text + "\" vanishes mod " + std::to_string(p));
    return FieldElement(field, mulmod(n, invmod(d, p), p));
}

bool FieldElement::is_zero() const {
    if (field_.is_rational()) return rational() == 0;
    return residue() == 0;
}

bool FieldElement::is_one() const {
    if (field_.is_rational()) return rational() == 1;
    return residue() == 1 % field_.modulus();
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_))
        fail(ErrorCode::MixedFields, "operands live in different fields (" + field_.to_string() +
                                         " vs " + rhs.field_.to_string() + ")");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (field_.is_rational()) return FieldElement(field_, mpq_class(rational() + rhs.rational()));
    const std::uint64_t p = field_.modulus();
    std::uint64_t s = residue() + rhs.residue();  // < 2^62, no overflow
    if (s >= p) s -= p;
    return FieldElement(field_, s);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (field_.is_rational()) return FieldElement(field_, mpq_class(rational() - rhs.rational()));
    const std::uint64_t p = field_.modulus();
    std::uint64_t a = residue(), b = rhs.residue();
    return FieldElement(field_, a >= b ? a - b : a + p - b);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (field_.is_rational()) return FieldElement(field_, mpq_class(rational() * rhs.rational()));
    return FieldElement(field_, mulmod(residue(), rhs.residue(), field_.modulus()));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    if (field_.is_rational()) return FieldElement(field_, mpq_class(rational() / rhs.rational()));
    const std::uint64_t p = field_.modulus();
    return FieldElement(field_, mulmod(residue(), invmod(rhs.residue(), p), p));
}

FieldElement FieldElement::operator-() const {
    if (field_.is_rational()) return FieldElement(field_, mpq_class(-rational()));
    const std::uint64_t p = field_.modulus();
    std::uint64_t r = residue();
    return FieldElement(field_, r == 0 ? 0 : p - r);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (field_.is_rational()) return FieldElement(field_, mpq_class(1 / rational()));
    return FieldElement(field_, invmod(residue(), field_.modulus()));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (field_.is_rational()) return rational() == rhs.rational();
    return residue() == rhs.residue();
}

std::string FieldElement::to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

FieldElement sample_uniform(const FieldDescriptor& field, SeededRng& rng,
                            const RationalSampleRange& range) {
    if (field.is_prime()) {
        return FieldElement::from_integer(field, static_cast<long long>(rng.below(field.modulus())));
    }
    if (range.high <= 0 || range.low > range.high)
        fail(ErrorCode::InvalidInput, "rational sample range must satisfy low <= high, high > 0");
    const std::uint64_t width = static_cast<std::uint64_t>(range.high - range.low) + 1;
    long long num = range.low + static_cast<long long>(rng.below(width));
    long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(range.high)));
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return FieldElement::from_string(field, q.get_str());
}

}  // namespace specpos
