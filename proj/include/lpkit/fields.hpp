#pragma once

// Exact field arithmetic over Q, GF(p) and the binary fields GF(4), GF(8).
//
// Every element is kept in a canonical form, so equality of values is
// equality of representations:
//   - rationals: reduced fraction, positive denominator (0 is 0/1)
//   - prime fields: residue in [0, p)
//   - binary fields: polynomial residue of degree < k, bit i = coefficient
//     of w^i, reduced modulo a fixed irreducible polynomial
//
// Fixed moduli: GF(4) = GF(2)[w]/(w^2+w+1), GF(8) = GF(2)[w]/(w^3+w+1).
// Mixing elements of different fields in one operation is an error, never a
// coercion.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed element text, field spec, or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Field arithmetic misuse: descriptor mismatch, division by zero,
/// unsupported descriptor parameters.
class FieldError : public Error {
public:
    using Error::Error;
};

/// Structurally broken aggregate (wrong sequence lengths, bad dimensions).
class StructureError : public Error {
public:
    using Error::Error;
};

/// Operation that requires a valid parameter array received an invalid one.
class InvalidArrayError : public Error {
public:
    using Error::Error;
};

/// A family generator could not produce a valid array from the given data.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// Exact linear algebra failure: singular matrix, wrong eigenspace
/// dimension, unexpected nonzero entry outside the tridiagonal bands.
class MatrixError : public Error {
public:
    using Error::Error;
};

/// A proven identity failed on a valid array; signals a transcription or
/// implementation bug, never expected output.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

enum class FieldKind { Rational, Prime, Binary };

namespace detail {

inline bool is_prime_small(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// Modulus bit patterns for the fixed irreducible polynomials.
inline unsigned binary_modulus_bits(int k) { return k == 2 ? 0b111u : 0b1011u; }

}  // namespace detail

class FieldDescriptor {
public:
    static FieldDescriptor rational() { return FieldDescriptor(FieldKind::Rational, 0, 0); }

    static FieldDescriptor prime(std::int64_t p) {
        if (p < 2 || p > ((std::int64_t{1} << 31) - 1))
            throw FieldError("prime modulus out of supported range: " + std::to_string(p));
        if (!detail::is_prime_small(p))
            throw FieldError("modulus is not prime: " + std::to_string(p));
        return FieldDescriptor(FieldKind::Prime, p, 0);
    }

    static FieldDescriptor binary(int k) {
        if (k != 2 && k != 3)
            throw FieldError("binary field degree must be 2 or 3, got " + std::to_string(k));
        return FieldDescriptor(FieldKind::Binary, 0, k);
    }

    FieldKind kind() const { return kind_; }
    std::int64_t prime_modulus() const { return p_; }
    int extension_degree() const { return k_; }

    std::int64_t characteristic() const {
        switch (kind_) {
            case FieldKind::Rational: return 0;
            case FieldKind::Prime: return p_;
            case FieldKind::Binary: return 2;
        }
        return 0;
    }

    /// Number of elements; nullopt for the infinite field.
    std::optional<std::int64_t> size() const {
        switch (kind_) {
            case FieldKind::Rational: return std::nullopt;
            case FieldKind::Prime: return p_;
            case FieldKind::Binary: return std::int64_t{1} << k_;
        }
        return std::nullopt;
    }

    // "rational" | "prime:7" | "binary:2", the CLI --field grammar.
    std::string to_string() const {
        switch (kind_) {
            case FieldKind::Rational: return "rational";
            case FieldKind::Prime: return "prime:" + std::to_string(p_);
            case FieldKind::Binary: return "binary:" + std::to_string(k_);
        }
        return "?";
    }

    static FieldDescriptor from_string(const std::string& text) {
        if (text == "rational") return rational();
        auto colon = text.find(':');
        if (colon != std::string::npos) {
            const std::string head = text.substr(0, colon);
            const std::string tail = text.substr(colon + 1);
            try {
                if (head == "prime") return prime(std::stoll(tail));
                if (head == "binary") return binary(std::stoi(tail));
            } catch (const std::logic_error&) {
                throw ParseError("bad field parameter: " + text);
            } catch (const FieldError& e) {
                throw ParseError(e.what());
            }
        }
        throw ParseError("unrecognized field: \"" + text + "\" (expected rational | prime:p | binary:k)");
    }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_;
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) { return !(a == b); }

private:
    FieldDescriptor(FieldKind kind, std::int64_t p, int k) : kind_(kind), p_(p), k_(k) {}

    FieldKind kind_;
    std::int64_t p_;
    int k_;
};

inline std::int64_t characteristic(const FieldDescriptor& d) { return d.characteristic(); }

class FieldElement {
public:
    FieldElement() = delete;

    static FieldElement zero(const FieldDescriptor& d) { return from_integer(d, 0); }
    static FieldElement one(const FieldDescriptor& d) { return from_integer(d, 1); }

    /// The canonical image of an integer, n -> n * 1.
    static FieldElement from_integer(const FieldDescriptor& d, std::int64_t n) {
        switch (d.kind()) {
            case FieldKind::Rational: return FieldElement(d, BigRational(n));
            case FieldKind::Prime: {
                std::int64_t r = n % d.prime_modulus();
                if (r < 0) r += d.prime_modulus();
                return FieldElement(d, r);
            }
            case FieldKind::Binary: return FieldElement(d, static_cast<std::uint8_t>(n & 1));
        }
        throw FieldError("unreachable");
    }

    static FieldElement from_integer(const FieldDescriptor& d, const BigInt& n) {
        switch (d.kind()) {
            case FieldKind::Rational: return FieldElement(d, BigRational(n));
            case FieldKind::Prime: {
                BigInt r = n % d.prime_modulus();
                if (r < 0) r += d.prime_modulus();
                return FieldElement(d, r.convert_to<std::int64_t>());
            }
            case FieldKind::Binary: return FieldElement(d, static_cast<std::uint8_t>(n % 2 == 0 ? 0 : 1));
        }
        throw FieldError("unreachable");
    }

    static FieldElement from_rational(const FieldDescriptor& d, const BigRational& q) {
        if (d.kind() != FieldKind::Rational) throw FieldError("from_rational on non-rational field");
        return FieldElement(d, q);
    }

    /// Element with the given canonical residue bits of a binary field.
    static FieldElement from_bits(const FieldDescriptor& d, unsigned bits) {
        if (d.kind() != FieldKind::Binary) throw FieldError("from_bits on non-binary field");
        if (bits >= (1u << d.extension_degree())) throw FieldError("residue bits out of range");
        return FieldElement(d, static_cast<std::uint8_t>(bits));
    }

    static FieldElement from_residue(const FieldDescriptor& d, std::int64_t r) {
        if (d.kind() != FieldKind::Prime) throw FieldError("from_residue on non-prime field");
        return from_integer(d, r);
    }

    const FieldDescriptor& descriptor() const { return desc_; }

    bool is_zero() const {
        switch (desc_.kind()) {
            case FieldKind::Rational: return rat().is_zero();
            case FieldKind::Prime: return res() == 0;
            case FieldKind::Binary: return bits() == 0;
        }
        return false;
    }

    bool is_one() const { return *this == one(desc_); }

    const BigRational& rational_value() const { return rat(); }
    std::int64_t residue() const { return res(); }
    unsigned bit_pattern() const { return bits(); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check_same_field(a, b);
        return a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same_field(a, b);
        switch (a.desc_.kind()) {
            case FieldKind::Rational: return FieldElement(a.desc_, BigRational(a.rat() + b.rat()));
            case FieldKind::Prime: {
                std::int64_t r = a.res() + b.res();
                if (r >= a.desc_.prime_modulus()) r -= a.desc_.prime_modulus();
                return FieldElement(a.desc_, r);
            }
            case FieldKind::Binary:
                return FieldElement(a.desc_, static_cast<std::uint8_t>(a.bits() ^ b.bits()));
        }
        throw FieldError("unreachable");
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

    friend FieldElement operator-(const FieldElement& a) {
        switch (a.desc_.kind()) {
            case FieldKind::Rational: return FieldElement(a.desc_, BigRational(-a.rat()));
            case FieldKind::Prime:
                return FieldElement(a.desc_, a.res() == 0 ? 0 : a.desc_.prime_modulus() - a.res());
            case FieldKind::Binary: return a;  // characteristic 2
        }
        throw FieldError("unreachable");
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same_field(a, b);
        switch (a.desc_.kind()) {
            case FieldKind::Rational: return FieldElement(a.desc_, BigRational(a.rat() * b.rat()));
            case FieldKind::Prime:
                // residues < 2^31, so the product fits in int64
                return FieldElement(a.desc_, (a.res() * b.res()) % a.desc_.prime_modulus());
            case FieldKind::Binary:
                return FieldElement(a.desc_, mul_bits(a.bits(), b.bits(), a.desc_.extension_degree()));
        }
        throw FieldError("unreachable");
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same_field(a, b);
        return a * b.inverse();
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const {
        if (is_zero()) throw FieldError("division by zero in " + desc_.to_string());
        switch (desc_.kind()) {
            case FieldKind::Rational: return FieldElement(desc_, BigRational(BigRational(1) / rat()));
            case FieldKind::Prime: return FieldElement(desc_, mod_inverse(res(), desc_.prime_modulus()));
            case FieldKind::Binary: {
                const int k = desc_.extension_degree();
                for (unsigned x = 1; x < (1u << k); ++x)
                    if (mul_bits(bits(), static_cast<std::uint8_t>(x), k) == 1)
                        return FieldElement(desc_, static_cast<std::uint8_t>(x));
                throw FieldError("unreachable: nonzero element without inverse");
            }
        }
        throw FieldError("unreachable");
    }

    FieldElement pow(std::int64_t e) const {
        FieldElement base = *this;
        std::uint64_t ue;
        if (e < 0) {
            base = inverse();
            ue = static_cast<std::uint64_t>(-(e + 1)) + 1u;
        } else {
            ue = static_cast<std::uint64_t>(e);
        }
        FieldElement acc = one(desc_);
        while (ue != 0) {
            if (ue & 1u) acc *= base;
            base *= base;
            ue >>= 1;
        }
        return acc;
    }

private:
    using Value = std::variant<BigRational, std::int64_t, std::uint8_t>;

    FieldElement(const FieldDescriptor& d, Value v) : desc_(d), value_(std::move(v)) {}

    const BigRational& rat() const { return std::get<BigRational>(value_); }
    std::int64_t res() const { return std::get<std::int64_t>(value_); }
    std::uint8_t bits() const { return std::get<std::uint8_t>(value_); }

    static void check_same_field(const FieldElement& a, const FieldElement& b) {
        if (a.desc_ != b.desc_)
            throw FieldError("mixed-field operation: " + a.desc_.to_string() + " vs " + b.desc_.to_string());
    }

    static std::uint8_t mul_bits(std::uint8_t a, std::uint8_t b, int k) {
        // Carry-less product, then reduction modulo the fixed irreducible.
        unsigned prod = 0;
        for (int i = 0; i < k; ++i)
            if (a & (1u << i)) prod ^= static_cast<unsigned>(b) << i;
        const unsigned modulus = detail::binary_modulus_bits(k);
        for (int deg = 2 * (k - 1); deg >= k; --deg)
            if (prod & (1u << deg)) prod ^= modulus << (deg - k);
        return static_cast<std::uint8_t>(prod);
    }

    static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
        // extended Euclid; a in [1, p)
        std::int64_t old_r = a, r = p;
        std::int64_t old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t q = old_r / r;
            std::int64_t tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        std::int64_t inv = old_s % p;
        if (inv < 0) inv += p;
        return inv;
    }

    FieldDescriptor desc_;
    Value value_;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline BigInt parse_integer(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    skip_ws(s, i);
    const std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw ParseError("expected an integer in \"" + s + "\"");
    BigInt value(s.substr(start, i - start));
    return negative ? BigInt(-value) : value;
}

inline FieldElement parse_binary_polynomial(const FieldDescriptor& d, const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw ParseError("empty element text");

    const FieldElement w = FieldElement::from_bits(d, 0b10);
    const std::int64_t order = (std::int64_t{1} << d.extension_degree()) - 1;  // w is primitive

    FieldElement acc = FieldElement::zero(d);
    std::size_t i = 0;
    while (true) {
        if (i >= s.size()) throw ParseError("dangling '+' in \"" + text + "\"");
        if (s[i] == '0' || s[i] == '1') {
            acc += FieldElement::from_integer(d, s[i] - '0');
            ++i;
        } else if (s[i] == 'w') {
            ++i;
            std::int64_t e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const std::size_t start = i;
                std::int64_t em = 0;
                while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                    em = (em * 10 + (s[i] - '0')) % order;  // exponent mod ord(w)
                    ++i;
                }
                if (i == start) throw ParseError("missing exponent in \"" + text + "\"");
                e = em;
            }
            acc += w.pow(e);
        } else {
            throw ParseError("unexpected character '" + std::string(1, s[i]) + "' in \"" + text + "\"");
        }
        if (i == s.size()) break;
        if (s[i] != '+') throw ParseError("expected '+' in \"" + text + "\"");
        ++i;
    }
    return acc;
}

}  // namespace detail

inline FieldElement parse_element(const FieldDescriptor& d, const std::string& text) {
    switch (d.kind()) {
        case FieldKind::Rational: {
            std::size_t i = 0;
            BigInt num = detail::parse_integer(text, i);
            detail::skip_ws(text, i);
            BigInt den = 1;
            if (i < text.size() && text[i] == '/') {
                ++i;
                den = detail::parse_integer(text, i);
                if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
            }
            detail::skip_ws(text, i);
            if (i != text.size()) throw ParseError("trailing characters in \"" + text + "\"");
            BigRational value(num);
            value /= BigRational(den);
            return FieldElement::from_rational(d, value);
        }
        case FieldKind::Prime: {
            std::size_t i = 0;
            BigInt n = detail::parse_integer(text, i);
            detail::skip_ws(text, i);
            if (i != text.size()) throw ParseError("trailing characters in \"" + text + "\"");
            return FieldElement::from_integer(d, n);  // residue reduction, not an error
        }
        case FieldKind::Binary:
            return detail::parse_binary_polynomial(d, text);
    }
    throw ParseError("unreachable");
}

inline std::string format_element(const FieldElement& e) {
    const FieldDescriptor& d = e.descriptor();
    switch (d.kind()) {
        case FieldKind::Rational: {
            const BigRational& q = e.rational_value();
            std::string out = numerator(q).str();
            if (denominator(q) != 1) out += "/" + denominator(q).str();
            return out;
        }
        case FieldKind::Prime:
            return std::to_string(e.residue());
        case FieldKind::Binary: {
            const unsigned bits = e.bit_pattern();
            if (bits == 0) return "0";
            std::string out;
            for (int deg = d.extension_degree() - 1; deg >= 0; --deg) {
                if (!(bits & (1u << deg))) continue;
                if (!out.empty()) out += "+";
                if (deg == 0) out += "1";
                else if (deg == 1) out += "w";
                else out += "w^" + std::to_string(deg);
            }
            return out;
        }
    }
    return "?";
}

/// All elements of a finite field, in canonical index order.
inline std::vector<FieldElement> enumerate_elements(const FieldDescriptor& d) {
    std::vector<FieldElement> out;
    const auto size = d.size();
    if (!size) throw FieldError("cannot enumerate an infinite field");
    out.reserve(static_cast<std::size_t>(*size));
    for (std::int64_t i = 0; i < *size; ++i) {
        if (d.kind() == FieldKind::Prime)
            out.push_back(FieldElement::from_residue(d, i));
        else
            out.push_back(FieldElement::from_bits(d, static_cast<unsigned>(i)));
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << format_element(e);
}

}  // namespace lpkit
