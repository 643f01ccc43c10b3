#pragma once

#include <cstdint>
#include <string>

#include "haemers/base.hpp"

namespace haemers {

inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

// Runtime descriptor of the scalar field: GF(p) with p < 2^31, or Q.
struct FieldSpec {
    enum class Kind { Prime, Rationals };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec prime(std::uint64_t p) {
        if (p >= (1ull << 31))
            throw BadParameter("prime modulus must be < 2^31");
        if (!is_prime_u32(p))
            throw BadParameter(std::to_string(p) + " is not prime");
        FieldSpec f;
        f.kind = Kind::Prime;
        f.p = static_cast<std::uint32_t>(p);
        return f;
    }
    static FieldSpec rationals() { return FieldSpec{}; }

    bool operator==(const FieldSpec&) const = default;

    std::string str() const {
        return kind == Kind::Prime ? std::to_string(p) : std::string("Q");
    }
    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "q") return rationals();
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
        if (end == nullptr || *end != '\0')
            throw ParseError("bad field spec '" + s + "'");
        return prime(v);
    }
};

// Prime field GF(p). Elements are canonical residues in [0, p).
class Gf {
public:
    using Elem = std::uint32_t;

    Gf() : p_(2) {}
    explicit Gf(std::uint32_t p) : p_(FieldSpec::prime(p).p) {}
    explicit Gf(const FieldSpec& fs) : p_(fs.p) {
        if (fs.kind != FieldSpec::Kind::Prime)
            throw FieldMismatch("FieldSpec is not a prime field");
    }

    FieldSpec spec() const { return FieldSpec::prime(p_); }
    std::uint32_t modulus() const { return p_; }
    bool operator==(const Gf&) const = default;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        const std::uint64_t s = std::uint64_t(a) + b;
        return Elem(s >= p_ ? s - p_ : s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p_ - b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return Elem((std::uint64_t(a) * b) % p_);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inverse of 0 in GF(p)");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            const std::int64_t q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        if (t < 0) t += p_;
        return Elem(t);
    }

    Elem from_int(const BigInt& v) const {
        BigInt m = v % p_;
        if (m < 0) m += p_;
        return m.convert_to<Elem>();
    }
    Elem parse(const std::string& s) const {
        return from_int(BigInt(s));
    }
    std::string str(Elem a) const { return std::to_string(a); }
    Rational lift_elem(Elem a) const { return Rational(a); }

private:
    std::uint32_t p_;
};

// The rationals with gcd-normalized elements.
class Rat {
public:
    using Elem = Rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    bool operator==(const Rat&) const = default;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return a == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("inverse of 0");
        return 1 / a;
    }

    Elem from_int(const BigInt& v) const { return Rational(v); }
    Elem parse(const std::string& s) const { return parse_rational(s); }
    std::string str(const Elem& a) const { return to_string(a); }
    Rational lift_elem(const Elem& a) const { return a; }
};

}  // namespace haemers
