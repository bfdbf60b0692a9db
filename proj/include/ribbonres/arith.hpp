#pragma once

// Exact scalar arithmetic and coefficient-ring selection.
//
// All structural matrices in this project are integral by construction, so
// mpz_class is the canonical entry type.  Field computations run either over
// the rationals (mpq_class) or over a prime field F_p with p < 2^31, selected
// at runtime through CoefficientRing.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ribbonres {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// errors

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal mathematical guarantee failed; indicates a bug, not bad input.
struct ViolatedInvariant : std::logic_error {
    using std::logic_error::logic_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldRequiredError : UsageError {
    using UsageError::UsageError;
};

struct NotAComplexError : UsageError {
    using UsageError::UsageError;
};

struct DegenerateInputError : UsageError {
    using UsageError::UsageError;
};

// ---------------------------------------------------------------------------
// coefficient rings

enum class RingTag { rationals, prime_field, integers };

struct CoefficientRing {
    RingTag tag = RingTag::rationals;
    std::uint64_t p = 0;  // modulus when tag == prime_field

    static CoefficientRing rationals() { return {RingTag::rationals, 0}; }
    static CoefficientRing integers() { return {RingTag::integers, 0}; }
    static CoefficientRing prime_field(std::uint64_t p);

    bool is_field() const { return tag != RingTag::integers; }
    bool operator==(const CoefficientRing&) const = default;

    // flag syntax: "q", "z", "fp:<prime>"
    static CoefficientRing parse(const std::string& s);
    std::string str() const;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p) || p >= (1ull << 31))
        throw UsageError("prime_field modulus must be prime and < 2^31");
    return {RingTag::prime_field, p};
}

inline CoefficientRing CoefficientRing::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s == "z" || s == "Z") return integers();
    if (s.rfind("fp:", 0) == 0)
        return prime_field(std::stoull(s.substr(3)));
    throw UsageError("unrecognized ring spec '" + s + "' (use q, z, fp:<prime>)");
}

inline std::string CoefficientRing::str() const {
    switch (tag) {
        case RingTag::rationals: return "q";
        case RingTag::integers: return "z";
        case RingTag::prime_field: return "fp:" + std::to_string(p);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// field operation bundles for the generic elimination kernels

struct QOps {
    using Elem = Rat;
    static Elem zero() { return Rat(0); }
    static Elem one() { return Rat(1); }
    static Elem from_int(const Int& z) { return Rat(z); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem neg(const Elem& a) { return -a; }
};

struct FpOps {
    std::uint64_t p;
    using Elem = std::uint64_t;

    explicit FpOps(std::uint64_t p_) : p(p_) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(const Int& z) const {
        Int m = z % static_cast<unsigned long>(p);
        if (m < 0) m += static_cast<unsigned long>(p);
        return m.get_ui();
    }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), b = a % p;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a % p == 0) throw ViolatedInvariant("division by zero in F_p");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
};

// making QOps usable through a (stateless) instance, mirroring FpOps
struct QOpsV {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(const Int& z) const { return Rat(z); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
};

// ---------------------------------------------------------------------------
// small numeric helpers

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// dim S^m(k^n) = C(n+m-1, m)
inline Int sym_power_dim(int m, int n) {
    if (m < 0) return 0;
    return binomial(n + m - 1, m);
}

}  // namespace ribbonres
