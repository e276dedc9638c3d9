#include "syz/field.hpp"

namespace syz {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL}) {
        if (n % d == 0) return n == d;
    }
    // Trial division suffices for the single-word moduli we accept.
    for (std::uint64_t d = 7; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldContext::FieldContext(std::uint64_t p) {
    if (p <= 2 || p >= (1ULL << 31))
        throw UsageError("prime modulus must satisfy 2 < p < 2^31");
    if (!is_prime_u64(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
    p_ = static_cast<fp_t>(p);
}

fp_t FieldContext::pow(fp_t base, std::uint64_t e) const {
    std::uint64_t acc = 1, b = base % p_;
    while (e) {
        if (e & 1) acc = acc * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return static_cast<fp_t>(acc);
}

fp_t FieldContext::inv(fp_t a) const {
    if (a == 0) throw UsageError("division by zero in GF(p)");
    // Extended Euclid; p prime so every nonzero element is a unit.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<fp_t>(t);
}

std::uint64_t FieldContext::order(fp_t a) const {
    if (a == 0) throw UsageError("order of zero is undefined");
    std::uint64_t ord = p_ - 1;
    for (std::uint64_t q : prime_factors(p_ - 1)) {
        while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
    }
    return ord;
}

fp_t FieldContext::primitive_root_of_unity(std::uint64_t l) const {
    if (l < 2) throw UsageError("root-of-unity level must be >= 2");
    if ((p_ - 1) % l != 0)
        throw UsageError("no order-" + std::to_string(l) + " root of unity mod " +
                         std::to_string(p_));
    auto l_factors = prime_factors(l);
    // Deterministic scan: first base whose (p-1)/l power has exact order l.
    for (fp_t c = 2; c < p_; ++c) {
        fp_t z = pow(c, (p_ - 1) / l);
        bool exact = true;
        for (std::uint64_t q : l_factors) {
            if (pow(z, l / q) == 1) {
                exact = false;
                break;
            }
        }
        if (exact) return z;
    }
    throw UsageError("no order-" + std::to_string(l) + " root of unity mod " +
                     std::to_string(p_));
}

}  // namespace syz
