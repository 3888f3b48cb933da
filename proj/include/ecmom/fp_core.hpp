#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

namespace ecmom {

/// Deterministic primality by trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending, by sieve of Eratosthenes.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Exact arithmetic context for F_p, p >= 5 prime.  Holds the quadratic
// character table for the whole field; immutable after construction, so
// every operation is safe to call concurrently.
class PrimeField {
public:
    // Throws std::invalid_argument unless p is prime and p >= 5.
    explicit PrimeField(std::uint64_t p);

    PrimeField(const PrimeField&) = delete;
    PrimeField& operator=(const PrimeField&) = delete;

    std::uint64_t p() const noexcept { return p_; }

    /// Reduce any signed integer into [0, p).
    std::uint64_t reduce(std::int64_t z) const noexcept {
        std::int64_t r = z % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept {
        std::uint64_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }

    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const noexcept {
        return x >= y ? x - y : x + p_ - y;
    }

    std::uint64_t neg(std::uint64_t x) const noexcept { return x == 0 ? 0 : p_ - x; }

    // products reduced through a 128-bit intermediate
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(x) * y % p_);
    }

    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept;

    // multiplicative inverse; throws std::domain_error on x == 0 (mod p)
    std::uint64_t inv(std::uint64_t x) const;

    /// Quadratic character of z: 0 if p | z, +1 for nonzero squares, -1 otherwise.
    int legendre(std::int64_t z) const noexcept {
        return qr_[reduce(z)];
    }

    /// Character table indexed by residue; qr_table()[0] == 0.
    const std::vector<std::int8_t>& qr_table() const noexcept { return qr_; }

    /// Least primitive root of p, computed on first use and cached.
    std::uint64_t generator() const;

private:
    std::uint64_t p_;
    std::vector<std::int8_t> qr_;
    mutable std::atomic<std::uint64_t> generator_{0};
};

/// Least primitive root (alias for PrimeField::generator).
std::uint64_t primitive_root(const PrimeField& F);

// Legendre symbol computed by factoring z mod p and applying quadratic
// reciprocity recursively.  Shares no code with the character table; kept
// as an independent cross-check route.
int legendre_via_reciprocity(const PrimeField& F, std::int64_t z);

/// True iff x -> x^3 permutes F_p, i.e. p = 2 (mod 3).
bool cube_map_bijective(const PrimeField& F);

// Sum of (d/p) over all d in F_p outside the given set of residues.
// Always equals the negated sum over the set itself.
std::int64_t sum_legendre_excluding(const PrimeField& F,
                                    std::span<const std::uint64_t> excluded);

}  // namespace ecmom
