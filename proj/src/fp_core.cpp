#include "ecmom/fp_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ecmom {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
        if (!composite[n]) out.push_back(n);
    }
    return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("PrimeField: p must be a prime >= 5, got " +
                                    std::to_string(p));
    // mark squares directly; O(p) instead of p Euler-criterion exponentiations
    qr_.assign(p, -1);
    qr_[0] = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
        qr_[mul(x, x)] = 1;
    }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const noexcept {
    std::uint64_t r = 1;
    base %= p_;
    while (e > 0) {
        if (e & 1u) r = mul(r, base);
        base = mul(base, base);
        e >>= 1u;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t x) const {
    x %= p_;
    if (x == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    return pow(x, p_ - 2);
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

std::uint64_t PrimeField::generator() const {
    std::uint64_t g = generator_.load(std::memory_order_acquire);
    if (g != 0) return g;
    // g has order p-1 iff g^((p-1)/q) != 1 for every prime q | p-1.
    // The value is deterministic, so a racing second computation is benign.
    const auto factors = prime_factors(p_ - 1);
    for (g = 2; g < p_; ++g) {
        bool ok = true;
        for (std::uint64_t q : factors) {
            if (pow(g, (p_ - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    generator_.store(g, std::memory_order_release);
    return g;
}

std::uint64_t primitive_root(const PrimeField& F) { return F.generator(); }

namespace {

// (2/q) for odd prime q
int legendre_two(std::uint64_t q) {
    std::uint64_t m = q % 8;
    return (m == 1 || m == 7) ? 1 : -1;
}

// (a/q) for odd prime q and 0 <= a < q, by reciprocity
int legendre_rec(std::uint64_t a, std::uint64_t q) {
    if (a == 0) return 0;
    int sign = 1;
    while ((a & 1u) == 0) {
        a >>= 1u;
        sign *= legendre_two(q);
    }
    if (a == 1) return sign;
    // a is odd here; split off its smallest prime factor repeatedly
    for (std::uint64_t d = 3; d * d <= a; d += 2) {
        while (a % d == 0) {
            a /= d;
            // (d/q)(q/d) = (-1)^(((d-1)/2)((q-1)/2))
            int flip = ((d % 4 == 3) && (q % 4 == 3)) ? -1 : 1;
            sign *= flip * legendre_rec(q % d, d);
        }
    }
    if (a > 1) {
        int flip = ((a % 4 == 3) && (q % 4 == 3)) ? -1 : 1;
        sign *= flip * legendre_rec(q % a, a);
    }
    return sign;
}

}  // namespace

int legendre_via_reciprocity(const PrimeField& F, std::int64_t z) {
    return legendre_rec(F.reduce(z), F.p());
}

bool cube_map_bijective(const PrimeField& F) { return F.p() % 3 == 2; }

std::int64_t sum_legendre_excluding(const PrimeField& F,
                                    std::span<const std::uint64_t> excluded) {
    std::vector<bool> in_set(F.p(), false);
    for (std::uint64_t h : excluded) in_set[h % F.p()] = true;
    std::int64_t s = 0;
    const auto& qr = F.qr_table();
    for (std::uint64_t d = 0; d < F.p(); ++d) {
        if (!in_set[d]) s += qr[d];
    }
    return s;
}

}  // namespace ecmom
