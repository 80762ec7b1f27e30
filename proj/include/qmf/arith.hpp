#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Fully extended Kronecker symbol (a/n): n may be zero, negative or even.
// (a/n) = 0 iff gcd(a, n) > 1.
int kronecker(std::int64_t a, std::int64_t n);

// Real quadratic character n -> (D/n). D = 1 is the trivial character.
// A modulus-with-even-conductor character like "trivial mod 16" is encoded
// by keeping the even square in D (e.g. D = 16 vanishes on even n).
class QuadChar {
public:
    QuadChar() = default;
    explicit QuadChar(std::int64_t discriminant) : d_(discriminant) {}
    static QuadChar trivial() { return QuadChar(1); }

    std::int64_t discriminant() const { return d_; }
    int operator()(std::int64_t n) const { return kronecker(d_, n); }

private:
    std::int64_t d_ = 1;
};

// Deterministic Miller-Rabin below 2^64 (trial division first).
bool is_prime(std::uint64_t n);

// Divisors of n in increasing order. n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// Prime factorization by trial division, (p, exponent) pairs. n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// sigma_k(n) = sum of d^k over d | n. n >= 1.
Int sigma_k(std::int64_t n, unsigned k);
inline Int sigma1(std::int64_t n) { return sigma_k(n, 1); }

// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt64(std::int64_t n);

// r_5(n): representations of n as an ordered sum of 5 signed squares.
// Pure lattice enumeration, no generating functions; this is the test
// oracle for the phi^5 coefficient identities.
std::int64_t r5(std::int64_t n);

// All of r_5(0..n_max) from one enumeration pass.
std::vector<std::int64_t> r5_table(std::int64_t n_max);

// r_{s,t}(n): ordered signed representations of n using exactly s even
// squares and t odd squares, slots interleaved arbitrarily. Enumeration
// oracle for the phi_{s,t} relation.
std::int64_t r_st(int s, int t, std::int64_t n);

// Ordered 4-tuples of triangular numbers summing to n; equals sigma(2n+1).
std::int64_t triangle_reps4(std::int64_t n);

// Both sides of sum_{i=1..n} sigma(2i-1)sigma(2n-2i+1) = sum_{d|n, n/d odd} d^3.
// Caller asserts equality.
std::pair<Int, Int> divisor_identity_check(std::int64_t n);

// 16(Q^3 - Q + 1) for an odd prime Q; the closed form of phi_{1,4}(Q^2).
Int phi14_closed_form(std::int64_t q);

}  // namespace qmf
