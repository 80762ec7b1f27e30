#include "qmf/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qmf {

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }

    // (a/2^e) part: (2/a) = +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8).
    int twos = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    if (twos > 0) {
        if ((a & 1) == 0) return 0;
        if (twos & 1) {
            int a8 = static_cast<int>(a % 8);
            if (a8 < 0) a8 += 8;
            if (a8 == 3 || a8 == 5) sign = -sign;
        }
    }

    // Jacobi symbol for odd positive n via quadratic reciprocity.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            int n8 = static_cast<int>(n % 8);
            if (n8 == 3 || n8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if ((a % 4 == 3) && (n % 4 == 3)) sign = -sign;
        a %= n;
    }
    return (n == 1) ? sign : 0;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for the full 64-bit range.
    for (std::uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int sigma_k(std::int64_t n, unsigned k) {
    if (n < 1) throw std::invalid_argument("sigma_k: n must be >= 1");
    Int total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        total += boost::multiprecision::pow(Int(d), k);
        if (d != n / d) total += boost::multiprecision::pow(Int(n / d), k);
    }
    return total;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative input");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

// Multiset permutation count of {a,b,c,d,e} times 2^(number of nonzero entries).
std::int64_t signed_ordered_weight(const std::array<std::int64_t, 5>& v) {
    // v is sorted. 5! / prod(mult!) ordered arrangements, each nonzero entry
    // contributing a sign choice.
    std::int64_t perms = 120;
    int run = 1;
    for (int i = 1; i < 5; ++i) {
        if (v[i] == v[i - 1]) {
            ++run;
            perms /= run;
        } else {
            run = 1;
        }
    }
    int nonzero = 0;
    for (auto x : v)
        if (x != 0) ++nonzero;
    return perms << nonzero;
}

}  // namespace

std::int64_t r5(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("r5: n must be >= 0");
    std::int64_t count = 0;
    for (std::int64_t a = 0; a * a <= n; ++a) {
        for (std::int64_t b = a; a * a + b * b <= n; ++b) {
            for (std::int64_t c = b; a * a + b * b + c * c <= n; ++c) {
                for (std::int64_t d = c; a * a + b * b + c * c + d * d <= n; ++d) {
                    std::int64_t rem = n - a * a - b * b - c * c - d * d;
                    std::int64_t e = isqrt64(rem);
                    if (e * e == rem && e >= d) count += signed_ordered_weight({a, b, c, d, e});
                }
            }
        }
    }
    return count;
}

std::vector<std::int64_t> r5_table(std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("r5_table: n_max must be >= 0");
    std::vector<std::int64_t> table(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t a = 0; a * a <= n_max; ++a) {
        for (std::int64_t b = a; a * a + b * b <= n_max; ++b) {
            for (std::int64_t c = b; a * a + b * b + c * c <= n_max; ++c) {
                for (std::int64_t d = c; a * a + b * b + c * c + d * d <= n_max; ++d) {
                    std::int64_t base = a * a + b * b + c * c + d * d;
                    for (std::int64_t e = d; base + e * e <= n_max; ++e)
                        table[static_cast<std::size_t>(base + e * e)] +=
                            signed_ordered_weight({a, b, c, d, e});
                }
            }
        }
    }
    return table;
}

namespace {

// First-slot recursion over interleaved ordered tuples: the leading entry is
// either one of the remaining even slots or one of the odd ones.
std::int64_t r_st_rec(int s, int t, std::int64_t n) {
    if (s == 0 && t == 0) return n == 0 ? 1 : 0;
    std::int64_t count = 0;
    if (s > 0) {
        for (std::int64_t x = 0; x * x <= n; x += 2) {
            std::int64_t sub = r_st_rec(s - 1, t, n - x * x);
            count += (x == 0) ? sub : 2 * sub;
        }
    }
    if (t > 0) {
        for (std::int64_t x = 1; x * x <= n; x += 2) count += 2 * r_st_rec(s, t - 1, n - x * x);
    }
    return count;
}

}  // namespace

std::int64_t r_st(int s, int t, std::int64_t n) {
    if (s < 0 || t < 0 || n < 0) throw std::invalid_argument("r_st: negative argument");
    return r_st_rec(s, t, n);
}

std::int64_t triangle_reps4(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("triangle_reps4: n must be >= 0");
    auto tri = [](std::int64_t k) { return k * (k + 1) / 2; };
    std::int64_t count = 0;
    for (std::int64_t a = 0; tri(a) <= n; ++a)
        for (std::int64_t b = 0; tri(a) + tri(b) <= n; ++b)
            for (std::int64_t c = 0; tri(a) + tri(b) + tri(c) <= n; ++c)
                for (std::int64_t d = 0; tri(a) + tri(b) + tri(c) + tri(d) <= n; ++d)
                    if (tri(a) + tri(b) + tri(c) + tri(d) == n) ++count;
    return count;
}

std::pair<Int, Int> divisor_identity_check(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisor_identity_check: n must be >= 1");
    Int lhs = 0;
    for (std::int64_t i = 1; i <= n; ++i) lhs += sigma1(2 * i - 1) * sigma1(2 * n - 2 * i + 1);
    Int rhs = 0;
    for (std::int64_t d : divisors(n))
        if (((n / d) & 1) != 0) rhs += Int(d) * d * d;
    return {lhs, rhs};
}

Int phi14_closed_form(std::int64_t q) {
    if (q < 3 || q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("phi14_closed_form: Q must be an odd prime");
    Int qi(q);
    return 16 * (qi * qi * qi - qi + 1);
}

}  // namespace qmf
