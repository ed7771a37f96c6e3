#include "concordia/twobridge.hpp"

#include <numeric>

#include "concordia/tangle.hpp"

namespace concordia {

TwoBridge::TwoBridge(long long p_, long long q_) : p(p_), q(q_) {
    if (p <= 0 || q <= 0 || q >= p) throw precondition_error("two-bridge: need 0 < q < p");
    if (std::gcd(p, q) != 1) throw precondition_error("two-bridge: gcd(p, q) must be 1");
}

std::vector<long long> cont_frac(long long p, long long q) {
    TwoBridge check(p, q);
    std::vector<long long> cf;
    long long num = p, den = q;
    while (den != 0) {
        cf.push_back(num / den);
        long long r = num % den;
        num = den;
        den = r;
    }
    return cf;
}

LinkDiagram twobridge_diagram(long long p, long long q) { return twobridge_diagram(TwoBridge(p, q)); }

LinkDiagram twobridge_diagram(const TwoBridge& b) {
    Tangle t = rational_tangle(b.p, b.q);
    LinkDiagram d = numerator_closure(t);
    if (d.num_components() != b.component_count())
        throw std::logic_error("twobridge_diagram: component count mismatch");
    return d;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {
long long pow_mod(long long base, long long exp, long long mod) {
    unsigned long long r = 1, b = static_cast<unsigned long long>(((base % mod) + mod) % mod);
    while (exp > 0) {
        if (exp & 1) r = r * b % static_cast<unsigned long long>(mod);
        b = b * b % static_cast<unsigned long long>(mod);
        exp >>= 1;
    }
    return static_cast<long long>(r);
}
}  // namespace

long long tonelli_shanks(long long a, long long p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (pow_mod(a, (p - 1) / 2, p) != 1)
        throw precondition_error("tonelli_shanks: not a quadratic residue");
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    // write p - 1 = Q * 2^S with Q odd
    long long Q = p - 1, S = 0;
    while (Q % 2 == 0) { Q /= 2; ++S; }
    // find a quadratic nonresidue z
    long long z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    long long M = S;
    long long c = pow_mod(z, Q, p);
    long long t = pow_mod(a, Q, p);
    long long r = pow_mod(a, (Q + 1) / 2, p);
    while (t != 1) {
        long long i = 0, tt = t;
        while (tt != 1) { tt = static_cast<long long>(static_cast<unsigned long long>(tt) * static_cast<unsigned long long>(tt) % static_cast<unsigned long long>(p)); ++i; }
        long long bexp = M - i - 1;
        long long bb = c;
        for (long long k = 0; k < bexp; ++k) bb = static_cast<long long>(static_cast<unsigned long long>(bb) * static_cast<unsigned long long>(bb) % static_cast<unsigned long long>(p));
        M = i;
        c = static_cast<long long>(static_cast<unsigned long long>(bb) * static_cast<unsigned long long>(bb) % static_cast<unsigned long long>(p));
        t = static_cast<long long>(static_cast<unsigned long long>(t) * static_cast<unsigned long long>(c) % static_cast<unsigned long long>(p));
        r = static_cast<long long>(static_cast<unsigned long long>(r) * static_cast<unsigned long long>(bb) % static_cast<unsigned long long>(p));
    }
    return r;
}

std::vector<long long> square_class(long long n) {
    if (n < 1) throw precondition_error("square_class: positive integer required");
    if (n > (1LL << 32)) throw precondition_error("square_class: input exceeds the factorization bound");
    std::vector<long long> odd_primes;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        if (e % 2) odd_primes.push_back(d);
    }
    if (n > 1) odd_primes.push_back(n);
    return odd_primes;
}

bool WitnessCertificate::verify() const {
    if (!is_prime(p) || p % 4 != 1) return false;
    if (q <= 0 || q >= p || q % 2 == 0) return false;
    long long qq = q * q + 1;
    if (qq % p != 0) return false;
    if ((qq / p) % p == 0) return false;
    for (long long qi : inputs)
        if ((qi * qi + 1) % p == 0) return false;
    return true;
}

WitnessCertificate torsion_witness(const std::vector<long long>& qs) {
    for (long long qi : qs)
        if (qi <= 0 || qi % 2 == 0)
            throw precondition_error("torsion_witness: inputs must be odd positive integers");
    for (long long p = 5;; p += 4) {
        if (!is_prime(p)) continue;
        bool divides_input = false;
        for (long long qi : qs)
            if ((qi * qi + 1) % p == 0) { divides_input = true; break; }
        if (divides_input) continue;
        // square roots of -1 mod p; exactly one of {x, p-x} is odd
        long long x = tonelli_shanks(p - 1, p);
        long long q = (x % 2 == 1) ? x : p - x;
        long long qq = q * q + 1;
        if ((qq / p) % p == 0) continue;  // p^2 | q^2+1: unusable prime
        WitnessCertificate cert;
        cert.p = p;
        cert.q = q;
        cert.inputs = qs;
        if (!cert.verify()) throw std::logic_error("torsion_witness: certificate failed self-check");
        return cert;
    }
}

}  // namespace concordia
