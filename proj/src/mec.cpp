#include "brieskorn/mec.hpp"

#include <algorithm>
#include <map>

namespace brieskorn {

namespace {

Rat alternating_sum(const GradedRanks& g) {
    Rat acc = 0;
    for (const auto& [d, r] : g)
        acc += (d % 2 == 0) ? Rat(r) : -Rat(r);
    return acc;
}

// c with c * a == b (mod m), for gcd(a, m) = 1.
long long solve_mod(long long a, long long b, long long m) {
    auto norm = [m](long long v) { return ((v % m) + m) % m; };
    long long r0 = m, r1 = norm(a), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw consistency_error("solve_mod: arguments not coprime");
    return norm(s0 % m * (norm(b) % m) % m);
}

}  // namespace

long long phi_frequency(long long t_i, const std::vector<long long>& larger, long long t_k) {
    if (t_i < 1 || t_k < 1) throw validation_error("phi_frequency: periods must be >= 1");
    if (t_i == t_k) return 1;
    long long count = 0;
    for (long long b = t_i; b < t_k; b += t_i) {
        bool hit = false;
        for (long long t : larger)
            if (b % t == 0) {
                hit = true;
                break;
            }
        if (!hit) ++count;
    }
    return count;
}

StratumTable stratum_table(const ExponentList& a) {
    StratumTable table;
    long long L = a.lcm();
    table.principal_period = L;
    table.mu_principal = maslov_principal(a);

    std::vector<uint64_t> seen;
    for (long long t : divisors(L)) {
        auto s = orbit_stratum(a, t);
        if (!s) continue;
        if (std::find(seen.begin(), seen.end(), s->positions.mask()) != seen.end()) continue;
        seen.push_back(s->positions.mask());
        if (s->stratum.lcm() != t)
            throw consistency_error("stratum_table: period mismatch at t=" + std::to_string(t));
        StratumRow row{s->stratum, t, 0, 0, 0};
        row.chi_eq = to_int(alternating_sum(equivariant_homology(s->stratum)),
                            "stratum_table: chi");
        row.sign = (s->shift % 2 == 0) ? 1 : -1;
        table.rows.push_back(std::move(row));
    }
    // Periods arrive in increasing order; phi counts against strictly larger ones.
    for (size_t i = 0; i < table.rows.size(); ++i) {
        std::vector<long long> larger;
        for (size_t j = i + 1; j < table.rows.size(); ++j)
            larger.push_back(table.rows[j].period);
        table.rows[i].phi = phi_frequency(table.rows[i].period, larger, L);
    }
    return table;
}

Rat mec_general(const ExponentList& a) {
    StratumTable t = stratum_table(a);
    if (t.mu_principal == 0)
        throw validation_error("mean Euler characteristic undefined: principal Maslov index is zero for " +
                               a.str());
    Rat acc = 0;
    for (const auto& row : t.rows)
        acc += Rat(row.sign) * Rat(row.phi) * Rat(row.chi_eq);
    long long p = t.mu_principal < 0 ? -t.mu_principal : t.mu_principal;
    return acc / p;
}

Rat mec_coprime(const ExponentList& a) {
    if (!a.pairwise_coprime())
        throw validation_error("mec_coprime requires pairwise coprime exponents, got " + a.str());
    long long n = a.n();
    // Elementary symmetric functions of the a_i - 1.
    std::vector<Int> e(a.size() + 1, 0);
    e[0] = 1;
    for (long long v : a.values())
        for (size_t j = a.size(); j >= 1; --j) e[j] += e[j - 1] * Int(v - 1);
    Int numer = 0;
    for (long long j = 0; j <= n - 1; ++j) numer += Int(n - j) * e[static_cast<size_t>(j)];

    Int prod = 1;
    for (long long v : a.values()) prod *= v;
    Int denom_core = -prod;
    for (size_t i = 0; i < a.size(); ++i) denom_core += prod / a[i];
    if (denom_core == 0)
        throw validation_error("mean Euler characteristic undefined: principal Maslov index is zero for " +
                               a.str());
    if (denom_core < 0) denom_core = -denom_core;
    Rat value = Rat(numer) / Rat(2 * denom_core);
    return (n % 2 == 0) ? -value : value;
}

Rat mec_sum(const std::vector<MecSummand>& parts, long long n) {
    if (parts.empty()) throw validation_error("mec_sum: empty sum");
    std::map<ExponentList, Rat> memo;
    Rat acc = 0;
    for (const auto& part : parts) {
        if (std::holds_alternative<Rat>(part)) {
            acc += std::get<Rat>(part);
            continue;
        }
        const ExponentList& a = std::get<ExponentList>(part);
        if (a.n() != n)
            throw validation_error("mec_sum: summand " + a.str() + " has dimension " +
                                   std::to_string(2 * a.n() - 1) + ", expected " +
                                   std::to_string(2 * n - 1));
        auto it = memo.find(a);
        if (it == memo.end()) it = memo.emplace(a, mec_general(a)).first;
        acc += it->second;
    }
    Rat half(1, 2);
    Rat correction = Rat(static_cast<long long>(parts.size()) - 1) * half;
    return (n % 2 == 0) ? Rat(acc + correction) : Rat(acc - correction);
}

long long MecRecipe::total_summands() const {
    long long acc = 0;
    for (const auto& [a, c] : parts) {
        (void)a;
        acc += c;
    }
    return acc;
}

std::vector<MecSummand> MecRecipe::expanded() const {
    if (total_summands() > 100000)
        throw validation_error("recipe too large to expand");
    std::vector<MecSummand> out;
    for (const auto& [a, c] : parts)
        for (long long i = 0; i < c; ++i) out.push_back(a);
    return out;
}

MecRecipe realize_mec(const Rat& x) {
    // Work with z = 2x - 1; every summand s contributes 2 mec(s) - 1 to z.
    // Generators, with their contributions:
    //   A = (2,2,3,5):                    1
    //   S = (1,2,2,2):                    0
    //   U(f) = (3f-2,2,2,2), f odd p^e:   1 - 1/f
    //   B(l) = (2,2,2^l-3,2^l+3), l >= 3: 2^{l-1} - 1 - 1/2^{l-2}
    //   307 x G, G = (3,4,7,17):          -38
    Rat z = 2 * x - 1;
    if (den(z) > 1000000000 || num(z) > Int("1000000000000") ||
        num(z) < Int("-1000000000000"))
        throw validation_error("realize_mec: target out of supported range");

    MecRecipe recipe;
    Rat rem = z;
    auto add = [&](std::vector<long long> exps, long long count, const Rat& contribution) {
        if (count == 0) return;
        recipe.parts.emplace_back(ExponentList(std::move(exps)), count);
        rem -= Rat(count) * contribution;
    };

    // Clear odd primes from the denominator with Ustilovsky-type pieces.
    for (auto [p, e] : factorize_int(Int(std::max<Int>(den(rem), Int(2))))) {
        if (den(rem) == 1) break;
        if (p == 2) continue;
        long long pl = to_ll(p, "realize_mec: prime");
        long long f = 1;
        for (int i = 0; i < e; ++i) f *= pl;
        // rem = u / (f v): pick c in [0, f) with u - c (f-1) v divisible by f.
        long long u = to_ll(num(rem) % f, "realize_mec");
        long long v = to_ll(den(rem) / f % f, "realize_mec");
        long long c = solve_mod((f - 1) % f * (v % f) % f, u, f);
        add({3 * f - 2, 2, 2, 2}, c, Rat(f - 1, f));
    }
    // Clear the 2-power part of the denominator.
    if (den(rem) > 1) {
        Int d = den(rem);
        int alpha = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++alpha;
        }
        if (d != 1)
            throw consistency_error("realize_mec: denominator not cleared of odd primes");
        long long f = 1LL << alpha;
        long long l = alpha + 2;
        long long pbig = (1LL << l) - 3, qbig = (1LL << l) + 3;
        Rat contribution = Rat((Int(1) << (alpha + 1)) - 1) - Rat(1, f);
        long long w = to_ll(num(contribution * f) % f, "realize_mec");
        long long u = to_ll(((num(rem) % f) + f) % f, "realize_mec");
        long long c = solve_mod(w, u, f);
        add({2, 2, pbig, qbig}, c, contribution);
    }
    if (den(rem) != 1) throw consistency_error("realize_mec: denominator not cleared");

    // Integer remainder: pad with A, going through blocks of G when negative.
    Int m = num(rem);
    if (m < 0) {
        Int blocks = (-m + 37) / 38;
        add({3, 4, 7, 17}, 307 * to_ll(blocks, "realize_mec: blocks"), Rat(-38, 307));
        m = num(rem);
    }
    add({2, 2, 3, 5}, to_ll(m, "realize_mec: padding"), Rat(1));
    if (rem != 0) throw consistency_error("realize_mec: nonzero remainder");
    if (recipe.parts.empty()) recipe.parts.emplace_back(ExponentList({1, 2, 2, 2}), 1);

    // Verify the recipe against the engine before returning it.
    Rat total = 0;
    long long count = 0;
    for (const auto& [piece, mult] : recipe.parts) {
        total += Rat(mult) * mec_general(piece);
        count += mult;
    }
    total -= Rat(count - 1, 2);
    if (total != x)
        throw consistency_error("realize_mec: recipe verification failed for target " + rat_str(x));
    return recipe;
}

MecInvariance mec_invariance_flag(const ExponentList& a) {
    if (maslov_principal(a) == 0) return MecInvariance::Undefined;
    if (a.n() < 3) return MecInvariance::FillingLevelOnly;
    return MecInvariance::ContactInvariant;
}

Rat mec_window_estimate(const ExponentList& a, long long n_window) {
    if (n_window < 1) throw validation_error("mec_window_estimate: window must be >= 1");
    ShBetti sb = sh_betti(a, SsTheory::ShPlusEq, n_window);
    Rat acc = alternating_sum(sb.betti);
    return acc / n_window;
}

WindowCertificate mec_window_certificate(const ExponentList& a) {
    Rat chi = mec_general(a);
    long long L = a.lcm();
    long long P = maslov_principal(a);
    if (P < 0) P = -P;

    // Degree span of the first L columns, to know where the page turns periodic.
    E1Page head = e1_page(a, SsTheory::ShPlusEq, 1000000000, L);
    long long m0 = 0, mmin = 0;
    for (const auto& [p, col] : head.columns) {
        (void)p;
        if (!col.empty()) {
            m0 = std::max(m0, col.rbegin()->first);
            mmin = std::min(mmin, col.begin()->first);
        }
    }
    long long n1 = std::max({L, m0 + 1, -mmin + 1});
    long long top = std::max(10 * L, n1 + P) + 2;

    ShBetti sb = sh_betti(a, SsTheory::ShPlusEq, top);
    // E(N) = sum_{|i| <= N} (-1)^i sb_i - N chi, via running prefix sums.
    auto e_of = [&](long long N) {
        Rat acc = 0;
        for (const auto& [d, r] : sb.betti)
            if (d >= -N && d <= N) acc += (d % 2 == 0) ? Rat(r) : -Rat(r);
        return acc - Rat(N) * chi;
    };

    WindowCertificate cert;
    Rat c = 0;
    for (long long N = n1; N < n1 + P; ++N) {
        Rat e = e_of(N);
        if (e < 0) e = -e;
        c = std::max(c, e);
    }
    cert.constant = c;
    cert.ok = true;
    for (long long N : {L, 5 * L, 10 * L}) {
        Rat e = e_of(N);
        if (e < 0) e = -e;
        cert.checkpoints.emplace_back(N, e / N);
        if (e > c) cert.ok = false;
    }
    return cert;
}

ShNonvanishing sh_nonvanishing_by_mec(const ExponentList& a) {
    ShNonvanishing out;
    out.mec = mec_general(a);
    long long n = a.n();
    Rat chi_w = Rat(1) + ((n % 2 == 0) ? Rat(milnor_number(a)) : -Rat(milnor_number(a)));
    out.half_euler = ((n % 2 == 1) ? chi_w : -chi_w) / 2;
    out.nonvanishing = out.mec != out.half_euler;
    return out;
}

}  // namespace brieskorn
