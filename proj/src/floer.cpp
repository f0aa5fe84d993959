#include "brieskorn/floer.hpp"

#include <algorithm>

namespace brieskorn {

long long maslov_principal(const ExponentList& a) {
    long long L = a.lcm();
    long long acc = 0;
    for (long long v : a.values()) acc += L / v;
    return 2 * (acc - L);
}

long long maslov_cover(const ExponentList& a, long long t) {
    if (t < 1) throw validation_error("maslov_cover: time must be >= 1");
    long long acc = 0, outside = 0;
    for (long long v : a.values()) {
        if (t % v == 0)
            acc += 2 * (t / v);
        else {
            acc += 2 * (t / v);  // floor division, t, v > 0
            ++outside;
        }
    }
    return acc + outside - 2 * t;
}

IndexSign index_positivity(const ExponentList& a) {
    Rat s = -1;
    for (long long v : a.values()) s += Rat(1, v);
    if (s > 0) return IndexSign::Positive;
    if (s < 0) return IndexSign::Negative;
    return IndexSign::Zero;
}

std::optional<OrbitStratum> orbit_stratum(const ExponentList& a, long long t) {
    FixedLocus f = fixed_locus(a, t);
    if (!f.stratum) return std::nullopt;
    long long k = static_cast<long long>(f.positions.count());
    long long maslov = maslov_cover(a, t);
    return OrbitStratum{t, f.positions, *f.stratum, 2 * k - 3, maslov, maslov - (k - 2)};
}

namespace {

// Homology ranks of the stratum in the flavor of the theory, as degree -> rank.
GradedRanks stratum_ranks(const ExponentList& sub, SsTheory theory) {
    return theory == SsTheory::ShPlusEq ? equivariant_homology(sub)
                                        : rational_homology_ranks(sub);
}

GradedRanks column_for(const ExponentList& a, long long p, SsTheory theory) {
    GradedRanks col;
    auto s = orbit_stratum(a, p);
    if (!s) return col;
    for (const auto& [d, r] : stratum_ranks(s->stratum, theory))
        add_rank(col, s->shift + d, r);
    return col;
}

void clip_to_window(GradedRanks& col, long long M) {
    for (auto it = col.begin(); it != col.end();)
        it = (it->first < -M || it->first > M) ? col.erase(it) : std::next(it);
}

}  // namespace

GradedRanks E1Page::totals() const {
    GradedRanks t;
    for (const auto& [p, col] : columns)
        for (const auto& [d, r] : col) add_rank(t, d, r);
    return t;
}

E1Page e1_page(const ExponentList& a, SsTheory theory, long long window,
               std::optional<long long> cutoff) {
    if (window < 0) throw validation_error("e1_page: window must be >= 0");
    E1Page page;
    page.theory = theory;
    page.window = window;
    page.mu_principal = maslov_principal(a);

    if (theory == SsTheory::Sh) {
        GradedRanks col0;
        add_rank(col0, 0, milnor_number(a));
        add_rank(col0, a.n(), 1);
        clip_to_window(col0, window);
        if (!col0.empty()) page.columns[0] = col0;
    }

    long long L = a.lcm();
    if (page.mu_principal == 0) {
        if (!cutoff)
            throw validation_error(
                "e1_page: zero principal Maslov index gives an unbounded page; "
                "an explicit column cutoff is required");
        if (*cutoff < 1) throw validation_error("e1_page: cutoff must be >= 1");
        page.truncated = true;
        page.column_cutoff = *cutoff;
        for (long long p = 1; p <= *cutoff; ++p) {
            GradedRanks col = column_for(a, p, theory);
            clip_to_window(col, window);
            if (!col.empty()) page.columns[p] = col;
        }
        return page;
    }

    bool positive = page.mu_principal > 0;
    long long run = 0;
    long long p = 0;
    while (run < L) {
        ++p;
        if (cutoff && p > *cutoff) {
            page.truncated = true;
            break;
        }
        GradedRanks col = column_for(a, p, theory);
        bool outside = col.empty();
        if (!outside) {
            long long lo = col.begin()->first;
            long long hi = col.rbegin()->first;
            outside = positive ? (lo > window) : (hi < -window);
        }
        run = outside ? run + 1 : 0;
        clip_to_window(col, window);
        if (!col.empty()) page.columns[p] = col;
    }
    page.column_cutoff = p;
    return page;
}

Degeneration degeneration_check(const E1Page& page) {
    int parity = -1;
    for (const auto& [p, col] : page.columns) {
        (void)p;
        for (const auto& [d, r] : col) {
            (void)r;
            int par = static_cast<int>(((d % 2) + 2) % 2);
            if (parity < 0)
                parity = par;
            else if (parity != par)
                return Degeneration::Undetermined;
        }
    }
    return Degeneration::Degenerate;
}

ShBetti sh_betti(const ExponentList& a, SsTheory theory, long long window) {
    ShBetti out;
    if (maslov_principal(a) != 0) {
        E1Page page = e1_page(a, theory, window);
        if (degeneration_check(page) != Degeneration::Degenerate)
            throw validation_error(
                "sh_betti: first page does not degenerate by parity for " + a.str());
        out.betti = page.totals();
        return out;
    }
    long long L = a.lcm();
    std::vector<GradedRanks> totals;
    Degeneration deg = Degeneration::Degenerate;
    for (int m = 1; m <= 3; ++m) {
        E1Page page = e1_page(a, theory, window, m * L);
        if (degeneration_check(page) != Degeneration::Degenerate)
            deg = Degeneration::Undetermined;
        totals.push_back(page.totals());
    }
    if (deg != Degeneration::Degenerate)
        throw validation_error(
            "sh_betti: first page does not degenerate by parity for " + a.str());
    for (const auto& [d, r1] : totals[0]) {
        auto it2 = totals[1].find(d);
        auto it3 = totals[2].find(d);
        if (it2 != totals[1].end() && it3 != totals[2].end() && r1 < it2->second &&
            it2->second < it3->second) {
            out.unbounded = true;
            break;
        }
    }
    out.betti = totals.back();
    return out;
}

OrderabilityCertificate orderability_certificate(const ExponentList& a) {
    OrderabilityCertificate c;
    if (a.has_unit()) {
        c.orderable = false;
        c.reason = "standard contact sphere (unit exponent); known non-orderable";
        return c;
    }
    c.orderable = true;
    c.reason = "all exponents >= 2: positive Milnor number certifies orderability";
    return c;
}

}  // namespace brieskorn
