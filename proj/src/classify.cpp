#include "brieskorn/classify.hpp"

#include <algorithm>
#include <sstream>

namespace brieskorn {

SphereGraphResult sphere_graph_test(const ExponentList& a) {
    if (a.n() < 3)
        throw validation_error("sphere_graph_test requires n >= 3 (at least 4 exponents)");
    size_t m = a.size();
    std::vector<int> comp(m, -1);
    std::vector<size_t> isolated;

    for (size_t i = 0; i < m; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<size_t> stack{i};
        comp[i] = static_cast<int>(i);
        std::vector<size_t> members;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (size_t w = 0; w < m; ++w)
                if (comp[w] < 0 && gcd_ll(a[v], a[w]) > 1) {
                    comp[w] = static_cast<int>(i);
                    stack.push_back(w);
                }
        }
        if (members.size() == 1) isolated.push_back(i);
    }

    SphereGraphResult res;
    if (isolated.size() >= 2) {
        res.sphere = true;
        res.reason = "two-isolated-vertices";
        return res;
    }
    if (isolated.size() == 1) {
        // Look for a component of odd size >= 3 with all pairwise gcds equal to 2.
        std::vector<std::vector<size_t>> groups(m);
        for (size_t i = 0; i < m; ++i) groups[static_cast<size_t>(comp[i])].push_back(i);
        for (const auto& g : groups) {
            if (g.size() < 3 || g.size() % 2 == 0) continue;
            bool all2 = true;
            for (size_t x = 0; x < g.size() && all2; ++x)
                for (size_t y = x + 1; y < g.size() && all2; ++y)
                    if (gcd_ll(a[g[x]], a[g[y]]) != 2) all2 = false;
            if (all2) {
                res.sphere = true;
                res.reason = "odd-gcd2-component";
                return res;
            }
        }
    }
    res.reason = "none";
    return res;
}

Int bp_order(int k) {
    if (k < 2) throw validation_error("bp_order requires k >= 2");
    Int p2 = Int(1) << (2 * k - 2);
    Int mers = (Int(1) << (2 * k - 1)) - 1;
    Rat frac = Rat(4) * bernoulli_abs(k) / Rat(k);
    return p2 * mers * num(frac);
}

SphereVerdict classify_sphere(const ExponentList& a) {
    SphereVerdict v;
    if (a.has_unit()) {
        v.homeomorphic_sphere = true;
        v.reason = "unit-exponent";
        v.smooth = SmoothClass::Standard;
        return v;
    }
    long long n = a.n();
    SphereGraphResult g = sphere_graph_test(a);
    v.homeomorphic_sphere = g.sphere;
    v.reason = g.reason;
    if (!g.sphere) return v;

    if (n == 1 || n == 3 || n == 7) {
        v.smooth = SmoothClass::Standard;
        return v;
    }
    if (n % 2 == 1) {
        // dim 4k+1: determinant dichotomy
        DetMod8 d = det_mod8(a);
        v.det_abs = d.det_abs;
        if (!d.odd)
            throw consistency_error("classify_sphere: even determinant on a homotopy sphere " +
                                    a.str());
        v.det_residue = d.residue;
        if (d.residue == 1 || d.residue == 7)
            v.smooth = SmoothClass::Standard;
        else
            v.smooth = SmoothClass::Kervaire;
        return v;
    }
    // dim 4k-1: bP class from the signature of the filling
    long long tau = signature(a);
    v.sig = tau;
    if (tau % 8 != 0)
        throw consistency_error("classify_sphere: signature not divisible by 8 on " + a.str());
    Int order = bp_order(static_cast<int>(n / 2));
    Int cls = Int(tau < 0 ? -tau : tau) / 8 % order;
    v.bp_group_order = order;
    v.bp_class = cls;
    v.bp_sign = tau > 0 ? 1 : (tau < 0 ? -1 : 0);
    v.smooth = cls == 0 ? SmoothClass::Standard : SmoothClass::BpClass;
    return v;
}

std::string MasseyGroup::str() const {
    switch (shape) {
        case Shape::ZPlusZ2: return "Z + Z/2";
        case Shape::Z: return "Z";
        case Shape::Finite:
        case Shape::FiniteHalf:
            return order == 1 ? "0" : "Z/" + order.str();
    }
    return "?";
}

MasseyGroup massey_group(long long n) {
    if (n < 2) throw validation_error("massey_group requires n >= 2");
    MasseyGroup g{MasseyGroup::Shape::Z, 0};
    auto factorial = [](long long m) {
        Int f = 1;
        for (long long i = 2; i <= m; ++i) f *= i;
        return f;
    };
    switch (n % 4) {
        case 0:
            g.shape = MasseyGroup::Shape::ZPlusZ2;
            g.order = 2;
            break;
        case 1:
            g.shape = MasseyGroup::Shape::Finite;
            g.order = factorial(n - 1);
            break;
        case 2:
            g.shape = MasseyGroup::Shape::Z;
            g.order = 0;
            break;
        case 3:
            g.shape = MasseyGroup::Shape::FiniteHalf;
            g.order = factorial(n - 1) / 2;
            break;
    }
    return g;
}

AlmostContactClass almost_contact_class(const ExponentList& a) {
    long long n = a.n();
    if (n < 2) throw validation_error("almost_contact_class requires n >= 2");
    AlmostContactClass out;
    out.group = massey_group(n);

    bool certified_standard = false;
    if (a.has_unit()) {
        certified_standard = true;
    } else if (n >= 3) {
        SphereVerdict v = classify_sphere(a);
        certified_standard = v.homeomorphic_sphere && v.smooth == SmoothClass::Standard;
    }
    out.scope_warning = !certified_standard;

    Rat half_mu = Rat(milnor_number(a)) / 2;
    Rat value;
    if (n % 2 == 0) {
        Int f = 1;
        for (long long i = 2; i <= n; ++i) f *= i;
        Rat coeff = Rat(f) / (Rat(4) * Rat(Int(1) << n) * Rat((Int(1) << (n - 1)) - 1) *
                              bernoulli_abs(static_cast<int>(n / 2)));
        long long sig = signature(a);
        out.sig = sig;
        Rat sig_term = coeff * Rat(sig);
        value = (n % 4 == 0) ? Rat(sig_term - half_mu) : Rat(-sig_term - half_mu);
    } else {
        value = half_mu;
    }
    if (!is_integer(value))
        throw consistency_error(
            "almost_contact_class: the formula evaluates to the non-integer " +
            rat_str(value) + " on " + a.str() +
            "; it only takes integer values on standard spheres");
    Int ival = num(value);

    if (out.group.shape == MasseyGroup::Shape::Finite ||
        out.group.shape == MasseyGroup::Shape::FiniteHalf) {
        Int m = out.group.order;
        out.value = ((ival % m) + m) % m;
    } else {
        out.value = ival;
        if (out.group.shape == MasseyGroup::Shape::ZPlusZ2) out.second = 0;
    }
    return out;
}

std::vector<std::string> recognize(const ExponentList& a) {
    std::vector<std::string> tags;
    size_t m = a.size();
    long long n = a.n();
    std::ostringstream os;

    if (a.has_unit()) {
        os.str("");
        os << "standard sphere S^" << (2 * n - 1);
        tags.push_back(os.str());
    }
    if (m == 2) {
        long long g = gcd_ll(a[0], a[1]);
        os.str("");
        if (g == 1)
            os << "torus knot T(" << a[0] << "," << a[1] << ")";
        else
            os << "torus link T(" << a[0] << "," << a[1] << ") with " << g << " components";
        tags.push_back(os.str());
        return tags;
    }

    bool all2 = std::all_of(a.values().begin(), a.values().end(),
                            [](long long v) { return v == 2; });
    if (all2) {
        os.str("");
        os << "unit cotangent bundle ST*S^" << n;
        tags.push_back(os.str());
    }

    std::vector<long long> sorted = a.sorted_desc();
    if (m == 3 && sorted[1] == 2 && sorted[2] == 2 && sorted[0] >= 2) {
        os.str("");
        os << "lens space L(" << sorted[0] << "," << sorted[0] - 1 << ")";
        tags.push_back(os.str());
    }
    if (m % 2 == 0 && sorted[0] == 3 &&
        std::count(sorted.begin(), sorted.end(), 2) == static_cast<long long>(m) - 1) {
        os.str("");
        os << "Kervaire sphere in dimension " << (2 * n - 1);
        tags.push_back(os.str());
    }
    // (2, ..., 2, N): open book with page T*S^{n-1} and an N-fold Dehn twist.
    long long twists = 0;
    size_t non2 = 0;
    for (long long v : a.values())
        if (v != 2) {
            ++non2;
            twists = v;
        }
    if (m >= 3 && (non2 == 1 || all2)) {
        if (all2) twists = 2;
        os.str("");
        os << "open book OB(T*S^" << (n - 1) << ", tau^" << twists << ")";
        tags.push_back(os.str());
    }
    return tags;
}

}  // namespace brieskorn
