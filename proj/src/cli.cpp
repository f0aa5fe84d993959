#include "brieskorn/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "brieskorn/classify.hpp"
#include "brieskorn/fibration.hpp"
#include "brieskorn/floer.hpp"
#include "brieskorn/homology.hpp"
#include "brieskorn/intmatrix.hpp"
#include "brieskorn/mec.hpp"
#include "brieskorn/render.hpp"

namespace brieskorn::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

// All numeric values cross the JSON boundary as decimal strings so that
// arbitrary-precision results survive any consumer.
ojson exps_json(const std::vector<long long>& v) {
    ojson arr = ojson::array();
    for (long long x : v) arr.push_back(std::to_string(x));
    return arr;
}

ojson envelope(const std::string& command, const ExponentList* a) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    if (a) {
        j["exponents"] = exps_json(a->values());
        j["exponents_sorted"] = exps_json(a->sorted_desc());
        j["dimension"] = std::to_string(a->dimension());
    }
    return j;
}

ojson group_json(const AbelianGroup& g) {
    ojson j;
    j["free_rank"] = g.free_rank.str();
    ojson t = ojson::array();
    for (const Int& d : g.torsion) t.push_back(d.str());
    j["torsion"] = t;
    j["pretty"] = g.str();
    return j;
}

ojson ranks_json(const GradedRanks& g) {
    ojson j = ojson::object();
    for (const auto& [deg, r] : g) j[std::to_string(deg)] = r.str();
    return j;
}

void emit(const ojson& j, std::ostream& out) { out << j.dump(2) << "\n"; }

std::string head_line(const ExponentList& a) {
    std::ostringstream os;
    os << "Sigma" << a.str() << "  dim " << a.dimension();
    return os.str();
}

// ---------------------------------------------------------------- homology

void cmd_homology(const ExponentList& a, bool json, std::ostream& out) {
    Int mu = milnor_number(a);
    std::map<long long, AbelianGroup> groups;
    std::optional<AbelianGroup> smith;
    if (a.size() == 3) {
        groups[1] = randell_homology(a);
        if (mu <= 4096) smith = cokernel(pham_matrix(a));
    } else {
        groups = full_homology(a);
    }

    if (json) {
        ojson j = envelope("homology", &a);
        j["mu"] = mu.str();
        if (a.size() >= 4) j["kappa"] = kappa_full(a).str();
        ojson h = ojson::object();
        for (const auto& [deg, g] : groups) h[std::to_string(deg)] = group_json(g);
        j["h"] = h;
        if (a.size() == 3) {
            j["note"] =
                "dimension-3 torsion listed by the same recursion as in higher dimensions";
            if (smith) {
                j["smith_oracle"] = group_json(*smith);
                j["oracle_agrees"] = (*smith == groups.at(1));
            }
        }
        emit(j, out);
        return;
    }

    out << head_line(a) << "  mu = " << mu.str() << "\n";
    for (const auto& [deg, g] : groups)
        out << "H_" << deg << " = " << g.str() << "\n";
    if (a.size() == 3) {
        out << "note: dimension-3 torsion listed by the same recursion as in higher dimensions\n";
        if (smith)
            out << "Smith normal form of the Seifert pairing gives " << smith->str()
                << (*smith == groups.at(1) ? " (agrees)" : " (DISAGREES)") << "\n";
    }
}

// -------------------------------------------------------------- equivariant

void cmd_equivariant(const ExponentList& a, bool json, std::ostream& out) {
    GradedRanks eq = equivariant_homology(a);
    GradedRanks ordinary = rational_homology_ranks(a);

    if (json) {
        ojson j = envelope("equivariant", &a);
        j["kappa"] = kappa_full(a).str();
        j["equivariant_ranks"] = ranks_json(eq);
        j["rational_ranks"] = ranks_json(ordinary);
        emit(j, out);
        return;
    }

    out << head_line(a) << "  kappa = " << kappa_full(a).str() << "\n";
    for (const auto& [deg, r] : eq)
        out << "H^{S1}_" << deg << " = Q^" << r.str() << "\n";
    out << "rational homology: " << graded_str(ordinary) << "\n";
}

// ---------------------------------------------------------------- alexander

void cmd_alexander(const ExponentList& a, bool json, std::ostream& out) {
    Int mu = milnor_number(a);
    ZetaFactors zeta = weil_zeta(a);
    IntPolynomial delta = alexander_polynomial(a);
    long long mult = multiplicity_at_one(delta);
    Int kap = kappa_full(a);
    if (Int(mult) != kap)
        throw consistency_error("alexander: multiplicity of t=1 disagrees with kappa");
    DetMod8 det = det_mod8(a);

    if (json) {
        ojson j = envelope("alexander", &a);
        j["mu"] = mu.str();
        j["period"] = std::to_string(zeta.period);
        ojson zf = ojson::object();
        for (const auto& [d, e] : zeta.exponent) zf[std::to_string(d)] = e.str();
        j["zeta_exponents"] = zf;
        ojson dj;
        dj["degree"] = std::to_string(delta.degree());
        ojson cs = ojson::array();
        for (const Int& c : delta.coeffs()) cs.push_back(c.str());
        dj["coefficients"] = cs;
        dj["pretty"] = delta.str();
        j["delta"] = dj;
        j["kappa"] = kap.str();
        ojson dm;
        dm["abs"] = det.det_abs.str();
        dm["odd"] = det.odd;
        if (det.odd) dm["residue_mod_8"] = std::to_string(det.residue);
        j["delta_at_minus_one"] = dm;
        emit(j, out);
        return;
    }

    out << head_line(a) << "  mu = " << mu.str() << "  period = " << zeta.period << "\n";
    out << "Delta(t) = " << delta.str() << "\n";
    out << "zeta(t) = product of (1 - t^d)^{e_d} with";
    for (const auto& [d, e] : zeta.exponent) out << "  e_" << d << " = " << e.str();
    out << "\n";
    out << "multiplicity of t = 1: " << mult << " (= kappa)\n";
    out << "|Delta(-1)| = " << det.det_abs.str();
    if (det.odd)
        out << "  (odd, residue " << det.residue << " mod 8)\n";
    else
        out << "  (even)\n";
}

// ------------------------------------------------------------------- sphere

void cmd_sphere(const ExponentList& a, bool json, std::ostream& out) {
    SphereVerdict v = classify_sphere(a);

    if (json) {
        ojson j = envelope("sphere", &a);
        j["homeomorphic_sphere"] = v.homeomorphic_sphere;
        j["reason"] = v.reason;
        const char* sc = "unknown";
        switch (v.smooth) {
            case SmoothClass::Standard: sc = "standard"; break;
            case SmoothClass::Kervaire: sc = "kervaire"; break;
            case SmoothClass::BpClass: sc = "bp_class"; break;
            case SmoothClass::Unknown: sc = "unknown"; break;
        }
        j["smooth_class"] = sc;
        if (v.det_abs) j["det_abs"] = v.det_abs->str();
        if (v.det_residue) j["det_residue_mod_8"] = std::to_string(*v.det_residue);
        if (v.sig) j["signature"] = std::to_string(*v.sig);
        if (v.bp_group_order) j["bp_order"] = v.bp_group_order->str();
        if (v.bp_class) j["class"] = v.bp_class->str();
        emit(j, out);
        return;
    }

    out << head_line(a) << "\n";
    if (!v.homeomorphic_sphere) {
        out << "topological sphere: no (" << v.reason << ")\n";
        return;
    }
    out << "topological sphere: yes (" << v.reason << ")\n";
    switch (v.smooth) {
        case SmoothClass::Standard:
            out << "smooth class: standard sphere";
            if (v.det_abs) out << "  (|Delta(-1)| = " << v.det_abs->str() << ")";
            out << "\n";
            break;
        case SmoothClass::Kervaire:
            out << "smooth class: Kervaire sphere  (|Delta(-1)| = " << v.det_abs->str()
                << ", residue " << *v.det_residue << " mod 8)\n";
            break;
        case SmoothClass::BpClass:
            out << "smooth class: bP class " << v.bp_class->str() << " of "
                << v.bp_group_order->str() << "  (signature " << *v.sig << ")\n";
            break;
        case SmoothClass::Unknown:
            out << "smooth class: undetermined\n";
            break;
    }
}

// ---------------------------------------------------------------- classical

void cmd_classical(const ExponentList& a, bool json, std::ostream& out) {
    AlmostContactClass ac = almost_contact_class(a);
    long long n = a.n();

    if (json) {
        ojson j = envelope("classical", &a);
        j["n"] = std::to_string(n);
        j["massey_group"] = ac.group.str();
        j["value"] = ac.value.str();
        if (ac.second) j["z2_component"] = ac.second->str();
        if (ac.sig) j["signature"] = std::to_string(*ac.sig);
        j["scope_warning"] = ac.scope_warning;
        emit(j, out);
        return;
    }

    out << head_line(a) << "  n = " << n << "\n";
    out << "pi_" << a.dimension() << "(SO(" << 2 * n << ")/U(" << n
        << ")) = " << ac.group.str() << "\n";
    out << "almost contact class: " << ac.value.str();
    if (ac.second) out << " (Z part; Z/2 part " << ac.second->str() << ")";
    if (ac.sig) out << "  [signature " << *ac.sig << "]";
    out << "\n";
    if (ac.scope_warning)
        out << "warning: not a certified standard sphere; the class is computed outside "
               "the stated range of the formula\n";
}

// ---------------------------------------------------------------- recognize

void cmd_recognize(const ExponentList& a, bool json, std::ostream& out) {
    std::vector<std::string> tags = recognize(a);

    if (json) {
        ojson j = envelope("recognize", &a);
        ojson t = ojson::array();
        for (const auto& s : tags) t.push_back(s);
        j["tags"] = t;
        emit(j, out);
        return;
    }

    out << head_line(a) << "\n";
    if (tags.empty()) {
        out << "no structural tags recognized\n";
        return;
    }
    for (const auto& s : tags) out << "- " << s << "\n";
}

// ----------------------------------------------------------------------- ss

void cmd_ss(const ExponentList& a, const std::string& theory_name, long long window,
            std::optional<long long> cutoff, bool json, std::ostream& out) {
    SsTheory theory = (theory_name == "sh") ? SsTheory::Sh : SsTheory::ShPlusEq;
    E1Page page = e1_page(a, theory, window, cutoff);
    Degeneration deg = degeneration_check(page);
    long long mu_p = page.mu_principal;

    std::optional<GradedRanks> betti;
    std::optional<bool> unbounded;
    if (deg == Degeneration::Degenerate) {
        if (!page.truncated) {
            betti = page.totals();
        } else {
            betti = page.totals();
            ShBetti probe = sh_betti(a, theory, window);
            unbounded = probe.unbounded;
        }
    }

    if (json) {
        ojson j = envelope("ss", &a);
        j["theory"] = theory_name;
        j["window"] = std::to_string(window);
        if (cutoff) j["cutoff"] = std::to_string(*cutoff);
        j["mu_principal"] = std::to_string(mu_p);
        j["truncated"] = page.truncated;
        j["column_cutoff"] = std::to_string(page.column_cutoff);
        ojson cols = ojson::object();
        for (const auto& [p, col] : page.columns) cols[std::to_string(p)] = ranks_json(col);
        j["columns"] = cols;
        j["grid"] = render_grid(page);
        j["degeneration"] = (deg == Degeneration::Degenerate) ? "degenerate" : "undetermined";
        if (betti) j[page.truncated ? "totals_at_cutoff" : "betti"] = ranks_json(*betti);
        if (unbounded) j["unbounded"] = *unbounded;
        emit(j, out);
        return;
    }

    out << head_line(a) << "  theory " << theory_name << "  window " << window;
    if (cutoff) out << "  cutoff " << *cutoff;
    out << "\n";
    out << "mu_P = " << mu_p << "  columns examined up to t = " << page.column_cutoff << "\n";
    out << "E1 page (columns p, rows q = total - p):\n";
    out << render_grid(page);
    if (deg == Degeneration::Degenerate) {
        out << "degeneration: degenerate (all entries in one total-degree parity)\n";
        if (!page.truncated) {
            out << "betti (|total| <= " << window << "): " << graded_str(*betti) << "\n";
        } else {
            out << "totals at cutoff: " << graded_str(*betti) << "\n";
            if (unbounded && *unbounded)
                out << "ranks grow strictly with the cutoff: unbounded in the window\n";
        }
    } else {
        out << "degeneration: undetermined (mixed total-degree parities)\n";
    }
}

// ---------------------------------------------------------------------- mec

const char* invariance_name(MecInvariance inv) {
    switch (inv) {
        case MecInvariance::ContactInvariant: return "contact invariant";
        case MecInvariance::FillingLevelOnly: return "filling level only";
        case MecInvariance::Undefined: return "undefined";
    }
    return "undefined";
}

void cmd_mec(const ExponentList& a, bool json, std::ostream& out) {
    StratumTable table = stratum_table(a);
    Rat value = mec_general(a);
    MecInvariance inv = mec_invariance_flag(a);
    std::optional<Rat> coprime;
    if (a.pairwise_coprime() && !a.has_unit()) coprime = mec_coprime(a);
    ShNonvanishing nv = sh_nonvanishing_by_mec(a);

    if (json) {
        ojson j = envelope("mec", &a);
        j["principal_period"] = std::to_string(table.principal_period);
        j["mu_principal"] = std::to_string(table.mu_principal);
        ojson rows = ojson::array();
        for (const auto& r : table.rows) {
            ojson row;
            row["period"] = std::to_string(r.period);
            row["stratum"] = exps_json(r.stratum.values());
            row["phi"] = std::to_string(r.phi);
            row["chi_equivariant"] = r.chi_eq.str();
            row["sign"] = std::to_string(r.sign);
            rows.push_back(row);
        }
        j["stratum_table"] = rows;
        j["mec"] = rat_str(value);
        if (coprime) j["coprime_form"] = rat_str(*coprime);
        j["invariance"] = invariance_name(inv);
        ojson nvj;
        nvj["nonvanishing"] = nv.nonvanishing;
        nvj["mec"] = rat_str(nv.mec);
        nvj["half_euler"] = rat_str(nv.half_euler);
        j["sh_nonvanishing"] = nvj;
        emit(j, out);
        return;
    }

    out << head_line(a) << "  principal period " << table.principal_period
        << "  mu_P = " << table.mu_principal << "\n";
    out << "stratum table:\n";
    out << "  period  phi  sign  chi^{S1}  stratum\n";
    for (const auto& r : table.rows) {
        std::ostringstream os;
        os << "  " << r.period;
        std::string s = os.str();
        s.resize(8, ' ');
        out << s;
        os.str("");
        os << r.phi;
        s = os.str();
        s.resize(5, ' ');
        out << s << (r.sign > 0 ? "+     " : "-     ") << r.chi_eq.str() << "  "
            << r.stratum.str() << "\n";
    }
    out << "mec = " << rat_str(value) << "\n";
    if (coprime) out << "coprime closed form = " << rat_str(*coprime) << "\n";
    out << "invariance: " << invariance_name(inv) << "\n";
    out << "SH nonvanishing: " << (nv.nonvanishing ? "yes" : "not detected") << "  (mec "
        << rat_str(nv.mec) << " vs (-1)^{n-1} chi(W)/2 = " << rat_str(nv.half_euler) << ")\n";
}

// ------------------------------------------------------------------ mec-sum

std::vector<std::vector<std::string>> split_parts(const std::vector<std::string>& tokens) {
    std::vector<std::vector<std::string>> parts(1);
    std::string word;
    auto flush_word = [&] {
        if (!word.empty()) {
            parts.back().push_back(word);
            word.clear();
        }
    };
    for (const auto& t : tokens) {
        for (char ch : t) {
            if (ch == ';') {
                flush_word();
                if (!parts.back().empty()) parts.emplace_back();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                flush_word();
            } else {
                word.push_back(ch);
            }
        }
        flush_word();
    }
    if (!parts.empty() && parts.back().empty()) parts.pop_back();
    if (parts.empty()) throw validation_error("mec-sum: no summands given");
    return parts;
}

void cmd_mec_sum(const std::vector<std::string>& tokens, long long n_opt, bool json,
                 std::ostream& out) {
    std::vector<std::vector<std::string>> raw = split_parts(tokens);
    std::vector<MecSummand> parts;
    std::optional<long long> n_from_lists;
    for (const auto& part : raw) {
        if (part.size() == 1) {
            parts.emplace_back(parse_rational(part[0]));
        } else {
            ExponentList e = ExponentList::parse(part);
            if (!n_from_lists) n_from_lists = e.n();
            parts.emplace_back(std::move(e));
        }
    }
    long long n = n_from_lists.value_or(n_opt);
    Rat value = mec_sum(parts, n);

    if (json) {
        ojson j = envelope("mec-sum", nullptr);
        j["n"] = std::to_string(n);
        ojson pj = ojson::array();
        for (const auto& p : parts) {
            ojson e;
            if (std::holds_alternative<ExponentList>(p))
                e["exponents"] = exps_json(std::get<ExponentList>(p).values());
            else
                e["value"] = rat_str(std::get<Rat>(p));
            pj.push_back(e);
        }
        j["parts"] = pj;
        j["mec"] = rat_str(value);
        emit(j, out);
        return;
    }

    out << "boundary connected sum of " << parts.size() << " summands, n = " << n << ":\n";
    for (const auto& p : parts) {
        if (std::holds_alternative<ExponentList>(p))
            out << "  " << std::get<ExponentList>(p).str() << "\n";
        else
            out << "  value " << rat_str(std::get<Rat>(p)) << "\n";
    }
    out << "mec = " << rat_str(value) << "\n";
}

// -------------------------------------------------------------- realize-mec

void cmd_realize_mec(const std::string& target_text, bool json, std::ostream& out) {
    Rat target = parse_rational(target_text);
    MecRecipe recipe = realize_mec(target);
    Rat check = mec_sum(recipe.expanded(), 3);
    if (check != target)
        throw consistency_error("realize-mec: recipe evaluates to " + rat_str(check));

    if (json) {
        ojson j = envelope("realize-mec", nullptr);
        j["target"] = rat_str(target);
        ojson pj = ojson::array();
        for (const auto& [e, m] : recipe.parts) {
            ojson p;
            p["exponents"] = exps_json(e.values());
            p["multiplicity"] = std::to_string(m);
            pj.push_back(p);
        }
        j["parts"] = pj;
        j["total_summands"] = std::to_string(recipe.total_summands());
        j["mec"] = rat_str(check);
        emit(j, out);
        return;
    }

    out << "target mec = " << rat_str(target) << "\n";
    out << "recipe (" << recipe.total_summands() << " summands, boundaries of dimension 5):\n";
    for (const auto& [e, m] : recipe.parts) out << "  " << m << " x " << e.str() << "\n";
    out << "verified: boundary connected sum has mec = " << rat_str(check) << "\n";
}

// ------------------------------------------------------------ realize-spin5

void cmd_realize_spin5(long long rank, const std::vector<long long>& torsion, bool json,
                       std::ostream& out) {
    std::vector<ExponentList> lists = realize_spin5(Int(rank), torsion);
    AbelianGroup target(Int(rank), [&] {
        std::vector<Int> t;
        for (long long q : torsion) {
            t.push_back(q);
            t.push_back(q);
        }
        return t;
    }());

    if (json) {
        ojson j = envelope("realize-spin5", nullptr);
        j["rank"] = std::to_string(rank);
        j["torsion"] = exps_json(torsion);
        j["target_group"] = group_json(target);
        ojson lj = ojson::array();
        for (const auto& e : lists) lj.push_back(exps_json(e.values()));
        j["lists"] = lj;
        j["count"] = std::to_string(lists.size());
        emit(j, out);
        return;
    }

    out << "target H_2 = " << target.str() << "  (each torsion order q contributes Z/q + Z/q)\n";
    out << "connected sum of " << lists.size() << " Brieskorn links:\n";
    std::map<ExponentList, long long> grouped;
    for (const auto& e : lists) grouped[e]++;
    for (const auto& [e, m] : grouped) out << "  " << m << " x " << e.str() << "\n";
}

// -------------------------------------------------------------------- sweep

struct SweepEntry {
    long long line = 0;
    ExponentList a;
    std::map<std::string, std::string> results;  // check -> ok / skip(...) / FAIL(...)
    bool failed = false;
};

std::string check_randell(const ExponentList& a) {
    Int mu = milnor_number(a);
    if (mu > 200) return "skip(mu > 200)";
    AbelianGroup r = randell_homology(a);
    AbelianGroup s = cokernel(pham_matrix(a));
    if (r != s) return "FAIL(randell " + r.str() + " vs smith " + s.str() + ")";
    return "ok";
}

std::string check_alexander(const ExponentList& a) {
    Int mu = milnor_number(a);
    if (mu > 2000) return "skip(mu > 2000)";
    IntPolynomial delta = alexander_polynomial(a);
    if (Int(delta.degree()) != mu) return "FAIL(degree != mu)";
    if (Int(multiplicity_at_one(delta)) != kappa_full(a))
        return "FAIL(multiplicity at 1 != kappa)";
    const std::vector<Int>& c = delta.coeffs();
    size_t d = c.size() - 1;
    bool sym = true, antisym = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] != c[d - i]) sym = false;
        if (c[i] != -c[d - i]) antisym = false;
    }
    if (!sym && !antisym) return "FAIL(coefficients not palindromic up to sign)";
    return "ok";
}

std::string check_coprime(const ExponentList& a) {
    if (!a.pairwise_coprime()) return "skip(not pairwise coprime)";
    if (a.has_unit()) return "skip(unit entry)";
    if (maslov_principal(a) == 0) return "skip(mu_P = 0)";
    Rat g = mec_general(a);
    Rat c = mec_coprime(a);
    if (g != c) return "FAIL(general " + rat_str(g) + " vs coprime " + rat_str(c) + ")";
    return "ok";
}

std::string check_window(const ExponentList& a) {
    if (a.lcm() > 400) return "skip(period > 400)";
    if (maslov_principal(a) == 0) return "skip(mu_P = 0)";
    try {
        WindowCertificate cert = mec_window_certificate(a);
        if (!cert.ok) return "FAIL(window error exceeds fitted bound)";
        return "ok";
    } catch (const validation_error& e) {
        return std::string("skip(") + e.what() + ")";
    }
}

void cmd_sweep(const std::string& corpus_opt, const std::string& checks_opt, bool json,
               std::ostream& out) {
    std::string path = corpus_opt;
    if (path.empty()) {
        const char* env = std::getenv("BRIESKORN_CORPUS_DIR");
        if (!env)
            throw validation_error(
                "sweep: pass --corpus FILE or set BRIESKORN_CORPUS_DIR");
        path = std::string(env) + "/ak.txt";
    }
    std::ifstream in(path);
    if (!in) throw validation_error("sweep: cannot open corpus file " + path);

    std::vector<std::string> wanted;
    {
        std::string item;
        std::istringstream cs(checks_opt == "all" ? "randell,alexander,coprime,window"
                                                  : checks_opt);
        while (std::getline(cs, item, ',')) {
            if (item != "randell" && item != "alexander" && item != "coprime" &&
                item != "window")
                throw validation_error("sweep: unknown check '" + item + "'");
            wanted.push_back(item);
        }
    }

    std::vector<SweepEntry> entries;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        ExponentList a = [&] {
            try {
                return ExponentList::parse(tokens);
            } catch (const validation_error& e) {
                throw validation_error(path + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }();
        SweepEntry entry{lineno, a, {}, false};
        for (const auto& name : wanted) {
            std::string res;
            try {
                if (name == "randell") res = check_randell(a);
                else if (name == "alexander") res = check_alexander(a);
                else if (name == "coprime") res = check_coprime(a);
                else res = check_window(a);
            } catch (const std::exception& e) {
                res = std::string("FAIL(") + e.what() + ")";
            }
            if (res.rfind("FAIL", 0) == 0) entry.failed = true;
            entry.results[name] = res;
        }
        entries.push_back(std::move(entry));
    }

    long long failures = 0;
    for (const auto& e : entries)
        if (e.failed) ++failures;

    if (json) {
        ojson j = envelope("sweep", nullptr);
        j["corpus"] = path;
        ojson ej = ojson::array();
        for (const auto& e : entries) {
            ojson row;
            row["line"] = std::to_string(e.line);
            row["exponents"] = exps_json(e.a.values());
            ojson cj = ojson::object();
            for (const auto& name : wanted) cj[name] = e.results.at(name);
            row["checks"] = cj;
            ej.push_back(row);
        }
        j["entries"] = ej;
        j["entries_checked"] = std::to_string(entries.size());
        j["failures"] = std::to_string(failures);
        emit(j, out);
    } else {
        for (const auto& e : entries) {
            out << path << ":" << e.line << ": " << e.a.str();
            for (const auto& name : wanted) out << "  " << name << "=" << e.results.at(name);
            out << "\n";
        }
        out << entries.size() << " entries, " << (entries.size() - failures) << " clean, "
            << failures << " with failures\n";
    }
    if (failures > 0)
        throw consistency_error("sweep: " + std::to_string(failures) +
                                " corpus entries failed cross-checks");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact topological and contact invariants of Brieskorn manifolds"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON");

    auto add_exps = [](CLI::App* sub, std::vector<std::string>& store) {
        sub->add_option("exponents", store, "exponents a_0 a_1 ...")->required()->expected(-1);
        sub->fallthrough();
    };

    std::vector<std::string> ex_hom, ex_eq, ex_alex, ex_sphere, ex_class, ex_recog, ex_ss,
        ex_mec;
    auto* c_hom = app.add_subcommand("homology", "integral homology of the link");
    add_exps(c_hom, ex_hom);
    auto* c_eq = app.add_subcommand("equivariant", "S^1-equivariant rational homology");
    add_exps(c_eq, ex_eq);
    auto* c_alex = app.add_subcommand("alexander",
                                      "characteristic polynomial and zeta data of the monodromy");
    add_exps(c_alex, ex_alex);
    auto* c_sphere = app.add_subcommand("sphere", "topological and smooth sphere classification");
    add_exps(c_sphere, ex_sphere);
    auto* c_class = app.add_subcommand("classical",
                                       "almost contact class of the natural contact structure");
    add_exps(c_class, ex_class);
    auto* c_recog = app.add_subcommand("recognize", "structural tags of the link");
    add_exps(c_recog, ex_recog);

    auto* c_ss = app.add_subcommand("ss", "first page of the Morse-Bott spectral sequence");
    std::string theory = "sh+";
    long long window = 0;
    std::optional<long long> cutoff;
    long long cutoff_raw = -1;
    c_ss->add_option("--theory", theory, "sh+ (equivariant, default) or sh")
        ->check(CLI::IsMember({"sh+", "sh"}));
    c_ss->add_option("--window", window, "degree window |total| <= M")->required();
    c_ss->add_option("--cutoff", cutoff_raw, "explicit column cutoff (return time)");
    add_exps(c_ss, ex_ss);

    auto* c_mec = app.add_subcommand("mec", "mean Euler characteristic with stratum table");
    add_exps(c_mec, ex_mec);

    auto* c_sum = app.add_subcommand("mec-sum",
                                     "mec of a boundary connected sum; separate parts with ';'");
    std::vector<std::string> sum_tokens;
    long long sum_n = 3;
    c_sum->add_option("--n", sum_n, "complex dimension n when no list part is given");
    c_sum->add_option("parts", sum_tokens, "exponent lists or values, ';' separated")
        ->required()
        ->expected(-1);
    c_sum->fallthrough();

    auto* c_rmec = app.add_subcommand("realize-mec",
                                      "realize a rational number as a mec in dimension 5");
    std::string target;
    c_rmec->add_option("target", target, "target rational p/q")->required();
    c_rmec->fallthrough();

    auto* c_spin = app.add_subcommand("realize-spin5",
                                      "realize Z^m + sum (Z/q)^2 as H_2 of a spin 5-manifold");
    long long spin_rank = 0;
    std::vector<long long> spin_torsion;
    c_spin->add_option("--rank", spin_rank, "free rank m");
    c_spin->add_option("--torsion", spin_torsion, "prime power orders q, comma separated")
        ->delimiter(',');
    c_spin->fallthrough();

    auto* c_sweep = app.add_subcommand("sweep", "cross-check a corpus of exponent lists");
    std::string corpus, checks = "all";
    c_sweep->add_option("--corpus", corpus, "corpus file (default $BRIESKORN_CORPUS_DIR/ak.txt)");
    c_sweep->add_option("--check", checks, "all or comma list: randell,alexander,coprime,window");
    c_sweep->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("brieskorn");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_hom) cmd_homology(ExponentList::parse(ex_hom), json, out);
        else if (*c_eq) cmd_equivariant(ExponentList::parse(ex_eq), json, out);
        else if (*c_alex) cmd_alexander(ExponentList::parse(ex_alex), json, out);
        else if (*c_sphere) cmd_sphere(ExponentList::parse(ex_sphere), json, out);
        else if (*c_class) cmd_classical(ExponentList::parse(ex_class), json, out);
        else if (*c_recog) cmd_recognize(ExponentList::parse(ex_recog), json, out);
        else if (*c_ss) {
            if (cutoff_raw >= 0) cutoff = cutoff_raw;
            cmd_ss(ExponentList::parse(ex_ss), theory, window, cutoff, json, out);
        } else if (*c_mec) cmd_mec(ExponentList::parse(ex_mec), json, out);
        else if (*c_sum) cmd_mec_sum(sum_tokens, sum_n, json, out);
        else if (*c_rmec) cmd_realize_mec(target, json, out);
        else if (*c_spin) cmd_realize_spin5(spin_rank, spin_torsion, json, out);
        else if (*c_sweep) cmd_sweep(corpus, checks, json, out);
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const consistency_error& e) {
        err << "consistency error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace brieskorn::cli
