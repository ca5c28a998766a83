// Command line front end for the bounded-height / abelian-surface toolkit.
//
// Exit codes: 0 all checks passed, 1 computational failure or failed check,
// 2 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "egr/dataset.hpp"
#include "egr/enumerate.hpp"
#include "egr/galois.hpp"
#include "egr/heights.hpp"
#include "egr/search.hpp"
#include "egr/verify.hpp"

using namespace egr;

namespace {

struct Globals {
    unsigned precision = 192;
    int threads = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

NFPtr parse_field(const std::string& spec) {
    if (spec == "Q") return field_Q();
    if (spec == "Qi" || spec == "gauss") return field_gauss();
    if (spec == "K353") return twotorsion_field_353().K;
    if (spec.rfind("sqrt:", 0) == 0) return field_sqrt(std::stol(spec.substr(5)));
    if (spec.rfind("disc:", 0) == 0) return field_real_quadratic(std::stol(spec.substr(5)));
    if (spec.rfind("F", 0) == 0 && spec.size() > 1 && isdigit(spec[1]))
        return field_real_quadratic(std::stol(spec.substr(1)));
    if (!spec.empty() && spec[0] == '{') return field_from_json(spec);
    return field_from_json(read_file(spec));
}

// "n" for the principal ideal (n); "p:q" or "p:q:i" for the i-th prime over q.
Ideal parse_ideal(NFPtr K, const std::string& spec) {
    if (spec.rfind("p:", 0) == 0) {
        std::string rest = spec.substr(2);
        size_t colon = rest.find(':');
        Z q(colon == std::string::npos ? rest : rest.substr(0, colon));
        size_t idx = colon == std::string::npos ? 0 : std::stoul(rest.substr(colon + 1));
        auto dec = prime_decomposition(K, q);
        if (idx >= dec.size())
            throw std::runtime_error("only " + std::to_string(dec.size()) +
                                     " primes over " + q.get_str());
        return dec[idx].p;
    }
    return ideal_principal(NFElement::from_q(K, Q(Z(spec))));
}

UnitGroup units_for(NFPtr K, const std::string& units_file) {
    if (!units_file.empty()) return units_from_json(K, read_file(units_file));
    return unit_group(K);
}

std::string trunc4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    return s.substr(0, s.find('.') + 5);  // truncate, never round, 4 decimals
}

int report_and_exit(const VerificationReport& rep, const std::string& out) {
    for (const auto& c : rep.checks)
        std::printf("%-32s %s  %s\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                    c.detail.c_str());
    std::printf("%d/%zu checks passed\n", (int)rep.checks.size() - rep.failures(),
                rep.checks.size());
    if (!out.empty()) {
        std::string j = "[";
        for (size_t i = 0; i < rep.checks.size(); i++) {
            const auto& c = rep.checks[i];
            j += std::string(i ? "," : "") + "\n {\"name\": \"" + c.name +
                 "\", \"pass\": " + (c.pass ? "true" : "false") + ", \"detail\": \"" +
                 c.detail + "\"}";
        }
        write_file(out, j + "\n]\n");
    }
    return rep.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const Globals& g, const std::string& field, const std::string& bound,
                  const std::string& denom, const std::string& units_file,
                  const std::string& out) {
    NFPtr K = parse_field(field);
    Q B(bound);
    B.canonicalize();
    UnitGroup U = units_for(K, units_file);
    std::vector<NFElement> elems;
    std::string completeness;
    if (!denom.empty()) {
        elems = enumerate_with_denominator(K, parse_ideal(K, denom), B, U);
        sort_elements(elems);
        completeness = U.cert == UnitCertification::Heuristic
                           ? "complete relative to supplied units"
                           : "complete";
    } else {
        EnumerationResult res = enumerate_bounded_height(K, B, U);
        elems = res.elements;
        completeness = res.completeness;
    }
    std::printf("%zu elements of %s with H <= %s (%s)\n", elems.size(),
                K->label.c_str(), B.get_str().c_str(), completeness.c_str());
    for (const auto& x : elems)
        std::printf("  %-28s H ~ %s\n", x.str().c_str(),
                    height_ball(x, g.precision).str(8).c_str());
    if (!out.empty()) write_file(out, elements_to_json(elems));
    return 0;
}

int cmd_units(const Globals& g, const std::string& field, const std::string& bound,
              const std::string& units_file, const std::string& out) {
    NFPtr K = parse_field(field);
    UnitGroup U = units_for(K, units_file);
    const char* cert = U.cert == UnitCertification::CertifiedFundamental ? "certified"
                       : U.cert == UnitCertification::Supplied           ? "supplied"
                                                                         : "heuristic";
    std::printf("%s: unit rank %d/%d (%s), torsion order %d\n", K->label.c_str(),
                U.rank(), K->unit_rank(), cert, U.torsion_order);
    for (const auto& u : U.gens)
        std::printf("  %-28s H ~ %s\n", u.str().c_str(),
                    height_ball(u, g.precision).str(8).c_str());
    if (!bound.empty()) {
        Q B(bound);
        B.canonicalize();
        auto list = units_of_height_up_to(U, B);
        std::printf("%zu units with H <= %s\n", list.size(), B.get_str().c_str());
        for (const auto& u : list) std::printf("  %s\n", u.str().c_str());
        if (!out.empty()) write_file(out, elements_to_json(list));
    } else if (!out.empty()) {
        write_file(out, units_to_json(U));
    }
    return 0;
}

int cmd_ideals(const std::string& field, const std::string& norm_bound, long prime) {
    NFPtr K = parse_field(field);
    if (prime > 0) {
        auto dec = prime_decomposition(K, Z(prime));
        std::printf("%ld = product of %zu primes in %s\n", prime, dec.size(),
                    K->label.c_str());
        for (const auto& P : dec)
            std::printf("  e=%d f=%d  (%ld, %s)\n", P.e, P.f, prime,
                        P.second_gen.str().c_str());
        return 0;
    }
    Q B(norm_bound);
    B.canonicalize();
    auto list = ideals_of_norm_up_to(K, B);
    std::printf("%zu integral ideals of norm <= %s in %s\n", list.size(),
                B.get_str().c_str(), K->label.c_str());
    for (const auto& [I, n] : list) std::printf("  norm %s\n", n.get_str().c_str());
    return 0;
}

int cmd_frobenius(long disc, const std::string& out) {
    SmallField F4 = SmallField::make(2, 2);
    SmallField F5 = SmallField::make(5, 1);
    SmallField F2 = SmallField::make(2, 1);
    int bad = 0;
    std::string j = "[";
    bool first = true;
    for (const FrobeniusTable& t : frobenius_tables()) {
        if (disc > 0 && t.D != disc) continue;
        std::printf("D = %ld (coefficients in Z[%s])\n", t.D,
                    t.coeff_sqrt2 ? "sqrt2" : "e");
        for (const FrobeniusRow& r : t.rows) {
            int am2, o2, am5 = -1, o5 = -1;
            if (t.coeff_sqrt2) {
                am2 = reduce_sqrt2_mod_sqrt2(r.ax, r.ay);
                o2 = projective_frobenius_order(F2, am2, F2.from_int(r.norm));
            } else {
                am2 = reduce_golden_mod2(r.ax, r.ay);
                o2 = projective_frobenius_order(F4, am2, F4.from_int(r.norm));
                am5 = reduce_golden_mod_sqrt5(r.ax, r.ay);
                o5 = projective_frobenius_order(F5, am5, F5.from_int(r.norm));
            }
            bool ok = am2 == r.amod2 && o2 == r.o2 &&
                      (t.coeff_sqrt2 || (am5 == r.amod5 && o5 == r.o5));
            bad += !ok;
            std::printf("  Np=%-4ld a=(%s,%s)  amod2=%s o2=%d", r.norm,
                        r.ax.get_str().c_str(), r.ay.get_str().c_str(),
                        (t.coeff_sqrt2 ? F2 : F4).str(am2).c_str(), o2);
            if (!t.coeff_sqrt2) std::printf("  amod5=%d o5=%d", am5, o5);
            std::printf("  %s\n", ok ? "ok" : "MISMATCH");
            j += std::string(first ? "" : ",") + "\n {\"D\": " + std::to_string(t.D) +
                 ", \"norm\": " + std::to_string(r.norm) + ", \"o2\": " +
                 std::to_string(o2) + ", \"o5\": " + std::to_string(o5) + "}";
            first = false;
        }
    }
    if (!out.empty()) write_file(out, j + "\n]\n");
    return bad ? 1 : 0;
}

int cmd_fontaine(long p, const std::string& delta_spec) {
    double delta;
    if (delta_spec.rfind("sqrt:", 0) == 0)
        delta = std::sqrt((double)std::stol(delta_spec.substr(5)));
    else
        delta = std::stod(delta_spec);
    double v = fontaine_bound((unsigned)p, delta);
    std::printf("%s\n", trunc4(v).c_str());
    return 0;
}

int cmd_galois_scan(const Globals& g, const std::string& name, const std::string& coeffs,
                    uint64_t prime_bound, const std::string& out) {
    QPoly f;
    int degree = 0;
    std::string expect;
    if (!name.empty()) {
        bool found = false;
        for (const ScanPoly& sp : scan_polynomials())
            if (sp.name == name) {
                f = qpoly_from_z(sp.coeffs);
                degree = sp.degree;
                expect = sp.group;
                found = true;
            }
        if (name == "h353") {
            // relative cubic over a quadratic: the natural block action
            f = qpoly_from_z({Z(2), Z(0), Z(-19), Z(19), Z(1), Z(-2), Z(1)});
            degree = 6;
            expect = "S3wr2";
            found = true;
        }
        if (!found) throw std::runtime_error("unknown polynomial " + name);
    } else {
        std::vector<Z> c;
        std::stringstream ss(coeffs);
        std::string tok;
        while (std::getline(ss, tok, ',')) c.push_back(Z(tok));
        f = qpoly_from_z(c);
        degree = (int)c.size() - 1;
    }
    CycleTypeScan scan = cycle_type_scan(f, prime_bound, g.threads);
    std::printf("%llu primes used, %llu skipped\n",
                (unsigned long long)scan.primes_used,
                (unsigned long long)scan.primes_skipped);
    for (const auto& [shape, n] : scan.counts) {
        std::printf("  [");
        for (size_t i = 0; i < shape.size(); i++)
            std::printf("%s%d", i ? " " : "", shape[i]);
        std::printf("] x %llu\n", (unsigned long long)n);
    }
    int rc = 0;
    std::string j = "{\"primes_used\": " + std::to_string(scan.primes_used) +
                    ", \"comparisons\": [";
    if (degree == 6 || degree == 12) {
        auto cmps = compare_group_candidates(scan, degree);
        double expect_chi = -1;
        for (const auto& c : cmps)
            if (c.name == expect && !c.eliminated) expect_chi = c.chi_square;
        for (size_t i = 0; i < cmps.size(); i++) {
            const auto& c = cmps[i];
            std::printf("%-8s %s  chi2 %.4f%s\n", c.name.c_str(),
                        c.eliminated ? "eliminated" : "possible  ", c.chi_square,
                        c.name == expect ? "  (expected)" : "");
            j += std::string(i ? "," : "") + "{\"group\": \"" + c.name +
                 "\", \"eliminated\": " + (c.eliminated ? "true" : "false") +
                 ", \"chi2\": " + std::to_string(c.chi_square) + "}";
            if (!expect.empty()) {
                if (c.name == expect && c.eliminated) rc = 1;
                if (c.name != expect && !c.eliminated &&
                    (expect_chi < 0 || c.chi_square <= expect_chi))
                    rc = 1;
            }
        }
    }
    if (!out.empty()) write_file(out, j + "]}\n");
    return rc;
}

int cmd_search(const Globals&, const std::string& bound, const std::string& units_file,
               const std::string& out) {
    RelativeExtension ext = twotorsion_field_353();
    UnitGroup U = units_file.empty()
                      ? unit_group_supplied(ext.K, sextic353_unit_coords(), true)
                      : units_from_json(ext.K, read_file(units_file));
    Q B(bound);
    B.canonicalize();
    SearchResult res = candidate_pair_search(ext, U, B);
    std::printf("%zu candidates with H <= %s (%s)\n", res.candidates.size(),
                B.get_str().c_str(), res.exhaustive ? "exhaustive" : "not exhaustive");
    for (const auto& c : res.candidates) {
        std::printf("  %s\n", c.alpha.str("c").c_str());
        std::printf("    minpoly/F:");
        for (const auto& co : c.rel_minpoly) std::printf("  %s", co.str("w").c_str());
        std::printf("\n");
    }
    if (!out.empty()) {
        std::vector<NFElement> v;
        for (const auto& c : res.candidates) v.push_back(c.alpha);
        write_file(out, elements_to_json(v));
    }
    return 0;
}

int cmd_tables(const std::string& name) {
    if (name == "table1") {
        long cur = 0;
        std::string line;
        for (const SurfacePair& sp : surface_pairs()) {
            if (sp.D != cur) {
                if (cur) std::printf("%ld : %s\n", cur, line.c_str());
                cur = sp.D;
                line.clear();
            }
            if (!line.empty()) line += ", ";
            line += std::to_string(sp.Dprime);
            if (sp.power == 2) line += "^(2)";
        }
        if (cur) std::printf("%ld : %s\n", cur, line.c_str());
        return 0;
    }
    if (name == "frobenius") {
        for (const FrobeniusTable& t : frobenius_tables())
            std::printf("D = %ld : %zu rows, coefficients in Z[%s]\n", t.D,
                        t.rows.size(), t.coeff_sqrt2 ? "sqrt2" : "e");
        return 0;
    }
    if (name == "scan") {
        for (const ScanPoly& sp : scan_polynomials())
            std::printf("%-14s degree %2d  %s\n", sp.name.c_str(), sp.degree,
                        sp.group.c_str());
        return 0;
    }
    if (name == "curves") {
        for (long D : curve_model_discs()) {
            GenusTwoModel m = curve_model(D);
            std::printf("D = %ld : y^2 + Q y = P over %s\n", D, m.F->label.c_str());
        }
        return 0;
    }
    if (name == "elliptic") {
        for (const auto& E : elliptic_models_1997())
            std::printf("[%s, %s, %s, %s, %s] over %s\n", E.a1.str("w").c_str(),
                        E.a2.str("w").c_str(), E.a3.str("w").c_str(),
                        E.a4.str("w").c_str(), E.a6.str("w").c_str(),
                        E.a1.K->label.c_str());
        return 0;
    }
    std::fprintf(stderr, "available: table1, frobenius, scan, curves, elliptic\n");
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded Weil height enumeration and abelian surface checks"};
    app.require_subcommand(1);

    Globals g;
    if (const char* t = std::getenv("THREADS")) g.threads = std::atoi(t);
    app.add_option("--precision", g.precision, "working precision in bits");
    app.add_option("--threads", g.threads, "worker threads");

    std::string field, bound, denom, units_file, out, name, coeffs, scope = "all";
    std::string delta_spec;
    long disc = 0, prime = 0, fp = 2;
    uint64_t prime_bound = 10000;

    auto* enu = app.add_subcommand("enumerate", "all x with H_K(x) <= B");
    enu->add_option("--field", field, "field label or JSON")->required();
    enu->add_option("--bound", bound, "height bound (rational)")->required();
    enu->add_option("--denominator", denom, "fix the denominator ideal: n or p:q[:i]");
    enu->add_option("--units-file", units_file, "unit group JSON override");
    enu->add_option("--out", out, "write elements as JSON");

    auto* uni = app.add_subcommand("units", "unit group and bounded-height units");
    uni->add_option("--field", field, "field label or JSON")->required();
    uni->add_option("--bound", bound, "list units with H <= bound");
    uni->add_option("--units-file", units_file, "unit group JSON override");
    uni->add_option("--out", out, "write JSON");

    auto* idl = app.add_subcommand("ideals", "ideal lists and prime splitting");
    idl->add_option("--field", field, "field label or JSON")->required();
    idl->add_option("--norm-bound", bound, "list ideals of norm <= bound");
    idl->add_option("--prime", prime, "decompose the rational prime");

    auto* vc = app.add_subcommand("verify-curve", "genus 2 curve checks");
    vc->add_option("--disc", disc, "restrict to one discriminant");
    vc->add_option("--out", out, "write report JSON");

    auto* fr = app.add_subcommand("frobenius", "recompute the eigenvalue tables");
    fr->add_option("--disc", disc, "restrict to one table");
    fr->add_option("--out", out, "write rows as JSON");

    auto* fo = app.add_subcommand("fontaine", "delta * p^(1+1/(p-1))");
    fo->add_option("--p", fp, "prime");
    fo->add_option("--delta-f", delta_spec, "root discriminant: sqrt:N or a number")
        ->required();

    auto* gs = app.add_subcommand("galois-scan", "cycle type statistics mod p");
    gs->add_option("--poly", name, "embedded polynomial name (or h353)");
    gs->add_option("--coeffs", coeffs, "comma separated integer coefficients, low to high");
    gs->add_option("--prime-bound", prime_bound, "scan primes up to this bound");
    gs->add_option("--out", out, "write scan JSON");

    auto* se = app.add_subcommand("search", "candidate pair search in the D=353 field");
    se->add_option("--bound", bound, "height bound")->default_val("100");
    se->add_option("--units-file", units_file, "unit group JSON override");
    se->add_option("--out", out, "write candidates as JSON");

    auto* tb = app.add_subcommand("tables", "print embedded datasets");
    tb->add_option("--name", name, "table1, frobenius, scan, curves, elliptic")
        ->required();

    auto* va = app.add_subcommand("verify-all", "run the verification suite");
    va->add_option("--scope", scope, "all, heights, curves, galois, tables");
    va->add_option("--out", out, "write report JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*enu) return cmd_enumerate(g, field, bound, denom, units_file, out);
        if (*uni) return cmd_units(g, field, bound, units_file, out);
        if (*idl) {
            if (bound.empty() && prime <= 0)
                throw CLI::ValidationError("ideals", "need --norm-bound or --prime");
            return cmd_ideals(field, bound, prime);
        }
        if (*vc) {
            VerificationReport rep = verify_all("curves", g.threads);
            if (disc > 0) {
                VerificationReport sub;
                std::string tag = std::to_string(disc);
                for (auto& c : rep.checks)
                    if (c.name.find(tag) != std::string::npos) sub.checks.push_back(c);
                rep = sub;
            }
            return report_and_exit(rep, out);
        }
        if (*fr) return cmd_frobenius(disc, out);
        if (*fo) return cmd_fontaine(fp, delta_spec);
        if (*gs) {
            if (name.empty() == coeffs.empty())
                throw CLI::ValidationError("galois-scan", "need exactly one of --poly, --coeffs");
            return cmd_galois_scan(g, name, coeffs, prime_bound, out);
        }
        if (*se) return cmd_search(g, bound, units_file, out);
        if (*tb) return cmd_tables(name);
        if (*va) return report_and_exit(verify_all(scope, g.threads), out);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
