// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include "amorph/errors.hpp"
#include "amorph/families.hpp"
#include "amorph/fusion.hpp"
#include "amorph/skewsym4.hpp"
#include "bundled.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace amorph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first few failures; the criterion fails on any.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures_++ < 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) return {true, summary};
        return {false, std::to_string(failures_) + " failure(s): " + notes_.str()};
    }

private:
    int failures_ = 0;
    std::ostringstream notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome paley7() {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    const auto s = paley(7);  // build_scheme has verified the axioms
    const auto p = eigenmatrix(s);
    c.expect(p.mode == EigenMode::Exact, "not exact mode");
    const auto a = TowerNumber::parse("(-1+sqrt(-7))/2"), b = TowerNumber::parse("(-1-sqrt(-7))/2");
    const Matrix<TowerNumber> expected{{1, 3, 3}, {1, a, b}, {1, b, a}};
    c.expect(p.exact == expected, "P differs from [[1,3,3],[1,a,b],[1,b,a]]");
    c.expect(p.multiplicities == std::vector<long long>{1, 3, 3}, "multiplicities are not (1,3,3)");
    const double t = seconds_since(start);
    c.expect(t < 1.0, "took " + std::to_string(t) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "exact P, multiplicities (1,3,3), %.3f s", t);
    return c.outcome(buf);
}

Outcome round_trip() {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    long long triples = 0;
    for (const auto& [name, s] : bundled_schemes()) {
        const auto p = eigenmatrix(s);
        const int d = s.d();
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j)
                for (int l = 0; l <= d; ++l) {
                    ++triples;
                    const long long want = s.p(i, j, l);
                    if (p.mode == EigenMode::Exact) {
                        c.expect(p_from_eigenmatrix(p, i, j, l) == Rational(want), name + " exact mismatch");
                    } else {
                        c.expect(std::abs(p_from_eigenmatrix_numeric(p, i, j, l) - std::complex<double>(want)) <= 1e-8,
                                 name + " numeric mismatch");
                    }
                }
    }
    const double t = seconds_since(start);
    c.expect(t < 10.0, "took " + std::to_string(t) + " s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%lld triples over %zu schemes, %.3f s", triples, bundled_schemes().size(), t);
    return c.outcome(buf);
}

Outcome orthogonality() {
    Check c;
    int exact = 0, numeric = 0;
    auto check = [&](const Eigenmatrix& p, const std::string& what) {
        (p.mode == EigenMode::Exact ? exact : numeric)++;
        c.expect(verify_orthogonality(p, 1e-8).ok, what);
    };
    for (const auto& [name, s] : bundled_schemes()) check(eigenmatrix(s), name);
    for (const auto& e : parameter_sweep(20).entries) {
        if (!e.srg) continue;
        check(srg_scheme_eigenmatrix(*e.srg), e.tag.to_string() + " srg");
        if (!e.feasible) continue;
        for (const auto& cand : feasible_candidates(*e.srg).candidates) {
            check(make_exact_eigenmatrix(cand.matrix()), e.tag.to_string() + " case " + to_string(cand.kase));
        }
        // case III is a one-parameter family; sample it across its range
        const auto& p = *e.srg;
        const Rational top(p.n * p.k, p.m1);
        for (int step = 1; step < 8; ++step) {
            const auto point = case3_family(p, top * Rational(step, 8));
            if (!point) continue;
            Eigenmatrix q;
            q.mode = EigenMode::Numeric;
            q.numeric = case3_numeric_matrix(p, *point);
            q.multiplicities = {1, p.m1 / 2, p.m2 / 2, p.m2 / 2, p.m1 / 2};
            check(q, e.tag.to_string() + " case III");
        }
    }
    return c.outcome(std::to_string(exact) + " exact and " + std::to_string(numeric) + " numeric matrices");
}

Outcome latin_positive() {
    Check c;
    const auto s = latin_net_scheme(cyclic_latin_square(3));
    const auto p = eigenmatrix(s);
    const auto parts = enumerate_admissible(s.d(), s.pairing());
    c.expect(parts.size() == 15, std::to_string(parts.size()) + " partitions");
    for (const auto& part : parts) {
        c.expect(fuse_combinatorial(s, part).accepted, part.to_string() + " combinatorial");
        c.expect(check_fusion_spectral(p, part).accepted, part.to_string() + " spectral");
    }
    c.expect(is_amorphous(s).amorphous, "is_amorphous is false");
    return c.outcome("15/15 partitions accepted on both paths; amorphous");
}

Outcome gf13_negative() {
    Check c;
    const auto s = cyclotomic_scheme(FiniteField(13), 4);
    const auto sp = classify_symmetry(s);
    c.expect(sp.theta == 2 && sp.phi == 0, "(theta,phi) != (2,0)");
    const auto report = is_amorphous(s);
    c.expect(!report.amorphous, "is_amorphous is true");
    std::string witness = "none";
    if (!report.verdicts.empty() && !report.verdicts.back().accepted) {
        const auto& part = report.verdicts.back().partition;
        witness = part.to_string();
        bool shape = part.blocks.size() == 3;
        if (shape) {
            // {{0}, L, L'} with L' the pairing image of L
            std::vector<int> image;
            for (int x : part.blocks[1]) image.push_back(s.pair(x));
            std::sort(image.begin(), image.end());
            shape = image == part.blocks[2] && part.blocks[1] != part.blocks[2];
        }
        c.expect(shape, "witness " + witness + " is not {{0},L,L'}");
        c.expect(report.verdicts.back().witness.has_value(), "no axiom witness recorded");
    } else {
        c.expect(false, "no rejected partition");
    }
    return c.outcome("(theta,phi)=(2,0), not amorphous, witness " + witness);
}

const CertificateStep* find_step(const Certificate& cert, StepKind kind, const std::string& entry) {
    for (const auto& s : cert.steps)
        if (s.kind == kind && s.entry == entry) return &s;
    return nullptr;
}

Outcome sweep_certificates() {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    const auto rep = parameter_sweep(20);
    int radical = 0;
    for (const auto& e : rep.entries) {
        if (!e.feasible) continue;
        c.expect(e.certified, e.tag.to_string() + " not certified");
        c.expect(e.certificates.size() == 3, e.tag.to_string() + " lacks a case");
        for (const auto& cert : e.certificates) {
            c.expect(cert.terminal() && replay(cert), e.tag.to_string() + " case " + to_string(cert.kase));
        }
        if (e.certificates.size() == 3) {
            const auto& three = e.certificates[2];
            const bool ok = three.kase == SkewCase::III && three.steps.size() == 1 &&
                            three.steps[0].kind == StepKind::RadicalContradiction && three.steps[0].holds;
            radical += ok ? 1 : 0;
            c.expect(ok, e.tag.to_string() + " case III");
        }
    }
    c.expect(rep.survivors == 0, std::to_string(rep.survivors) + " survivors");
    c.expect(rep.certified == rep.feasible, "certified != feasible");

    auto spot = [&](const SrgParams& p, std::size_t kase, const char* entry, Rational want, const char* label) {
        const auto certs = nonexistence_certificate(p);
        const auto* step = find_step(certs[kase], StepKind::IntegralityViolation, entry);
        c.expect(step && step->value && *step->value == want, label);
    };
    spot(params_from_type(latin_tag(2, 5)), 0, "p_11^1", Rational(3, 2), "L_2(5) p_11^1 != 3/2");
    spot(params_from_type(latin_tag(3, 6)), 0, "p_12^2-p_12^3", Rational(-3, 2), "L_3(6) difference != -3/2");
    spot(params_from_type(negative_latin_tag(1, 4)), 1, "p_11^1", Rational(-3, 4), "NL_1(4) (lambda+s)/4 != -3/4");

    const double t = seconds_since(start);
    c.expect(t < 10.0, "took " + std::to_string(t) + " s");
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu parameter sets, %d feasible, %d certified, %d survivors, %d case-III contradictions; spot "
                  "values 3/2, -3/2, -3/4; %.3f s",
                  rep.entries.size(), rep.feasible, rep.certified, rep.survivors, radical, t);
    return c.outcome(buf);
}

Outcome closed_form() {
    Check c;
    int rational = 0, tower = 0;
    for (const auto& e : parameter_sweep(20).entries) {
        if (!e.feasible) continue;
        for (const auto& cand : feasible_candidates(*e.srg).candidates) {
            if (cand.kase != SkewCase::I) continue;
            const auto m = cand.matrix();
            const std::string what = e.tag.to_string();
            if (e.srg->r.as_rational()) {
                ++rational;
                const auto b1 = b1_closed_form(*e.srg, SkewCase::I);
                for (int j = 0; j < 5; ++j)
                    for (int l = 0; l < 5; ++l) c.expect(b1(j, l) == p_from_eigenmatrix(m, 1, j, l), what);
            } else {
                ++tower;
                const auto b1 = b1_closed_form_tower(*e.srg, SkewCase::I);
                for (int j = 0; j < 5; ++j)
                    for (int l = 0; l < 5; ++l) c.expect(b1(j, l) == p_from_eigenmatrix_tower(m, 1, j, l), what);
            }
        }
    }
    c.expect(rational + tower > 0, "no case-I candidates");
    return c.outcome(std::to_string(rational) + " rational and " + std::to_string(tower) +
                     " conference case-I candidates, all 25 entries equal");
}

Outcome fusion_agreement() {
    Check c;
    long long compared = 0;
    int schemes = 0;
    for (const auto& [name, s] : bundled_schemes()) {
        const auto p = eigenmatrix(s);
        if (p.mode != EigenMode::Exact) continue;
        ++schemes;
        for (const auto& part : enumerate_admissible(s.d(), s.pairing())) {
            ++compared;
            c.expect(check_fusion_spectral(p, part).accepted == fuse_combinatorial(s, part).accepted,
                     name + " " + part.to_string());
        }
    }
    return c.outcome(std::to_string(compared) + " partitions over " + std::to_string(schemes) +
                     " exact-mode schemes agree");
}

Outcome enumeration() {
    Check c;
    const auto seven = enumerate_admissible(4, {0, 4, 3, 2, 1}).size();
    c.expect(seven == 7, "pairing (1 4)(2 3) gives " + std::to_string(seven));
    const long long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int d = 1; d <= 6; ++d) {
        std::vector<int> id(static_cast<std::size_t>(d + 1));
        for (int i = 0; i <= d; ++i) id[static_cast<std::size_t>(i)] = i;
        const auto got = static_cast<long long>(enumerate_admissible(d, id).size());
        c.expect(got == bell[d], "Bell(" + std::to_string(d) + ") gives " + std::to_string(got));
    }
    return c.outcome("7 for (1 4)(2 3); Bell numbers 1, 2, 5, 15, 52, 203");
}

Outcome tournaments() {
    Check c;
    for (int q : {7, 11, 19, 23}) {
        const auto s = paley(q);
        const auto& m = s.matrix();
        const long long want = (q - 3) / 4;
        c.expect(s.p(1, 1, 1) == want, "paley(" + std::to_string(q) + ") tensor");
        // recount over every pair of class 1 straight from the colors
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                if (m(x, y) != 1) continue;
                long long count = 0;
                for (int z = 0; z < q; ++z) count += m(x, z) == 1 && m(z, y) == 1;
                c.expect(count == want, "paley(" + std::to_string(q) + ") pair count");
            }
    }
    return c.outcome("p^1_11 = 1, 2, 4, 5 for p = 7, 11, 19, 23");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Paley(7) exact eigenmatrix", paley7},
        {"intersection numbers recovered from P", round_trip},
        {"orthogonality relations", orthogonality},
        {"amorphous positive control (Latin net, v=3)", latin_positive},
        {"amorphous negative control (GF(13), index 4)", gf13_negative},
        {"skew-symmetric 4-class sweep, vmax=20", sweep_certificates},
        {"closed-form B_1 against P", closed_form},
        {"spectral and combinatorial fusion agree", fusion_agreement},
        {"admissible partition counts", enumeration},
        {"doubly regular tournament identity", tournaments},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  "
                  << criteria[i].first << ": " << o.detail << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
