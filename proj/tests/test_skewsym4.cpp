#include "doctest.h"

#include "amorph/errors.hpp"
#include "amorph/families.hpp"
#include "amorph/skewsym4.hpp"

#include <algorithm>
#include <random>

using namespace amorph;

namespace {

TowerNumber T(const char* text) { return TowerNumber::parse(text); }

const CertificateStep* find_step(const Certificate& c, StepKind kind, const std::string& entry = "") {
    for (const auto& s : c.steps)
        if (s.kind == kind && (entry.empty() || s.entry == entry)) return &s;
    return nullptr;
}

Eigenmatrix numeric_eigenmatrix(const Matrix<std::complex<double>>& m, std::vector<long long> mult) {
    Eigenmatrix e;
    e.mode = EigenMode::Numeric;
    e.numeric = m;
    e.multiplicities = std::move(mult);
    return e;
}

}  // namespace

TEST_CASE("case I and case II candidates") {
    auto l25 = params_from_type(latin_tag(2, 5));
    auto set = feasible_candidates(l25);
    REQUIRE(set.candidates.size() == 2);
    CHECK(set.case3_family);
    const auto& one = set.candidates[0];
    CHECK(one.kase == SkewCase::I);
    CHECK(one.rho == T("(3+5*sqrt(-1))/2"));
    CHECK(one.sigma == TowerNumber(-1));
    CHECK(one.tau == TowerNumber(-2));
    CHECK(one.omega == T("(1+5*sqrt(-1))/2"));
    CHECK(multiplicities_from_P(one.matrix())[1] == Rational(4));

    auto clebsch = params_from_type(negative_latin_tag(1, 4));
    auto two = make_candidate(clebsch, SkewCase::II);
    CHECK(two.sigma == T("(-3+4*sqrt(-1))/2"));
    // k1 = 5 is odd, so the filtered set is empty
    auto filtered = feasible_candidates(clebsch);
    CHECK(filtered.candidates.empty());
    CHECK_FALSE(filtered.case3_family);
    CHECK_FALSE(filtered.rejected.empty());

    auto k3 = params_from_type(latin_tag(1, 3));
    auto k3c = feasible_candidates(k3);
    REQUIRE_FALSE(k3c.candidates.empty());
    CHECK(k3c.candidates[0].rho == T("(2+3*sqrt(-1))/2"));

    SrgParams broken = l25;
    broken.m1 = 7;
    CHECK_THROWS_AS(feasible_candidates(broken), InconsistentSrg);
    CHECK_THROWS_AS(make_candidate(l25, SkewCase::III), OutOfRange);
}

TEST_CASE("candidates satisfy orthogonality and the conjugate shape") {
    for (long long v = 3; v <= 12; ++v)
        for (long long g = 1; g <= v; ++g)
            for (const auto& tag : {latin_tag(g, v), negative_latin_tag(g, v)}) {
                SrgParams p;
                try {
                    p = params_from_type(tag);
                } catch (const InfeasibleParameters&) {
                    continue;
                }
                for (const auto& c : feasible_candidates(p).candidates) {
                    CAPTURE(tag.to_string());
                    auto m = c.matrix();
                    auto e = make_exact_eigenmatrix(m);
                    CHECK(e.multiplicities == c.multiplicities());
                    CHECK(verify_orthogonality(e).ok);
                    for (int j = 0; j < 5; ++j) {
                        CHECK(m(1, j) == m(4, j).complex_conjugate());
                        CHECK(m(2, j) == m(3, j).complex_conjugate());
                    }
                }
            }
    // conference parameters reach the biquadratic tower Q(sqrt(n), sqrt(-1))
    auto c13 = make_srg_params(13, 6, 2, 3);
    auto set = feasible_candidates(c13);
    REQUIRE(set.candidates.size() == 2);
    for (const auto& c : set.candidates) CHECK(verify_orthogonality(make_exact_eigenmatrix(c.matrix())).ok);
}

TEST_CASE("case III family") {
    auto c13 = make_srg_params(13, 6, 2, 3);
    auto pt = case3_family(c13, Rational(13, 2));
    REQUIRE(pt.has_value());
    CHECK(pt->z == Rational(13, 2));
    CHECK(pt->b == Rational(13, 2));
    CHECK(pt->c == Rational(13, 2));
    CHECK_FALSE(case3_family(c13, Rational(13)).has_value());  // z = 0
    CHECK_THROWS_AS(case3_family(c13, Rational(0)), OutOfRange);

    std::mt19937 rng(7);
    for (const auto& p : {c13, params_from_type(latin_tag(2, 5)), params_from_type(negative_latin_tag(2, 6)),
                          make_srg_params(29, 14, 6, 7), params_from_type(latin_tag(1, 3))}) {
        CAPTURE(p.to_string());
        const Rational top = Rational(p.n * p.k, p.m1);
        const Rational k1(p.k), k2(p.n - p.k - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const long long num = std::uniform_int_distribution<long long>(1, 999)(rng);
            const Rational y = top * Rational(num, 1000);
            auto q = case3_family(p, y);
            REQUIRE(q.has_value());
            CHECK(q->y / k1 + q->z / k2 == Rational(p.n, p.m1));
            CHECK(q->b / k1 + q->c / k2 == Rational(p.n, p.m2));
            CHECK(q->b * q->y * k2 * k2 == q->c * q->z * k1 * k1);
            CHECK((q->b.sign() > 0 && q->c.sign() > 0 && q->z.sign() > 0));
            // the family solves both orthogonality relations
            auto e = numeric_eigenmatrix(case3_numeric_matrix(p, *q), {1, p.m1 / 2, p.m2 / 2, p.m2 / 2, p.m1 / 2});
            if (p.m1 % 2 == 0 && p.m2 % 2 == 0) CHECK(verify_orthogonality(e).ok);
        }
    }
}

TEST_CASE("the index-4 scheme on GF(13) is a case III point") {
    auto s = cyclotomic_scheme(FiniteField(13), 4);
    auto p = eigenmatrix(s);
    auto srg = make_srg_params(13, 6, 2, 3);
    // class 1 pairs with 3 and 2 with 4; in the 5x5 shape the pairs are (1,4), (2,3)
    const double r = srg.r.to_complex().real(), sv = srg.s.to_complex().real();
    double y = -1, z = -1, b = -1, c = -1;
    for (int h = 1; h <= 4; ++h) {
        const auto first = p.value(h, 1), second = p.value(h, 2);
        if (std::abs(2 * first.real() - r) < 1e-9) {
            y = std::pow(2 * first.imag(), 2);
            z = std::pow(2 * second.imag(), 2);
        } else if (std::abs(2 * first.real() - sv) < 1e-9) {
            b = std::pow(2 * first.imag(), 2);
            c = std::pow(2 * second.imag(), 2);
        }
    }
    REQUIRE(y > 0);
    REQUIRE(b > 0);
    CHECK(y / 6 + z / 6 == doctest::Approx(13.0 / 6));
    CHECK(b / 6 + c / 6 == doctest::Approx(13.0 / 6));
    CHECK(std::sqrt(b * y) / 6 == doctest::Approx(std::sqrt(c * z) / 6));
    auto pt = case3_family(srg, Rational(static_cast<long long>(std::llround(y * 1e6)), 1000000));
    REQUIRE(pt.has_value());
    CHECK(pt->z.to_double() == doctest::Approx(z).epsilon(1e-5));
}

TEST_CASE("closed-form B_1") {
    auto l25 = params_from_type(latin_tag(2, 5));
    auto b = b1_closed_form(l25, SkewCase::I);
    CHECK(b(1, 1) == Rational(3, 2));

    auto l36 = params_from_type(latin_tag(3, 6));
    auto b36 = b1_closed_form(l36, SkewCase::I);
    CHECK(b36(2, 2) - b36(2, 3) == Rational(-3, 2));

    auto nl = params_from_type(negative_latin_tag(1, 4));
    CHECK(b1_closed_form(nl, SkewCase::II)(1, 1) == Rational(-3, 4));

    CHECK_THROWS_AS(b1_closed_form(make_srg_params(13, 6, 2, 3), SkewCase::I), NotRational);
    CHECK_THROWS_AS(b1_closed_form(l25, SkewCase::III), OutOfRange);

    // column sums are k1/2 and the closed form agrees with the intersection numbers recovered from the
    // candidate, for both cases
    int compared = 0;
    for (const auto& e : parameter_sweep(12).entries) {
        if (!e.feasible) continue;
        for (const auto& c : feasible_candidates(*e.srg).candidates) {
            Matrix<Rational> closed;
            try {
                closed = b1_closed_form(*e.srg, c.kase);
            } catch (const NotRational&) {
                continue;
            }
            CAPTURE(e.tag.to_string());
            CAPTURE(to_string(c.kase));
            const auto m = c.matrix();
            for (int l = 0; l < 5; ++l) {
                Rational col;
                for (int j = 0; j < 5; ++j) {
                    col += closed(j, l);
                    CHECK(closed(j, l) == p_from_eigenmatrix(m, 1, j, l));
                }
                CHECK(col == Rational(e.srg->k, 2));
            }
            ++compared;
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("certificates") {
    auto l25 = nonexistence_certificate(params_from_type(latin_tag(2, 5)));
    REQUIRE(l25.size() == 3);
    const auto& one = l25[0];
    CHECK(one.kase == SkewCase::I);
    REQUIRE(one.steps.size() >= 6);
    CHECK(one.steps[0].kind == StepKind::ForcedMultiplicity);
    CHECK(one.steps[0].holds);
    CHECK(one.steps[1].kind == StepKind::TypeForced);
    CHECK(one.steps[1].type == latin_tag(2, 5));
    for (const char* q : {"t", "s"}) {
        auto it = std::find_if(one.steps.begin(), one.steps.end(),
                               [&](const auto& s) { return s.kind == StepKind::ParityFact && s.quantity == q; });
        REQUIRE(it != one.steps.end());
        CHECK(it->holds);
        CHECK(it->even);
    }
    auto r_odd = std::find_if(one.steps.begin(), one.steps.end(),
                              [](const auto& s) { return s.kind == StepKind::ParityFact && s.quantity == "r"; });
    REQUIRE(r_odd != one.steps.end());
    CHECK(r_odd->holds);
    CHECK_FALSE(r_odd->even);
    const auto* p11 = find_step(one, StepKind::IntegralityViolation, "p_11^1");
    REQUIRE(p11 != nullptr);
    CHECK(*p11->value == Rational(3, 2));
    CHECK(one.terminal());
    CHECK(one.conclusion() == "NoAmorphousScheme");
    // case II: k1 = 8 but m2 = 16
    CHECK(find_step(l25[1], StepKind::ForcedMultiplicityFails) != nullptr);
    CHECK(find_step(l25[2], StepKind::RadicalContradiction) != nullptr);

    auto l36 = nonexistence_certificate(params_from_type(latin_tag(3, 6)));
    const auto* diff = find_step(l36[0], StepKind::IntegralityViolation, "p_12^2-p_12^3");
    REQUIRE(diff != nullptr);
    CHECK(*diff->value == Rational(-3, 2));
    auto s_parity = std::find_if(l36[0].steps.begin(), l36[0].steps.end(),
                                 [](const auto& s) { return s.kind == StepKind::ParityFact && s.quantity == "s"; });
    REQUIRE(s_parity != l36[0].steps.end());
    CHECK_FALSE(s_parity->holds);

    auto nl = nonexistence_certificate(params_from_type(negative_latin_tag(1, 4)));
    CHECK(nl[1].steps[1].type == negative_latin_tag(1, 4));
    const auto* nl11 = find_step(nl[1], StepKind::IntegralityViolation, "p_11^1");
    REQUIRE(nl11 != nullptr);
    CHECK(*nl11->value == Rational(-3, 4));
    const auto* r_half = find_step(nl[1], StepKind::IntegralityViolation, "p_12^2-p_12^3");
    REQUIRE(r_half != nullptr);
    CHECK(*r_half->value == Rational(1, 2));

    // irrational eigenvalues: forced conditions fail in cases I and II
    auto c13 = nonexistence_certificate(make_srg_params(13, 6, 2, 3));
    for (int i = 0; i < 2; ++i) {
        CHECK(c13[static_cast<std::size_t>(i)].steps[0].holds);  // m1 = k1 = 6 and m2 = k1
        CHECK(find_step(c13[static_cast<std::size_t>(i)], StepKind::ForcedMultiplicityFails) != nullptr);
    }

    for (const auto& certs : {l25, l36, nl, c13})
        for (const auto& c : certs) {
            CHECK(c.terminal());
            CHECK(replay(c));
        }

    // tampering is caught
    auto bad = l25[0];
    for (auto& s : bad.steps)
        if (s.kind == StepKind::IntegralityViolation) s.value = Rational(5, 2);
    CHECK_FALSE(replay(bad));
    auto lie = l25[1];
    lie.steps[0].holds = true;
    CHECK_FALSE(replay(lie));
    auto empty = l25[2];
    empty.steps.clear();
    CHECK_FALSE(replay(empty));
}

TEST_CASE("parameter sweep") {
    auto rep = parameter_sweep(20);
    CHECK(rep.entries.size() == 479);
    long long valid = std::count_if(rep.entries.begin(), rep.entries.end(), [](const auto& e) { return e.srg.has_value(); });
    CHECK(valid == 451);
    CHECK(rep.feasible == 265);
    CHECK(rep.certified == 265);
    CHECK(rep.survivors == 0);
    CHECK_FALSE(rep.reduction_note.empty());
    for (const auto& e : rep.entries) {
        if (!e.feasible) continue;
        CHECK(e.srg->k % 2 == 0);
        CHECK((e.srg->n - e.srg->k - 1) % 2 == 0);
        REQUIRE(e.certificates.size() == 3);
        CHECK(e.certificates[2].steps.front().kind == StepKind::RadicalContradiction);
    }
    // ordered by (type, g, v)
    for (std::size_t i = 1; i < rep.entries.size(); ++i) {
        const auto& a = rep.entries[i - 1].tag;
        const auto& b = rep.entries[i].tag;
        auto key = [](const SrgTag& t) {
            return std::tuple(static_cast<int>(t.kind), t.g, t.kind == SrgKind::Conference ? t.n : t.v);
        };
        CHECK(key(a) < key(b));
    }

    auto tiny = parameter_sweep(2);
    CHECK(tiny.feasible == 0);
    CHECK(tiny.survivors == 0);
    REQUIRE(tiny.entries.size() == 2);
    CHECK(tiny.entries[0].tag == latin_tag(1, 2));
    CHECK(tiny.entries[1].tag == latin_tag(2, 2));
    for (const auto& e : tiny.entries) CHECK_FALSE(e.reason.empty());
    CHECK_THROWS_AS(parameter_sweep(1), OutOfRange);
}

TEST_CASE("four-class reduction partition") {
    for (auto [q, e] : {std::pair{19, 6}, std::pair{31, 6}, std::pair{13, 4}, std::pair{43, 6}}) {
        auto s = cyclotomic_scheme(FiniteField(q), e);
        REQUIRE(classify_symmetry(s).kind == SymmetryKind::SkewSymmetric);
        auto part = skew_four_class_partition(s.pairing());
        CHECK(part.classes() == 4);
        CHECK_NOTHROW(check_admissible(part, s.pairing()));
        auto map = part.class_map(s.d());
        for (int b = 1; b <= 4; ++b) {
            const int c = part.blocks[static_cast<std::size_t>(b)][0];
            CHECK(map[static_cast<std::size_t>(s.pair(c))] != b);  // no block is self-paired
        }
    }
    CHECK_THROWS_AS(skew_four_class_partition(paley(7).pairing()), OutOfRange);
    CHECK_THROWS_AS(skew_four_class_partition(paley(13).pairing()), OutOfRange);
}

TEST_CASE("closed-form B_1 in the tower covers conference candidates") {
    int irrational = 0;
    for (const auto& e : parameter_sweep(20).entries) {
        if (!e.feasible) continue;
        for (const auto& c : feasible_candidates(*e.srg).candidates) {
            CAPTURE(e.tag.to_string());
            CAPTURE(to_string(c.kase));
            const auto closed = b1_closed_form_tower(*e.srg, c.kase);
            const auto m = c.matrix();
            for (int j = 0; j < 5; ++j)
                for (int l = 0; l < 5; ++l) CHECK(closed(j, l) == p_from_eigenmatrix_tower(m, 1, j, l));
            if (!e.srg->r.as_rational()) ++irrational;
        }
    }
    CHECK(irrational > 0);
    CHECK(b1_closed_form_tower(make_srg_params(13, 6, 2, 3), SkewCase::I)(1, 1) == T("(3+1*sqrt(13))/8"));
}
