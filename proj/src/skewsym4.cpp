#include "amorph/skewsym4.hpp"

#include "amorph/errors.hpp"
#include "amorph/parallel.hpp"

#include <algorithm>

namespace amorph {

namespace {

void validate(const SrgParams& p) {
    const TowerNumber zero;
    const bool ok = p.n >= 3 && p.k * (p.k - p.lambda - 1) == (p.n - p.k - 1) * p.mu && 1 + p.m1 + p.m2 == p.n &&
                    TowerNumber(p.k) + TowerNumber(p.m1) * p.r + TowerNumber(p.m2) * p.s == zero &&
                    p.t == -p.r - TowerNumber(1) && p.u == -p.s - TowerNumber(1) &&
                    p.r * p.s == TowerNumber(p.mu - p.k) && p.r + p.s == TowerNumber(p.lambda - p.mu);
    if (!ok) throw InconsistentSrg("parameters " + p.to_string() + " are not consistent");
}

Rational rational(const TowerNumber& x, const char* name) {
    auto r = x.as_rational();
    if (!r) throw NotRational(std::string(name) + " = " + x.to_string() + " is irrational");
    return *r;
}

bool is_even(const Rational& x) {
    if (!x.is_integer()) return false;
    return mpz_even_p(x.numerator().get_mpz_t()) != 0;
}

Rational entry_value(const Matrix<Rational>& b1, const std::string& entry) {
    if (entry == "p_11^1") return b1(1, 1);
    if (entry == "p_12^1-p_12^4") return b1(2, 1) - b1(2, 4);
    if (entry == "p_12^2-p_12^3") return b1(2, 2) - b1(2, 3);
    throw OutOfRange("unknown intersection entry " + entry);
}

// Names of (R, S, T, U) for the case: case II swaps r with s and t with u.
struct Roles {
    const char* r;
    const char* s;
    const char* t;
    const char* u;
};
Roles roles(SkewCase kase) {
    if (kase == SkewCase::I) return {"r", "s", "t", "u"};
    return {"s", "r", "u", "t"};
}

Rational named(const SrgParams& p, const std::string& name) {
    if (name == "r") return rational(p.r, "r");
    if (name == "s") return rational(p.s, "s");
    if (name == "t") return rational(p.t, "t");
    if (name == "u") return rational(p.u, "u");
    throw OutOfRange("unknown eigenvalue " + name);
}

bool forced_multiplicity_holds(const SrgParams& p, SkewCase kase) {
    return kase == SkewCase::I ? p.m1 == p.k : p.m2 == p.k;
}

std::optional<SrgTag> forced_type(const SrgParams& p, SkewCase kase) {
    auto r = p.r.as_rational(), s = p.s.as_rational();
    if (!r || !s) return std::nullopt;
    auto rr = r->to_int64(), ss = s->to_int64();
    if (!rr || !ss) return std::nullopt;
    return kase == SkewCase::I ? latin_tag(-*ss, *rr - *ss) : negative_latin_tag(*rr, *rr - *ss);
}

bool type_matches(const SrgParams& p, const SrgTag& type) {
    if (p.tag == type) return true;
    return std::find(p.tag.aliases.begin(), p.tag.aliases.end(), type) != p.tag.aliases.end();
}

// (Y, Z) = (sqrt(y), sqrt(z)) / sqrt(n) solves Y + Z = 1 and Y - Z = sign.
bool radical_system_forces_zero() {
    for (int sign : {1, -1}) {
        const Rational y = Rational(1 + sign, 2), z = Rational(1 - sign, 2);
        if (!(y + z == Rational(1) && y - z == Rational(sign))) return false;
        if (!(y * z).is_zero()) return false;
    }
    return true;
}

Certificate certificate_one_two(const SrgParams& p, SkewCase kase) {
    Certificate cert{p, kase, {}};
    auto add = [&](CertificateStep step) { cert.steps.push_back(std::move(step)); };
    const Roles role = roles(kase);
    const bool first = kase == SkewCase::I;

    CertificateStep fm;
    fm.kind = StepKind::ForcedMultiplicity;
    fm.claim = first ? "m1 = k1" : "k1 = m2";
    fm.holds = forced_multiplicity_holds(p, kase);
    add(fm);
    if (!fm.holds) {
        CertificateStep fail;
        fail.kind = StepKind::ForcedMultiplicityFails;
        fail.claim = first ? "m1 = " + std::to_string(p.m1) + " differs from k1 = " + std::to_string(p.k)
                           : "m2 = " + std::to_string(p.m2) + " differs from k1 = " + std::to_string(p.k);
        add(fail);
        return cert;
    }

    const auto type = forced_type(p, kase);
    CertificateStep tf;
    tf.kind = StepKind::TypeForced;
    if (!type) {
        tf.claim = std::string(first ? "L_g(v)" : "NL_g(v)") + " type needs integral eigenvalues";
        tf.holds = false;
        add(tf);
        CertificateStep fail;
        fail.kind = StepKind::ForcedMultiplicityFails;
        fail.claim = "eigenvalues r, s are irrational, so no " + std::string(first ? "Latin" : "negative Latin") +
                     " square type is possible";
        add(fail);
        return cert;
    }
    tf.type = type;
    tf.claim = type->to_string() + (first ? " with g = -s, v = r - s" : " with g = r, v = r - s");
    tf.holds = type_matches(p, *type);
    add(tf);
    if (!tf.holds) {
        CertificateStep fail;
        fail.kind = StepKind::ForcedMultiplicityFails;
        fail.claim = "parameters are not of type " + type->to_string();
        add(fail);
        return cert;
    }

    const auto b1 = b1_closed_form(p, kase);
    // t (resp. u) and s (resp. r) even from two differences of B_1 entries
    const std::pair<const char*, const char*> differences[] = {{"p_12^1-p_12^4", role.t}, {"p_12^2-p_12^3", role.s}};
    for (const auto& [entry, quantity] : differences) {
        CertificateStep pf;
        pf.kind = StepKind::ParityFact;
        pf.entry = entry;
        pf.value = entry_value(b1, entry);
        pf.quantity = quantity;
        pf.quantity_value = named(p, quantity);
        pf.even = true;
        pf.holds = is_even(*pf.quantity_value);
        pf.claim = std::string(quantity) + " is even since " + entry + " = " + quantity + "/2 = " + pf.value->to_string();
        add(pf);
        if (!pf.value->is_integer()) {
            CertificateStep iv;
            iv.kind = StepKind::IntegralityViolation;
            iv.entry = entry;
            iv.value = pf.value;
            iv.claim = std::string(entry) + " = " + pf.value->to_string() + " is not an integer";
            add(iv);
        }
    }

    // r (resp. s) odd from r + t + 1 = 0
    CertificateStep odd;
    odd.kind = StepKind::ParityFact;
    odd.quantity = role.r;
    odd.quantity_value = named(p, role.r);
    odd.even = false;
    odd.holds = odd.quantity_value->is_integer() && !is_even(*odd.quantity_value);
    odd.entry = std::string(role.r) + "+" + role.t + "+1=0";
    odd.claim = std::string(role.r) + " is odd since " + role.r + " + " + role.t + " + 1 = 0";
    add(odd);

    CertificateStep p11;
    p11.kind = StepKind::IntegralityViolation;
    p11.entry = "p_11^1";
    p11.value = entry_value(b1, "p_11^1");
    p11.claim = std::string("p_11^1 = (lambda + ") + role.r + ")/4 = (" + role.s + "(" + role.s + "+2) + 2" + role.r +
                ")/4 = " + p11.value->to_string();
    if (!p11.value->is_integer()) {
        p11.claim += " is not an integer";
        add(p11);
    }
    return cert;
}

Certificate certificate_three(const SrgParams& p) {
    Certificate cert{p, SkewCase::III, {}};
    CertificateStep step;
    step.kind = StepKind::RadicalContradiction;
    step.claim =
        "sqrt(-y) + sqrt(-z) = sqrt(-n) from the fusion {R1+R2, R3+R4} and sqrt(-y) - sqrt(-z) = +-sqrt(-n) from "
        "{R1+R3, R2+R4} force y = 0 or z = 0, but y, z > 0";
    step.holds = radical_system_forces_zero();
    cert.steps.push_back(step);
    return cert;
}

bool replay_step(const SrgParams& p, SkewCase kase, const CertificateStep& step) {
    switch (step.kind) {
        case StepKind::ForcedMultiplicity:
            return step.holds == forced_multiplicity_holds(p, kase);
        case StepKind::TypeForced: {
            const auto type = forced_type(p, kase);
            if (!type) return !step.holds && !step.type;
            return step.type == type && step.holds == type_matches(p, *type);
        }
        case StepKind::ForcedMultiplicityFails: {
            if (!forced_multiplicity_holds(p, kase)) return true;
            const auto type = forced_type(p, kase);
            return !type || !type_matches(p, *type);
        }
        case StepKind::ParityFact: {
            const Rational q = named(p, step.quantity);
            if (!step.quantity_value || !(q == *step.quantity_value)) return false;
            if (step.holds != (q.is_integer() && is_even(q) == step.even)) return false;
            if (!step.value) return true;  // derived from r + t + 1 = 0
            return entry_value(b1_closed_form(p, kase), step.entry) == *step.value && *step.value * Rational(2) == q;
        }
        case StepKind::IntegralityViolation:
            return step.value && entry_value(b1_closed_form(p, kase), step.entry) == *step.value &&
                   !step.value->is_integer();
        case StepKind::RadicalContradiction:
            return kase == SkewCase::III && step.holds && radical_system_forces_zero();
    }
    return false;
}

}  // namespace

std::string to_string(SkewCase c) {
    switch (c) {
        case SkewCase::I: return "I";
        case SkewCase::II: return "II";
        case SkewCase::III: return "III";
    }
    return "?";
}

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::ForcedMultiplicity: return "ForcedMultiplicity";
        case StepKind::TypeForced: return "TypeForced";
        case StepKind::ParityFact: return "ParityFact";
        case StepKind::IntegralityViolation: return "IntegralityViolation";
        case StepKind::RadicalContradiction: return "RadicalContradiction";
        case StepKind::ForcedMultiplicityFails: return "ForcedMultiplicityFails";
    }
    return "?";
}

Matrix<TowerNumber> SkewCandidate::matrix() const {
    const TowerNumber h1(Rational(srg.k, 2)), h2(Rational(srg.n - srg.k - 1, 2));
    const auto rc = rho.complex_conjugate(), sc = sigma.complex_conjugate();
    const auto tc = tau.complex_conjugate(), oc = omega.complex_conjugate();
    return {{1, h1, h2, h2, h1}, {1, rho, tau, tc, rc}, {1, sigma, omega, oc, sc}, {1, sc, oc, omega, sigma},
            {1, rc, tc, tau, rho}};
}

std::vector<long long> SkewCandidate::multiplicities() const {
    return {1, srg.m1 / 2, srg.m2 / 2, srg.m2 / 2, srg.m1 / 2};
}

SkewCandidate make_candidate(const SrgParams& srg, SkewCase kase) {
    validate(srg);
    if (kase == SkewCase::III) throw OutOfRange("case III is a family; use case3_family");
    const long long n = srg.n, k1 = srg.k, k2 = srg.n - srg.k - 1;
    const TowerNumber half(Rational(1, 2));
    auto root = [&](long long num, long long den) { return TowerNumber::sqrt(TowerNumber(Rational(-num, den))); };
    SkewCandidate c;
    c.srg = srg;
    c.kase = kase;
    if (kase == SkewCase::I) {
        c.sigma = srg.s * half;
        c.tau = srg.t * half;
        c.rho = (srg.r + root(n * k1, srg.m1)) * half;
        c.omega = (srg.u + root(n * k2, srg.m2)) * half;
    } else {
        c.rho = srg.r * half;
        c.omega = srg.u * half;
        c.sigma = (srg.s + root(n * k1, srg.m2)) * half;
        c.tau = (srg.t + root(n * k2, srg.m1)) * half;
    }
    return c;
}

CandidateSet feasible_candidates(const SrgParams& srg) {
    validate(srg);
    CandidateSet out;
    const long long k1 = srg.k, k2 = srg.n - srg.k - 1;
    if (k1 % 2 != 0 || k2 % 2 != 0) {
        out.rejected.push_back("valencies k1 = " + std::to_string(k1) + ", k2 = " + std::to_string(k2) +
                               " must both be even");
        return out;
    }
    if (srg.m1 % 2 != 0 || srg.m2 % 2 != 0) {
        out.rejected.push_back("multiplicities m1 = " + std::to_string(srg.m1) + ", m2 = " + std::to_string(srg.m2) +
                               " must both be even");
        return out;
    }
    for (SkewCase kase : {SkewCase::I, SkewCase::II}) {
        SkewCandidate c;
        try {
            c = make_candidate(srg, kase);
            const auto m = multiplicities_from_P(c.matrix());
            bool integral = true;
            const auto expected = c.multiplicities();
            for (std::size_t j = 0; j < m.size(); ++j) integral = integral && m[j] == Rational(expected[j]);
            if (!integral) {
                out.rejected.push_back("case " + to_string(kase) + ": multiplicities differ from (1, m1/2, m2/2)");
                continue;
            }
        } catch (const IncompatibleTower& e) {
            out.rejected.push_back("case " + to_string(kase) + ": entries leave the supported tower: " + e.what());
            continue;
        }
        out.candidates.push_back(std::move(c));
    }
    out.case3_family = true;
    return out;
}

std::optional<Case3Point> case3_family(const SrgParams& srg, const Rational& y) {
    if (y.sign() <= 0) throw OutOfRange("case III needs y > 0");
    const Rational n(srg.n), k1(srg.k), k2(srg.n - srg.k - 1), m1(srg.m1), m2(srg.m2);
    Case3Point pt;
    pt.y = y;
    pt.z = k2 * (n / m1 - y / k1);
    if (pt.z.sign() <= 0) return std::nullopt;
    const Rational denom = m2 * (k1 * pt.z + k2 * y);
    pt.c = n * k2 * k2 * y / denom;
    pt.b = n * k1 * k1 * pt.z / denom;
    // the three defining equations, the last one squared
    const bool ok = pt.y / k1 + pt.z / k2 == n / m1 && pt.b / k1 + pt.c / k2 == n / m2 &&
                    pt.b * pt.y / (k1 * k1) == pt.c * pt.z / (k2 * k2) && pt.b.sign() > 0 && pt.c.sign() > 0;
    if (!ok) return std::nullopt;
    return pt;
}

Matrix<std::complex<double>> case3_numeric_matrix(const SrgParams& srg, const Case3Point& pt) {
    using C = std::complex<double>;
    auto root = [](const Rational& x) { return C(0, std::sqrt(x.to_double())); };  // sqrt(-x), x > 0
    const C r = srg.r.to_complex(), s = srg.s.to_complex(), t = srg.t.to_complex(), u = srg.u.to_complex();
    const C rho = (r + root(pt.y)) / 2.0, tau = (t + root(pt.z)) / 2.0;
    const C sigma = (s + root(pt.b)) / 2.0, omega = (u - root(pt.c)) / 2.0;
    const C h1 = static_cast<double>(srg.k) / 2, h2 = static_cast<double>(srg.n - srg.k - 1) / 2;
    return {{1, h1, h2, h2, h1},
            {1, rho, tau, std::conj(tau), std::conj(rho)},
            {1, sigma, omega, std::conj(omega), std::conj(sigma)},
            {1, std::conj(sigma), std::conj(omega), omega, sigma},
            {1, std::conj(rho), std::conj(tau), tau, rho}};
}

namespace {

template <class F>
Matrix<F> b1_display(const SrgParams& srg, SkewCase kase, const F& r, const F& s, const F& t, const F& u) {
    const F& R = kase == SkewCase::I ? r : s;
    const F& S = kase == SkewCase::I ? s : r;
    const F& T = kase == SkewCase::I ? t : u;
    const F l(srg.lambda), mu(srg.mu), k1(srg.k), k2(srg.n - srg.k - 1);
    const F q(Rational(1, 4)), one(1), zero(0), four(4);

    const F a11 = (l + R) * q;
    const F a12 = k1 * (k1 - l - one - T) / (four * k2);
    const F a42 = k1 * (k1 - l - one + T) / (four * k2);
    const F plus_t = (k1 - l - one + T) * q, minus_t = (k1 - l - one - T) * q;
    const F plus_s = (k1 - mu + S) * q, minus_s = (k1 - mu - S) * q;
    return {{zero, one, zero, zero, zero},
            {zero, a11, a12, a12, (l - F(3) * R) * q},
            {zero, plus_t, plus_s, minus_s, minus_t},
            {zero, plus_t, minus_s, plus_s, minus_t},
            {k1 / F(2), a11, a42, a42, a11}};
}

}  // namespace

Matrix<Rational> b1_closed_form(const SrgParams& srg, SkewCase kase) {
    if (kase == SkewCase::III) throw OutOfRange("the closed form covers cases I and II");
    return b1_display(srg, kase, rational(srg.r, "r"), rational(srg.s, "s"), rational(srg.t, "t"),
                      rational(srg.u, "u"));
}

Matrix<TowerNumber> b1_closed_form_tower(const SrgParams& srg, SkewCase kase) {
    if (kase == SkewCase::III) throw OutOfRange("the closed form covers cases I and II");
    return b1_display(srg, kase, srg.r, srg.s, srg.t, srg.u);
}

bool Certificate::terminal() const {
    return std::any_of(steps.begin(), steps.end(), [](const CertificateStep& s) {
        return s.kind == StepKind::IntegralityViolation || s.kind == StepKind::ForcedMultiplicityFails ||
               (s.kind == StepKind::RadicalContradiction && s.holds);
    });
}

std::vector<Certificate> nonexistence_certificate(const SrgParams& srg) {
    validate(srg);
    return {certificate_one_two(srg, SkewCase::I), certificate_one_two(srg, SkewCase::II), certificate_three(srg)};
}

bool replay(const Certificate& cert) {
    try {
        validate(cert.srg);
        for (const auto& step : cert.steps) {
            if (!replay_step(cert.srg, cert.kase, step)) return false;
        }
    } catch (const Error&) {
        return false;
    }
    return cert.terminal();
}

SweepReport parameter_sweep(long long vmax) {
    if (vmax < 2) throw OutOfRange("sweep needs vmax >= 2");
    std::vector<SrgTag> tags;
    for (long long g = 1; g <= vmax; ++g)
        for (long long v = std::max(2LL, g); v <= vmax; ++v) tags.push_back(latin_tag(g, v));
    for (long long g = 1; g + 2 <= vmax; ++g)
        for (long long v = g + 2; v <= vmax; ++v) tags.push_back(negative_latin_tag(g, v));
    for (long long n = 5; n <= vmax * vmax; n += 4) tags.push_back(SrgTag{SrgKind::Conference, 0, 0, n, {}});

    SweepReport report;
    report.vmax = vmax;
    report.entries.resize(tags.size());
    parallel_for(tags.size(), [&](std::size_t i) {
        SweepEntry& e = report.entries[i];
        e.tag = tags[i];
        try {
            if (e.tag.kind == SrgKind::Conference) {
                const long long n = e.tag.n;
                e.srg = make_srg_params(n, (n - 1) / 2, (n - 5) / 4, (n - 1) / 4);
            } else {
                e.srg = params_from_type(e.tag);
            }
        } catch (const Error& err) {
            e.reason = err.what();
            return;
        }
        const auto set = feasible_candidates(*e.srg);
        if (!set.case3_family) {
            e.reason = set.rejected.empty() ? "infeasible" : set.rejected.front();
            return;
        }
        e.feasible = true;
        e.certificates = nonexistence_certificate(*e.srg);
        e.certified = std::all_of(e.certificates.begin(), e.certificates.end(),
                                  [](const Certificate& c) { return c.terminal() && replay(c); });
    });
    for (const auto& e : report.entries) {
        report.feasible += e.feasible ? 1 : 0;
        report.certified += e.certified ? 1 : 0;
        report.survivors += e.feasible && !e.certified ? 1 : 0;
    }
    report.reduction_note =
        "A skew-symmetric amorphous scheme with more than 4 classes fuses, via {0}, {a1}, {a1'}, {a2..}, {a2'..}, to a "
        "skew-symmetric 4-class scheme that is again amorphous, so the 4-class certificates cover every class count.";
    return report;
}

AdmissiblePartition skew_four_class_partition(const std::vector<int>& pairing) {
    const int d = static_cast<int>(pairing.size()) - 1;
    std::vector<int> firsts;
    for (int c = 1; c <= d; ++c) {
        if (pairing[static_cast<std::size_t>(c)] == c) throw OutOfRange("class " + std::to_string(c) + " is symmetric");
        if (pairing[static_cast<std::size_t>(c)] > c) firsts.push_back(c);
    }
    if (firsts.size() < 2) throw OutOfRange("need at least two pairs of classes");
    std::vector<int> a = {firsts[0]}, ap = {pairing[static_cast<std::size_t>(firsts[0])]};
    std::vector<int> b, bp;
    for (std::size_t i = 1; i < firsts.size(); ++i) {
        b.push_back(firsts[i]);
        bp.push_back(pairing[static_cast<std::size_t>(firsts[i])]);
    }
    AdmissiblePartition part;
    part.blocks = {{0}, a, ap, b, bp};
    for (auto& block : part.blocks) std::sort(block.begin(), block.end());
    std::sort(part.blocks.begin(), part.blocks.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
    check_admissible(part, pairing);
    return part;
}

}  // namespace amorph
