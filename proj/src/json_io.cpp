#include "amorph/json_io.hpp"

#include "amorph/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace amorph::io {

namespace {

std::size_t idx(long long i) { return static_cast<std::size_t>(i); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
    return *it;
}

long long integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

const std::string& text(const Json& j, const char* what) {
    if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
    return j.get_ref<const std::string&>();
}

bool boolean(const Json& j, const char* what) {
    if (!j.is_boolean()) throw FormatError(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
    return j;
}

TowerNumber tower(const Json& j, const char* what) {
    try {
        return TowerNumber::parse(text(j, what));
    } catch (const ParseError& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

Rational rational(const Json& j, const char* what) {
    auto r = tower(j, what).as_rational();
    if (!r) throw FormatError(std::string(what) + " must be rational");
    return *r;
}

SkewCase case_from_string(const std::string& s) {
    for (auto c : {SkewCase::I, SkewCase::II, SkewCase::III})
        if (to_string(c) == s) return c;
    throw FormatError("unknown case '" + s + "'");
}

StepKind step_kind_from_string(const std::string& s) {
    for (auto k : {StepKind::ForcedMultiplicity, StepKind::TypeForced, StepKind::ParityFact,
                   StepKind::IntegralityViolation, StepKind::RadicalContradiction, StepKind::ForcedMultiplicityFails})
        if (to_string(k) == s) return k;
    throw FormatError("unknown step kind '" + s + "'");
}

}  // namespace

Json parse_json(std::string_view input) {
    try {
        return Json::parse(input.begin(), input.end());
    } catch (const Json::parse_error& e) {
        // e.byte is 1-based and points at the byte that failed
        const std::size_t at = std::min(e.byte == 0 ? 0 : e.byte - 1, input.size());
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < at; ++i) {
            if (input[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        // nlohmann prefixes its own position; keep only the description
        if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
        throw ParseError("malformed JSON (" + what + ")", at, line, column);
    }
}

Json scheme_to_json(const ColorMatrix& m) {
    Json colors = Json::array();
    for (int x = 0; x < m.n(); ++x) {
        Json row = Json::array();
        for (int y = 0; y < m.n(); ++y) row.push_back(m(x, y));
        colors.push_back(std::move(row));
    }
    return Json{{"n", m.n()}, {"d", m.d()}, {"colors", std::move(colors)}};
}

std::string write_scheme(const ColorMatrix& m) { return scheme_to_json(m).dump(); }

ColorMatrix colors_from_json(const Json& j) {
    const long long n = integer(field(j, "n"), "n");
    const long long d = integer(field(j, "d"), "d");
    const Json& rows = array(field(j, "colors"), "colors");
    if (n < 2 || n > kMaxPoints) {
        throw InvalidColorMatrix("n = " + std::to_string(n) + " is outside 2.." + std::to_string(kMaxPoints));
    }
    if (d < 1 || d > kMaxClasses) {
        throw InvalidColorMatrix("d = " + std::to_string(d) + " is outside 1.." + std::to_string(kMaxClasses));
    }
    if (rows.size() != idx(n)) throw InvalidColorMatrix("colors has " + std::to_string(rows.size()) + " rows, n = " + std::to_string(n));
    std::vector<int> colors;
    colors.reserve(idx(n * n));
    for (long long x = 0; x < n; ++x) {
        const Json& row = array(rows[idx(x)], "colors row");
        if (row.size() != idx(n)) {
            throw InvalidColorMatrix("colors row " + std::to_string(x) + " has " + std::to_string(row.size()) + " entries");
        }
        for (long long y = 0; y < n; ++y) {
            const long long c = integer(row[idx(y)], "color");
            if (c < 0 || c > d) {
                throw InvalidColorMatrix("colors[" + std::to_string(x) + "][" + std::to_string(y) + "] = " +
                                         std::to_string(c) + " is outside 0.." + std::to_string(d));
            }
            colors.push_back(static_cast<int>(c));
        }
    }
    return ColorMatrix(static_cast<int>(n), static_cast<int>(d), std::move(colors));
}

AssociationScheme read_scheme(std::string_view input) { return build_scheme(colors_from_json(parse_json(input))); }

std::string format_complex(std::complex<double> z) {
    auto num = [](double v) {
        if (v == 0) v = 0;  // drop the sign of -0
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    if (z.imag() == 0) return num(z.real());
    if (z.real() == 0) return num(z.imag()) + "i";
    std::string im = num(z.imag());
    return num(z.real()) + (im[0] == '-' ? "" : "+") + im + "i";
}

std::complex<double> parse_complex(std::string_view input) {
    const std::string s(input);
    auto number = [&](const std::string& part, std::size_t offset) {
        if (part.empty()) throw ParseError("expected number", offset);
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size()) throw ParseError("malformed number", offset);
        return v;
    };
    if (s.empty() || s.back() != 'i') return {number(s, 0), 0.0};
    // split at the last sign that is not an exponent sign or the leading one
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size() - 1; i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, number(s.substr(0, s.size() - 1), 0)};
    return {number(s.substr(0, split), 0), number(s.substr(split, s.size() - 1 - split), split)};
}

Json eigen_to_json(const Eigenmatrix& p) {
    const bool exact = p.mode == EigenMode::Exact;
    Json rows = Json::array();
    for (int i = 0; i < p.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < p.size(); ++j) {
            row.push_back(exact ? p.exact(idx(i), idx(j)).to_string() : format_complex(p.value(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"mode", exact ? "exact" : "numeric"},
                {"n", p.n()},
                {"d", p.size() - 1},
                {"P", std::move(rows)},
                {"multiplicities", p.multiplicities}};
}

Eigenmatrix eigen_from_json(const Json& j) {
    const std::string& mode = text(field(j, "mode"), "mode");
    if (mode != "exact" && mode != "numeric") throw FormatError("mode must be \"exact\" or \"numeric\"");
    const Json& rows = array(field(j, "P"), "P");
    const std::size_t m = rows.size();
    if (m == 0) throw FormatError("P is empty");
    std::vector<long long> mult;
    for (const auto& v : array(field(j, "multiplicities"), "multiplicities")) mult.push_back(integer(v, "multiplicity"));
    if (mult.size() != m) throw FormatError("multiplicities do not match the size of P");

    auto entry = [&](std::size_t i, std::size_t c) -> const Json& {
        const Json& row = array(rows[i], "P row");
        if (row.size() != m) throw FormatError("P is not square");
        return row[c];
    };
    Eigenmatrix out;
    if (mode == "exact") {
        Matrix<TowerNumber> p(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = 0; c < m; ++c) p(i, c) = tower(entry(i, c), "P entry");
        out = make_exact_eigenmatrix(std::move(p));
        if (out.multiplicities != mult) throw FormatError("multiplicities disagree with the entries of P");
    } else {
        out.mode = EigenMode::Numeric;
        out.numeric = Matrix<std::complex<double>>(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = 0; c < m; ++c) {
                try {
                    out.numeric(i, c) = parse_complex(text(entry(i, c), "P entry"));
                } catch (const ParseError& e) {
                    throw FormatError(std::string("P entry: ") + e.what());
                }
            }
        out.multiplicities = std::move(mult);
    }
    return out;
}

Json partition_to_json(const AdmissiblePartition& part) { return Json(part.blocks); }

AdmissiblePartition partition_from_json(const Json& j) {
    AdmissiblePartition part;
    for (const auto& block : array(j, "partition")) {
        std::vector<int> cls;
        for (const auto& c : array(block, "block")) cls.push_back(static_cast<int>(integer(c, "class")));
        part.blocks.push_back(std::move(cls));
    }
    return part;
}

Json witness_to_json(const AxiomIIIWitness& w) {
    return Json{{"i", w.i},   {"j", w.j},   {"k", w.k},         {"x", w.x},          {"y", w.y},
                {"x2", w.x2}, {"y2", w.y2}, {"count", w.count}, {"count2", w.count2}};
}

AxiomIIIWitness witness_from_json(const Json& j) {
    auto get = [&](const char* key) { return static_cast<int>(integer(field(j, key), key)); };
    AxiomIIIWitness w;
    w.i = get("i");
    w.j = get("j");
    w.k = get("k");
    w.x = get("x");
    w.y = get("y");
    w.x2 = get("x2");
    w.y2 = get("y2");
    w.count = integer(field(j, "count"), "count");
    w.count2 = integer(field(j, "count2"), "count2");
    return w;
}

Json verdict_to_json(const PartitionVerdict& v) {
    return Json{{"partition", partition_to_json(v.partition)},
                {"accepted", v.accepted},
                {"witness", v.witness ? witness_to_json(*v.witness) : Json()}};
}

PartitionVerdict verdict_from_json(const Json& j) {
    PartitionVerdict v;
    v.partition = partition_from_json(field(j, "partition"));
    v.accepted = boolean(field(j, "accepted"), "accepted");
    const Json& w = field(j, "witness");
    if (!w.is_null()) v.witness = witness_from_json(w);
    return v;
}

SrgTag parse_tag(std::string_view input) {
    const std::string s(input);
    if (s == "Other") return {};
    auto fail = [&]() -> SrgTag { throw FormatError("unrecognized graph type '" + s + "'"); };
    auto parse_number = [&](std::size_t& pos) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s.substr(pos), &used);
        } catch (const std::exception&) {
            fail();
        }
        pos += used;
        return v;
    };
    auto expect = [&](std::size_t& pos, std::string_view what) {
        if (s.compare(pos, what.size(), what) != 0) fail();
        pos += what.size();
    };
    auto simple = [&](std::size_t& pos) {
        SrgKind kind;
        if (s.compare(pos, 2, "L_") == 0) {
            kind = SrgKind::LatinSquare;
            pos += 2;
        } else if (s.compare(pos, 3, "NL_") == 0) {
            kind = SrgKind::NegativeLatinSquare;
            pos += 3;
        } else {
            return fail();
        }
        const long long g = parse_number(pos);
        expect(pos, "(");
        const long long v = parse_number(pos);
        expect(pos, ")");
        return kind == SrgKind::LatinSquare ? latin_tag(g, v) : negative_latin_tag(g, v);
    };
    std::size_t pos = 0;
    if (s.compare(0, 11, "Conference(") == 0) {
        pos = 11;
        SrgTag tag{SrgKind::Conference, 0, 0, parse_number(pos), {}};
        expect(pos, ")");
        while (pos < s.size()) {
            expect(pos, " = ");
            tag.aliases.push_back(simple(pos));
        }
        return tag;
    }
    SrgTag tag = simple(pos);
    if (pos != s.size()) fail();
    return tag;
}

Json srg_to_json(const SrgParams& p) {
    return Json{{"n", p.n},
                {"k", p.k},
                {"lambda", p.lambda},
                {"mu", p.mu},
                {"r", p.r.to_string()},
                {"s", p.s.to_string()},
                {"t", p.t.to_string()},
                {"u", p.u.to_string()},
                {"m1", p.m1},
                {"m2", p.m2},
                {"type", p.tag.to_string()}};
}

SrgParams srg_from_json(const Json& j) {
    auto get = [&](const char* key) { return integer(field(j, key), key); };
    SrgParams p = make_srg_params(get("n"), get("k"), get("lambda"), get("mu"));
    // derived fields are optional, but must agree when present
    auto agree = [&](const char* key, bool ok) {
        if (!ok) throw FormatError(std::string("field '") + key + "' disagrees with (n, k, lambda, mu)");
    };
    if (j.contains("r")) agree("r", tower(j["r"], "r") == p.r);
    if (j.contains("s")) agree("s", tower(j["s"], "s") == p.s);
    if (j.contains("t")) agree("t", tower(j["t"], "t") == p.t);
    if (j.contains("u")) agree("u", tower(j["u"], "u") == p.u);
    if (j.contains("m1")) agree("m1", get("m1") == p.m1);
    if (j.contains("m2")) agree("m2", get("m2") == p.m2);
    if (j.contains("type")) agree("type", parse_tag(text(j["type"], "type")) == p.tag);
    return p;
}

Json certificate_to_json(const Certificate& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json step{{"kind", to_string(s.kind)}, {"claim", s.claim}, {"holds", s.holds}};
        if (!s.entry.empty()) step["entry"] = s.entry;
        if (s.value) step["value"] = s.value->to_string();
        if (!s.quantity.empty()) {
            step["quantity"] = s.quantity;
            if (s.quantity_value) step["quantity_value"] = s.quantity_value->to_string();
            step["even"] = s.even;
        }
        if (s.type) step["type"] = s.type->to_string();
        steps.push_back(std::move(step));
    }
    return Json{{"srg", srg_to_json(c.srg)},
                {"case", to_string(c.kase)},
                {"steps", std::move(steps)},
                {"conclusion", c.conclusion()}};
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.srg = srg_from_json(field(j, "srg"));
    c.kase = case_from_string(text(field(j, "case"), "case"));
    for (const auto& s : array(field(j, "steps"), "steps")) {
        CertificateStep step;
        step.kind = step_kind_from_string(text(field(s, "kind"), "kind"));
        if (s.contains("claim")) step.claim = text(s["claim"], "claim");
        step.holds = boolean(field(s, "holds"), "holds");
        if (s.contains("entry")) step.entry = text(s["entry"], "entry");
        if (s.contains("value")) step.value = rational(s["value"], "value");
        if (s.contains("quantity")) step.quantity = text(s["quantity"], "quantity");
        if (s.contains("quantity_value")) step.quantity_value = rational(s["quantity_value"], "quantity_value");
        if (s.contains("even")) step.even = boolean(s["even"], "even");
        if (s.contains("type")) step.type = parse_tag(text(s["type"], "type"));
        c.steps.push_back(std::move(step));
    }
    return c;
}

Json sweep_to_json(const SweepReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json certs = Json::array();
        for (const auto& c : e.certificates) certs.push_back(certificate_to_json(c));
        entries.push_back(Json{{"type", e.tag.to_string()},
                               {"srg", e.srg ? srg_to_json(*e.srg) : Json()},
                               {"feasible", e.feasible},
                               {"reason", e.reason},
                               {"certified", e.certified},
                               {"certificates", std::move(certs)}});
    }
    return Json{{"vmax", report.vmax},
                {"entries", std::move(entries)},
                {"feasible", report.feasible},
                {"certified", report.certified},
                {"survivors", report.survivors},
                {"reduction_note", report.reduction_note}};
}

SweepReport sweep_from_json(const Json& j) {
    SweepReport report;
    report.vmax = integer(field(j, "vmax"), "vmax");
    for (const auto& e : array(field(j, "entries"), "entries")) {
        SweepEntry entry;
        entry.tag = parse_tag(text(field(e, "type"), "type"));
        if (!field(e, "srg").is_null()) entry.srg = srg_from_json(e["srg"]);
        entry.feasible = boolean(field(e, "feasible"), "feasible");
        entry.reason = text(field(e, "reason"), "reason");
        entry.certified = boolean(field(e, "certified"), "certified");
        for (const auto& c : array(field(e, "certificates"), "certificates")) {
            entry.certificates.push_back(certificate_from_json(c));
        }
        report.entries.push_back(std::move(entry));
    }
    report.feasible = static_cast<int>(integer(field(j, "feasible"), "feasible"));
    report.certified = static_cast<int>(integer(field(j, "certified"), "certified"));
    report.survivors = static_cast<int>(integer(field(j, "survivors"), "survivors"));
    report.reduction_note = text(field(j, "reduction_note"), "reduction_note");
    return report;
}

}  // namespace amorph::io
