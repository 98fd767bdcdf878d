#include "amorph/cli.hpp"

#include "amorph/errors.hpp"
#include "amorph/families.hpp"
#include "amorph/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace amorph::cli {

namespace {

using io::Json;

// A file argument that could not be read.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    bool quiet = false;

    void progress(const std::string& line) const {
        if (!quiet) err << line << '\n';
    }
};

std::string slurp(const Context& ctx, const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << ctx.in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

std::string join(const std::vector<long long>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
    return join(std::vector<long long>(v.begin(), v.end()), sep);
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line = " ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += " " + std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        out << line << '\n';
    }
}

std::string describe(const AxiomIIIWitness& w) {
    return "p^" + std::to_string(w.k) + "_{" + std::to_string(w.i) + "," + std::to_string(w.j) + "} = " +
           std::to_string(w.count) + " at (" + std::to_string(w.x) + "," + std::to_string(w.y) + ") but " +
           std::to_string(w.count2) + " at (" + std::to_string(w.x2) + "," + std::to_string(w.y2) + ")";
}

Json symmetry_json(const SymmetryProfile& sp) {
    return Json{{"kind", to_string(sp.kind)}, {"theta", sp.theta}, {"phi", sp.phi}};
}

int verify(const Context& ctx, const std::string& path) {
    const std::string text = slurp(ctx, path);
    try {
        const auto s = io::read_scheme(text);
        const auto sp = classify_symmetry(s);
        const auto comm = is_commutative(s);
        if (ctx.json) {
            ctx.out << Json{{"valid", true},
                            {"n", s.n()},
                            {"d", s.d()},
                            {"pairing", s.pairing()},
                            {"valencies", s.valencies()},
                            {"symmetry", symmetry_json(sp)},
                            {"commutative", comm.commutative}}
                           .dump()
                    << '\n';
        } else {
            ctx.out << "association scheme: n=" << s.n() << " d=" << s.d() << '\n'
                    << "pairing: " << join(s.pairing()) << '\n'
                    << "valencies: " << join(s.valencies()) << '\n'
                    << "symmetry: " << to_string(sp.kind) << " (theta=" << sp.theta << ", phi=" << sp.phi << ")\n"
                    << "commutative: " << (comm.commutative ? "yes" : "no");
            if (comm.violation) {
                const auto [i, j, k] = *comm.violation;
                ctx.out << " (p^" << k << "_{" << i << "," << j << "} != p^" << k << "_{" << j << "," << i << "})";
            }
            ctx.out << '\n';
        }
        return Success;
    } catch (const AxiomIIViolation& e) {
        if (ctx.json) {
            ctx.out << Json{{"valid", false}, {"axiom", "ii"}, {"class", e.cls()}, {"error", e.what()}}.dump() << '\n';
        } else {
            ctx.out << "not an association scheme: " << e.what() << '\n';
        }
    } catch (const AxiomIIIViolation& e) {
        if (ctx.json) {
            ctx.out << Json{{"valid", false}, {"axiom", "iii"}, {"witness", io::witness_to_json(e.witness())},
                            {"error", e.what()}}
                           .dump()
                    << '\n';
        } else {
            ctx.out << "not an association scheme: " << e.what() << '\n';
        }
    } catch (const InvalidColorMatrix& e) {
        if (ctx.json) {
            ctx.out << Json{{"valid", false}, {"axiom", "colors"}, {"error", e.what()}}.dump() << '\n';
        } else {
            ctx.out << "not an association scheme: " << e.what() << '\n';
        }
    }
    return Rejected;
}

int eigen(const Context& ctx, const std::string& path, double tol) {
    const auto s = io::read_scheme(slurp(ctx, path));
    EigenOptions opts;
    opts.tol = tol;
    const auto p = eigenmatrix(s, opts);
    if (ctx.json) {
        ctx.out << io::eigen_to_json(p).dump() << '\n';
        return Success;
    }
    const bool exact = p.mode == EigenMode::Exact;
    ctx.out << "mode: " << (exact ? "exact" : "numeric") << '\n' << "P:\n";
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < p.size(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < p.size(); ++j) {
            row.push_back(exact ? p.exact(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_string()
                                : io::format_complex(p.value(i, j)));
        }
        rows.push_back(std::move(row));
    }
    print_table(ctx.out, rows);
    ctx.out << "multiplicities: " << join(p.multiplicities) << '\n';
    return Success;
}

int fusions(const Context& ctx, const std::string& path, bool count_only, bool check) {
    const auto s = io::read_scheme(slurp(ctx, path));
    const auto parts = enumerate_admissible(s.d(), s.pairing());
    if (count_only) {
        if (ctx.json) {
            ctx.out << Json{{"d", s.d()}, {"count", parts.size()}}.dump() << '\n';
        } else {
            ctx.out << parts.size() << '\n';
        }
        return Success;
    }
    std::optional<Eigenmatrix> p;
    if (check && s.commutative()) p = eigenmatrix(s);
    Json list = Json::array();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (check && !ctx.quiet && parts.size() >= 1000 && i % 1000 == 0) {
            ctx.progress("checked " + std::to_string(i) + " of " + std::to_string(parts.size()));
        }
        if (!check) {
            if (ctx.json) {
                list.push_back(io::partition_to_json(parts[i]));
            } else {
                ctx.out << parts[i].to_string() << '\n';
            }
            continue;
        }
        const auto comb = fuse_combinatorial(s, parts[i]);
        const PartitionVerdict v{parts[i], comb.accepted, comb.witness};
        std::optional<bool> spectral;
        if (p) spectral = check_fusion_spectral(*p, parts[i]).accepted;
        if (ctx.json) {
            Json j = io::verdict_to_json(v);
            if (spectral) j["spectral"] = *spectral;
            list.push_back(std::move(j));
        } else {
            ctx.out << parts[i].to_string() << "  " << (v.accepted ? "accepted" : "rejected");
            if (spectral) ctx.out << "  spectral " << (*spectral ? "accepted" : "rejected");
            if (v.witness) ctx.out << "  " << describe(*v.witness);
            ctx.out << '\n';
        }
    }
    if (ctx.json) {
        ctx.out << Json{{"d", s.d()}, {"count", parts.size()}, {check ? "verdicts" : "partitions", std::move(list)}}.dump()
                << '\n';
    } else {
        ctx.out << parts.size() << " admissible partitions\n";
    }
    return Success;
}

int amorphous(const Context& ctx, const std::string& path, bool full, bool expect) {
    const auto s = io::read_scheme(slurp(ctx, path));
    ctx.progress("testing " + std::to_string(enumerate_admissible(s.d(), s.pairing()).size()) +
                 " admissible partitions");
    const auto report = is_amorphous(s, full);
    if (ctx.json) {
        Json verdicts = Json::array();
        for (const auto& v : report.verdicts) verdicts.push_back(io::verdict_to_json(v));
        ctx.out << Json{{"amorphous", report.amorphous},
                        {"symmetry", symmetry_json(classify_symmetry(s))},
                        {"verdicts", std::move(verdicts)}}
                       .dump()
                << '\n';
    } else {
        const auto sp = classify_symmetry(s);
        ctx.out << "symmetry: " << to_string(sp.kind) << " (theta=" << sp.theta << ", phi=" << sp.phi << ")\n"
                << "amorphous: " << (report.amorphous ? "yes" : "no") << '\n';
        for (const auto& v : report.verdicts) {
            if (full || !v.accepted) {
                ctx.out << v.partition.to_string() << "  " << (v.accepted ? "accepted" : "rejected");
                if (v.witness) ctx.out << "  " << describe(*v.witness);
                ctx.out << '\n';
            }
        }
        ctx.out << report.verdicts.size() << " partitions checked\n";
    }
    return expect && !report.amorphous ? Rejected : Success;
}

void print_srg(const Context& ctx, const SrgParams& p) {
    if (ctx.json) {
        ctx.out << io::srg_to_json(p).dump() << '\n';
        return;
    }
    ctx.out << "parameters: (" << p.n << "," << p.k << "," << p.lambda << "," << p.mu << ")\n"
            << "eigenvalues: r=" << p.r.to_string() << " s=" << p.s.to_string() << '\n'
            << "multiplicities: m1=" << p.m1 << " m2=" << p.m2 << '\n'
            << "type: " << p.tag.to_string() << '\n';
}

int classify_srg(const Context& ctx, long long n, long long k, long long lambda, long long mu) {
    try {
        print_srg(ctx, make_srg_params(n, k, lambda, mu));
        return Success;
    } catch (const InconsistentSrg& e) {
        if (ctx.json) {
            ctx.out << Json{{"consistent", false}, {"error", e.what()}}.dump() << '\n';
        } else {
            ctx.out << "inconsistent: " << e.what() << '\n';
        }
        return Rejected;
    }
}

int srg_graph(const Context& ctx, const std::string& path) {
    const Json j = io::parse_json(slurp(ctx, path));
    const Json& rows = j.is_object() && j.contains("adjacency") ? j["adjacency"] : j;
    if (!rows.is_array()) throw FormatError("expected an adjacency matrix or {\"adjacency\": [[...]]}");
    std::vector<std::vector<int>> adj;
    for (const auto& row : rows) {
        if (!row.is_array()) throw FormatError("adjacency rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw FormatError("adjacency entries must be integers");
            r.push_back(v.get<int>());
        }
        adj.push_back(std::move(r));
    }
    try {
        print_srg(ctx, srg_from_graph(adj));
        return Success;
    } catch (const NotStronglyRegular& e) {
        if (ctx.json) {
            ctx.out << Json{{"strongly_regular", false}, {"x", e.x()}, {"y", e.y()}, {"error", e.what()}}.dump()
                    << '\n';
        } else {
            ctx.out << "not strongly regular: " << e.what() << '\n';
        }
        return Rejected;
    }
}

int sweep(const Context& ctx, long long vmax) {
    ctx.progress("sweeping parameter sets with v <= " + std::to_string(vmax));
    const auto report = parameter_sweep(vmax);
    ctx.progress("done: " + std::to_string(report.entries.size()) + " parameter sets");
    if (ctx.json) {
        ctx.out << io::sweep_to_json(report).dump() << '\n';
    } else {
        for (const auto& e : report.entries) {
            ctx.out << e.tag.to_string() << "  ";
            if (e.srg) ctx.out << "(" << e.srg->n << "," << e.srg->k << "," << e.srg->lambda << "," << e.srg->mu << ")  ";
            if (!e.feasible) {
                ctx.out << "skipped: " << e.reason << '\n';
                continue;
            }
            ctx.out << (e.certified ? "certified" : "OPEN");
            for (const auto& c : e.certificates) {
                ctx.out << "  " << to_string(c.kase) << ":" << to_string(c.steps.back().kind);
            }
            ctx.out << '\n';
        }
        ctx.out << "vmax " << report.vmax << ": " << report.entries.size() << " parameter sets, " << report.feasible
                << " feasible, " << report.certified << " certified, " << report.survivors << " survivors\n"
                << report.reduction_note << '\n';
    }
    return report.survivors == 0 ? Success : Rejected;
}

LatinSquare read_square(const Context& ctx, const std::string& path) {
    const Json j = io::parse_json(slurp(ctx, path));
    if (!j.is_array()) throw FormatError("a Latin square file holds an array of rows");
    LatinSquare sq;
    for (const auto& row : j) {
        if (!row.is_array()) throw FormatError("Latin square rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw FormatError("Latin square entries must be integers");
            r.push_back(v.get<int>());
        }
        sq.push_back(std::move(r));
    }
    return sq;
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw CLI::ValidationError("--orders", "expected a,b,... got '" + text + "'");
        orders.push_back(v);
    }
    if (orders.empty()) throw CLI::ValidationError("--orders", "expected at least one order");
    return orders;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err};
    CLI::App app{"Association schemes: axioms, eigenmatrices, fusions, and skew-symmetric amorphous certificates",
                 "scheme"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", ctx.json, "machine-readable output");
        sub->add_flag("--quiet", ctx.quiet, "no progress on stderr");
    };

    std::string file;
    auto* verify_cmd = app.add_subcommand("verify", "check the scheme axioms");
    verify_cmd->add_option("file", file, "scheme JSON, - for stdin")->required();
    common(verify_cmd);

    double tol = 1e-8;
    auto* eigen_cmd = app.add_subcommand("eigen", "eigenmatrix P, exact when recognizable");
    eigen_cmd->add_option("file", file, "scheme JSON, - for stdin")->required();
    eigen_cmd->add_option("--tol", tol, "numeric tolerance")->check(CLI::PositiveNumber);
    common(eigen_cmd);

    bool count_only = false, check = false;
    auto* fusions_cmd = app.add_subcommand("fusions", "admissible partitions and their fusion verdicts");
    fusions_cmd->add_option("file", file, "scheme JSON, - for stdin")->required();
    fusions_cmd->add_flag("--count", count_only, "print only the number of admissible partitions");
    fusions_cmd->add_flag("--check", check, "test every partition for a fusion scheme");
    common(fusions_cmd);

    bool full = false, expect = false;
    auto* amorphous_cmd = app.add_subcommand("amorphous", "test whether every admissible partition fuses");
    amorphous_cmd->add_option("file", file, "scheme JSON, - for stdin")->required();
    amorphous_cmd->add_flag("--full", full, "check all partitions instead of stopping at the first rejection");
    amorphous_cmd->add_flag("--expect-amorphous", expect, "exit 1 unless the scheme is amorphous");
    common(amorphous_cmd);

    long long n = 0, k = 0, lambda = 0, mu = 0;
    auto* classify_cmd = app.add_subcommand("classify-srg", "complete and classify strongly regular parameters");
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--k", k)->required();
    classify_cmd->add_option("--lambda", lambda)->required();
    classify_cmd->add_option("--mu", mu)->required();
    common(classify_cmd);

    auto* graph_cmd = app.add_subcommand("srg-from-graph", "read a 0/1 adjacency matrix as a strongly regular graph");
    graph_cmd->add_option("file", file, "JSON adjacency matrix, - for stdin")->required();
    common(graph_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "generate a scheme as JSON");
    gen_cmd->require_subcommand(1);
    int q = 0, e = 0, p = 0, order = 0;
    std::string orders, square;
    auto* cyc = gen_cmd->add_subcommand("cyclotomic", "cyclotomic scheme of GF(q) with index e");
    cyc->add_option("--q", q)->required();
    cyc->add_option("--e", e)->required();
    common(cyc);
    auto* pal = gen_cmd->add_subcommand("paley", "index-2 cyclotomic scheme over GF(p)");
    pal->add_option("--p", p)->required();
    common(pal);
    auto* grp = gen_cmd->add_subcommand("group", "group scheme of Z_a x Z_b x ...");
    grp->add_option("--orders", orders, "comma-separated cyclic orders")->required();
    common(grp);
    auto* lat = gen_cmd->add_subcommand("latin", "Latin square net scheme");
    lat->add_option("--order", order, "order of the cyclic square");
    lat->add_option("--square", square, "JSON Latin square instead of the cyclic one");
    common(lat);

    long long vmax = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "certify the skew-symmetric 4-class nonexistence argument");
    sweep_cmd->add_option("--vmax", vmax)->required();
    common(sweep_cmd);

    try {
        app.parse(argc, argv);
        if (lat->parsed() && square.empty() && order == 0) {
            throw CLI::RequiredError("gen latin needs --order or --square");
        }
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? Success : UsageError;
    }

    try {
        if (verify_cmd->parsed()) return verify(ctx, file);
        if (eigen_cmd->parsed()) return eigen(ctx, file, tol);
        if (fusions_cmd->parsed()) return fusions(ctx, file, count_only, check);
        if (amorphous_cmd->parsed()) return amorphous(ctx, file, full, expect);
        if (classify_cmd->parsed()) return classify_srg(ctx, n, k, lambda, mu);
        if (graph_cmd->parsed()) return srg_graph(ctx, file);
        if (sweep_cmd->parsed()) return sweep(ctx, vmax);
        if (gen_cmd->parsed()) {
            std::optional<AssociationScheme> s;
            if (cyc->parsed()) s = cyclotomic_scheme(FiniteField(q), e);
            if (pal->parsed()) s = paley(p);
            if (grp->parsed()) s = abelian_group_scheme(parse_orders(orders));
            if (lat->parsed()) s = latin_net_scheme(square.empty() ? cyclic_latin_square(order) : read_square(ctx, square));
            out << io::write_scheme(s->matrix()) << '\n';
            return Success;
        }
    } catch (const CLI::ValidationError& ex) {
        return app.exit(ex, out, err) == 0 ? Success : UsageError;
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return UsageError;
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return UsageError;
    } catch (const FormatError& ex) {
        err << "error: " << ex.what() << '\n';
        return UsageError;
    } catch (const Error& ex) {
        err << "rejected: " << ex.what() << '\n';
        return Rejected;
    }
    return UsageError;
}

}  // namespace amorph::cli
