#include "rnckit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rnckit/construct.hpp"
#include "rnckit/equivalence.hpp"
#include "rnckit/errors.hpp"
#include "rnckit/postulation.hpp"
#include "rnckit/sampling.hpp"
#include "rnckit/serialize.hpp"

namespace rnckit::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read '" + path + "'");
    buf << f.rdbuf();
    return buf.str();
}

Json load(const std::string& path, std::istream& in) {
    Json doc = parse_document(read_input(path, in));
    if (!doc.is_object()) throw ParseError("$", "expected a document object");
    check_version(doc);
    return doc;
}

Json envelope(const std::string& command) { return Json{{"version", kSchemaVersion}, {"command", command}}; }

std::string join(const std::vector<long>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

// ---------------------------------------------------------------- text rendering

void render_datum(std::ostream& os, const Datum& d) {
    os << "P^" << d.n << ", " << d.p() << " points, " << d.l() << " spaces\n";
    for (int i = 0; i < d.p(); ++i) os << "  P" << i << " = " << d.points[static_cast<std::size_t>(i)].to_string() << "\n";
    for (int i = 0; i < d.l(); ++i) os << "  L" << i << " = " << d.spaces[static_cast<std::size_t>(i)].to_string() << "\n";
}

void render_curve(std::ostream& os, const ParamRnc& c) {
    for (int i = 0; i <= c.n(); ++i)
        os << "  x" << i << " = " << c.forms()[static_cast<std::size_t>(i)].to_string() << "\n";
}

void render_det(std::ostream& os, const DetRnc& c) {
    for (const auto* row : {&c.grid().top, &c.grid().bottom}) {
        os << "  [";
        for (std::size_t j = 0; j < row->size(); ++j) os << (j ? " | " : " ") << (*row)[j].to_string();
        os << " ]\n";
    }
}

void render_report(std::ostream& os, const VerificationReport& r) {
    os << "verification: " << (r.passed ? "passed" : "FAILED") << "\n";
    for (std::size_t i = 0; i < r.point_params.size(); ++i)
        os << "  P" << i << (r.point_params[i] ? " at t = " + r.point_params[i]->to_string() : " not on the curve") << "\n";
    for (std::size_t i = 0; i < r.spaces.size(); ++i) {
        const auto& s = r.spaces[i];
        os << "  L" << i << " meets the curve in degree " << s.degree << ", D = " << s.d_form.to_string()
           << (s.smooth ? "" : ", not smooth") << (s.is_n_minus_1_secant ? "" : ", not (n-1)-secant") << "\n";
    }
}

std::string render(const ExistenceCertificate& cert) {
    std::ostringstream os;
    render_datum(os, cert.datum);
    os << "curve found by " << to_string(cert.method) << "\n";
    os << "parametrization:\n";
    render_curve(os, cert.curve);
    os << "determinantal form (rank-one locus):\n";
    render_det(os, cert.det);
    render_report(os, cert.report);
    return os.str();
}

std::string render(const ObstructionCertificate& cert) {
    std::ostringstream os;
    render_datum(os, cert.datum);
    os << "obstruction quadric Q = " << cert.quadric.to_string() << "\n";
    os << "Q contains L0, L1, P0, P1, P2: ";
    for (std::size_t i = 0; i < cert.contains.size(); ++i) os << (i ? " " : "") << (cert.contains[i] ? "yes" : "no");
    os << "\n";
    os << "Q(P3) = " << to_string(cert.excluded_value) << " at " << cert.excluded_point.to_string() << "\n";
    os << "a curve through the datum would meet Q in >= " << cert.ledger.intersection_lower_bound
       << " points, but at most " << cert.ledger.bezout_bound << " are possible\n";
    os << "no rational normal curve satisfies the datum\n";
    return os.str();
}

std::string render(const CountAnalysis& a) {
    std::ostringstream os;
    os << "n = " << a.n << ", p = " << a.p << ", l = " << a.l << "\n";
    os << "family dimension " << a.dim_h << ", conditions " << a.conditions << "\n";
    os << "verdict: " << to_string(a.verdict) << "\n";
    os << "classification: " << to_string(a.classification);
    if (a.count) os << " (" << *a.count << (*a.count == 1 ? " curve)" : " curves)");
    os << "\n";
    return os.str();
}

std::string render(const PostulationReport& r) {
    std::ostringstream os;
    os << "forms of this degree: " << r.total_monomials << "\n";
    os << "conditions per item: " << join(r.item_conditions) << " (sum " << r.conditions_sum << ")\n";
    if (r.h_formula) os << "h = " << *r.h_formula << "\n";
    os << "expected rank " << r.expected << ", actual rank " << r.actual << ", deficit " << r.deficit << "\n";
    if (r.note) os << "note: " << *r.note << "\n";
    return os.str();
}

std::string render(const Signature& s) {
    std::ostringstream os;
    os << "  parameters:";
    for (const auto& t : s.point_params) os << " " << t.to_string();
    os << "\n";
    for (std::size_t i = 0; i < s.space_forms.size(); ++i) os << "  D" << i << " = " << s.space_forms[i].to_string() << "\n";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- commands

CommandOutput construct_command(const Json& doc) {
    const Datum d = decode<Datum>(doc);
    CommandOutput o;
    o.doc = envelope("construct");
    ConstructResult r = construct(d);
    if (auto* cert = std::get_if<ExistenceCertificate>(&r)) {
        o.doc["result"] = "curve";
        o.doc["certificate"] = encode(*cert);
        o.text = render(*cert);
        o.code = cert->report.passed ? ExitCode::ok : ExitCode::verification_failed;
    } else if (auto* obs = std::get_if<ObstructionCertificate>(&r)) {
        o.doc["result"] = "obstruction";
        o.doc["certificate"] = encode(*obs);
        o.text = render(*obs);
        o.code = ExitCode::no_curve;
    } else {
        const auto& u = std::get<UnsupportedResult>(r);
        o.doc["result"] = "unsupported";
        o.doc["reason"] = u.reason;
        o.text = "unsupported: " + u.reason + "\n";
        o.code = ExitCode::unsupported;
    }
    return o;
}

CommandOutput verify_command(const Json& doc) {
    const Datum d = decode<Datum>(doc);
    if (!doc.contains("curve")) throw ParseError("$", "missing field 'curve'");
    const ParamRnc c = decode_curve(doc["curve"], "$.curve");
    if (c.n() != d.n) throw ParseError("$.curve", "curve lives in the wrong space");
    const VerificationReport r = verify_datum(c, d);
    CommandOutput o;
    o.doc = envelope("verify");
    o.doc["report"] = encode(r);
    std::ostringstream os;
    render_report(os, r);
    o.text = os.str();
    o.code = r.passed ? ExitCode::ok : ExitCode::verification_failed;
    return o;
}

CommandOutput obstruct_command(const Json& doc) {
    const ObstructionCertificate cert = nonexistence_certificate(decode<Datum>(doc));
    CommandOutput o;
    o.doc = envelope("obstruct");
    o.doc["result"] = "obstruction";
    o.doc["certificate"] = encode(cert);
    o.text = render(cert);
    o.code = ExitCode::no_curve;
    return o;
}

CommandOutput expect_command(int n, int p, int l) {
    const CountAnalysis a = expected_count(n, p, l);
    CommandOutput o;
    o.doc = envelope("expect");
    o.doc["analysis"] = encode(a);
    o.text = render(a);
    return o;
}

CommandOutput hilbert_command(const Json& doc) {
    const SchemeSpec spec = decode<SchemeSpec>(doc);
    const PostulationReport r = hilbert_function(spec);
    CommandOutput o;
    o.doc = envelope("hilbert");
    o.doc["report"] = encode(r);
    o.text = render(r);
    Json explanation = nullptr;
    if (r.deficit > 0) {
        try {
            if (auto w = defect_explanation(spec)) {
                explanation = Json{{"curve", encode(w->curve)},
                                   {"intersection_lower_bound", w->intersection_lower_bound},
                                   {"bezout_bound", w->bezout_bound},
                                   {"hypersurface", w->hypersurface ? encode(*w->hypersurface) : Json(nullptr)}};
                o.text += "explained by a rational normal curve met in degree >= " +
                          std::to_string(w->intersection_lower_bound) + " > " + std::to_string(w->bezout_bound) + "\n";
                if (w->hypersurface) o.text += "kernel element: " + w->hypersurface->to_string() + "\n";
            }
        } catch (const NotGeneric& e) {
            o.text += std::string("no explaining curve: ") + e.what() + "\n";
        }
    }
    o.doc["explanation"] = explanation;
    return o;
}

CommandOutput ah_suite_command(std::uint64_t seed) {
    CommandOutput o;
    o.doc = envelope("ah-suite");
    o.doc["seed"] = seed;
    Json rows = Json::array();
    std::ostringstream os;
    os << "  n   p   d  expected  actual  deficit  exceptional\n";
    for (const auto& row : ah_exceptions_suite(seed)) {
        rows.push_back(encode(row));
        char line[96];
        std::snprintf(line, sizeof line, "%3d %3d %3d  %8ld  %6ld  %7ld  %s\n", row.n, row.p, row.d, row.report.expected,
                      row.report.actual, row.report.deficit, row.exceptional ? "yes" : "no");
        os << line;
    }
    o.doc["rows"] = rows;
    o.text = os.str();
    return o;
}

CommandOutput equivalent_command(const Json& a, const Json& b) {
    const Datum da = decode<Datum>(a, "$a"), db = decode<Datum>(b, "$b");
    CommandOutput o;
    o.doc = envelope("equivalent");
    const bool same_shape = da.n == db.n && da.p() == db.p() && da.l() == db.l();
    const Signature sa = signature(da);
    std::optional<Signature> sb;
    if (same_shape) sb = signature(db);
    const bool eq = sb && sa == *sb;
    o.doc["equivalent"] = eq;
    Json sigs = Json::array({encode(sa), sb ? encode(*sb) : Json(nullptr)});
    std::ostringstream os;
    os << (eq ? "equivalent" : "not equivalent") << "\nfirst datum:\n" << render(sa);
    if (sb)
        os << "second datum:\n" << render(*sb);
    else
        os << "second datum has a different shape\n";
    o.doc["signatures"] = sigs;
    o.text = os.str();
    return o;
}

CommandOutput random_datum_command(int n, int p, int l, std::uint64_t seed, bool oracle) {
    if (n < 1 || p < 0 || l < 0) throw BadShape("need n >= 1 and nonnegative counts");
    if (l > 0 && n < 3) throw BadDimension("codimension-two spaces need n >= 3");
    Rng rng(seed);
    CommandOutput o;
    o.doc = Json{{"version", kSchemaVersion}, {"command", "random-datum"}, {"seed", seed}};
    Datum d;
    std::optional<ParamRnc> curve;
    if (oracle) {
        curve = random_curve(n, rng);
        d = forward_datum(*curve, p, l, rng);
    } else {
        d = random_datum(n, p, l, rng);
    }
    const Json dj = encode(d);
    for (auto it = dj.begin(); it != dj.end(); ++it) o.doc[it.key()] = it.value();
    std::ostringstream os;
    render_datum(os, d);
    if (curve) {
        o.doc["oracle"] = encode(*curve);
        os << "oracle curve:\n";
        render_curve(os, *curve);
    }
    o.text = os.str();
    return o;
}

// ---------------------------------------------------------------- errors

namespace {

Json error_doc(const std::string& command, const std::string& kind, const std::string& message) {
    Json d = envelope(command);
    d["error"] = Json{{"kind", kind}, {"message", message}};
    return d;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and obstruct rational normal curves through points and codimension-two spaces."};
    app.name("rnckit");
    app.require_subcommand(1, 1);

    std::string format = "structured";
    std::uint64_t seed = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", seed, "Seed for generated data");

    std::string input = "-", input_b;
    int n = 0, p = 0, l = 0;
    bool oracle = false;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Document file, or - for standard input");
        sub->fallthrough();
        return sub;
    };
    auto with_shape = [&](CLI::App* sub) {
        sub->add_option("n", n, "Ambient dimension")->required();
        sub->add_option("p", p, "Number of points")->required();
        sub->add_option("l", l, "Number of codimension-two spaces")->required();
        sub->fallthrough();
        return sub;
    };
    auto* construct_cmd = with_input(app.add_subcommand("construct", "Find the curve for a datum, or obstruct it"));
    auto* verify_cmd = with_input(app.add_subcommand("verify", "Check a given curve against a datum"));
    auto* obstruct_cmd = with_input(app.add_subcommand("obstruct", "Certify that no curve satisfies a datum"));
    auto* hilbert_cmd = with_input(app.add_subcommand("hilbert", "Rank of a double point and double space scheme"));
    auto* expect_cmd = with_shape(app.add_subcommand("expect", "Parameter count and classification of a shape"));
    auto* ah_cmd = app.add_subcommand("ah-suite", "Double point schemes with unexpected postulation");
    ah_cmd->fallthrough();
    auto* equiv_cmd = app.add_subcommand("equivalent", "Ordered projective equivalence of two data");
    equiv_cmd->add_option("a", input, "First datum")->required();
    equiv_cmd->add_option("b", input_b, "Second datum")->required();
    equiv_cmd->fallthrough();
    auto* random_cmd = with_shape(app.add_subcommand("random-datum", "Seeded random datum"));
    random_cmd->add_flag("--oracle", oracle, "Generate from a random curve and emit that curve");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    const bool structured = format == "structured";
    std::string command = app.get_subcommands().front()->get_name();
    auto fail = [&](ExitCode code, const std::string& kind, const std::string& message, Json extra = Json::object()) {
        err << "rnckit " << command << ": " << message << "\n";
        if (structured) {
            Json d = error_doc(command, kind, message);
            for (auto it = extra.begin(); it != extra.end(); ++it) d["error"][it.key()] = it.value();
            out << dump_document(d);
        }
        return static_cast<int>(code);
    };

    try {
        CommandOutput o;
        if (construct_cmd->parsed()) o = construct_command(load(input, in));
        else if (verify_cmd->parsed()) o = verify_command(load(input, in));
        else if (obstruct_cmd->parsed()) o = obstruct_command(load(input, in));
        else if (hilbert_cmd->parsed()) o = hilbert_command(load(input, in));
        else if (expect_cmd->parsed()) o = expect_command(n, p, l);
        else if (ah_cmd->parsed()) o = ah_suite_command(seed);
        else if (equiv_cmd->parsed()) {
            if (input == "-" && input_b == "-") throw InputError("only one datum can come from standard input");
            o = equivalent_command(load(input, in), load(input_b, in));
        } else if (random_cmd->parsed()) o = random_datum_command(n, p, l, seed, oracle);
        out << (structured ? dump_document(o.doc) : o.text);
        return static_cast<int>(o.code);
    } catch (const InputError& e) {
        return fail(ExitCode::input, "input", e.what());
    } catch (const ParseError& e) {
        return fail(ExitCode::parse, "parse", e.what(), Json{{"location", e.location()}});
    } catch (const NotGeneric& e) {
        return fail(ExitCode::not_generic, "not_generic", e.what(),
                    Json{{"stage", e.stage()}, {"witness", e.witness()}});
    } catch (const RepeatedParameter& e) {
        return fail(ExitCode::not_generic, "not_generic", e.what(),
                    Json{{"stage", "parameters"}, {"witness", e.indices()}});
    } catch (const Unsupported& e) {
        return fail(ExitCode::unsupported, "unsupported", e.what());
    } catch (const BadShape& e) {
        return fail(ExitCode::bad_shape, "bad_shape", e.what());
    } catch (const BadDimension& e) {
        return fail(ExitCode::bad_shape, "bad_shape", e.what());
    } catch (const DimensionMismatch& e) {
        return fail(ExitCode::bad_shape, "bad_shape", e.what());
    } catch (const ObstructionFails& e) {
        return fail(ExitCode::obstruction_fails, "obstruction_fails", e.what());
    } catch (const std::exception& e) {
        return fail(ExitCode::internal, "internal", e.what());
    }
}

}  // namespace rnckit::cli
