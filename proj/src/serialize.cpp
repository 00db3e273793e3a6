#include "rnckit/serialize.hpp"

#include <array>
#include <climits>

#include "rnckit/errors.hpp"

namespace rnckit {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string type_name(const Json& j) { return j.type_name(); }

const Json& require_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, std::string("expected an array, got ") + type_name(j));
    return j;
}

const Json& require_object(const Json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, std::string("expected an object, got ") + type_name(j));
    return j;
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
    require_object(j, path);
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path, "missing field '" + key + "'");
    return *it;
}

long get_long(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, std::string("expected an integer, got ") + type_name(j));
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(LONG_MAX))
        throw ParseError(path, "integer out of range");
    return j.get<long>();
}

int get_int(const Json& j, const std::string& path) {
    const long v = get_long(j, path);
    if (v < INT_MIN || v > INT_MAX) throw ParseError(path, "integer out of range");
    return static_cast<int>(v);
}

bool get_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) throw ParseError(path, std::string("expected a boolean, got ") + type_name(j));
    return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, std::string("expected a string, got ") + type_name(j));
    return j.get<std::string>();
}

template <class T>
std::vector<T> list_from(const Json& j, const std::string& path) {
    require_array(j, path);
    std::vector<T> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(decode<T>(j[i], at(path, i)));
    return out;
}

template <class T>
Json list_to(const std::vector<T>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(encode(x));
    return out;
}

Vector vector_from(const Json& j, const std::string& path) { return list_from<Scalar>(j, path); }

Json vector_to(const Vector& v) { return list_to(v); }

/// Library errors raised while building a decoded object become parse errors at `path`.
template <class F>
auto building(const std::string& path, F&& make) -> decltype(make()) {
    try {
        return make();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(path, e.what());
    }
}

template <class E, std::size_t N>
E enum_from(const Json& j, const std::string& path, const std::array<E, N>& values) {
    const std::string s = get_string(j, path);
    for (E v : values)
        if (to_string(v) == s) return v;
    throw ParseError(path, "unknown value '" + s + "'");
}

constexpr std::array<Method, 6> kMethods{Method::frame_fit,    Method::cremona,    Method::one_space,
                                         Method::three_points, Method::two_points, Method::one_point};
constexpr std::array<CountVerdict, 3> kVerdicts{CountVerdict::overdetermined, CountVerdict::finite_expected,
                                                CountVerdict::positive_dimensional};
constexpr std::array<Classification, 5> kClassifications{Classification::exists_unique,
                                                         Classification::exists_nonunique, Classification::not_exists,
                                                         Classification::open, Classification::trivial};

void check_dimension(long size, int n, const std::string& path) {
    if (size != n + 1)
        throw ParseError(path, "expected " + std::to_string(n + 1) + " coordinates, got " + std::to_string(size));
}

}  // namespace

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "malformed document");
    }
}

namespace {

bool is_leaf_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

// Like dump(2), except arrays of primitives stay on one line.
void write(std::string& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (!j.is_structured() || j.empty()) {
        out += j.dump();
        return;
    }
    if (is_leaf_array(j)) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
        return;
    }
    out += j.is_object() ? "{\n" : "[\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        if (j.is_object()) out += Json(it.key()).dump() + ": ";
        write(out, it.value(), indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (j.is_object() ? "}" : "]");
}

}  // namespace

std::string dump_document(const Json& doc) {
    std::string out;
    write(out, doc, 0);
    return out + "\n";
}

void check_version(const Json& doc) {
    if (!doc.is_object()) return;
    auto it = doc.find("version");
    if (it == doc.end()) return;
    if (get_long(*it, "$.version") != kSchemaVersion)
        throw ParseError("$.version", "unsupported schema version " + it->dump());
}

// ---------------------------------------------------------------- encoding

Json encode(const Scalar& x) { return to_string(x); }
Json encode(const ProjPoint& p) { return vector_to(p.coords()); }
Json encode(const LinForm& l) { return vector_to(l.coeffs()); }

Json encode(const Pencil& lam) { return Json{{"forms", Json::array({encode(lam.f()), encode(lam.g())})}}; }

Json encode(const Datum& d) {
    return Json{{"n", d.n}, {"points", list_to(d.points)}, {"spaces", list_to(d.spaces)}};
}

Json encode(const BinaryForm& f) { return vector_to(f.coeffs()); }
Json encode(const Param& t) { return Json::array({encode(t.s), encode(t.u)}); }

Json encode(const Form& q) {
    return Json{{"nvars", q.nvars()}, {"degree", q.degree()}, {"coeffs", vector_to(q.coeffs())}, {"text", q.to_string()}};
}

Json encode(const ParamRnc& c) { return Json{{"forms", list_to(c.forms())}}; }

Json encode(const DetRnc& c) { return Json{{"top", list_to(c.grid().top)}, {"bottom", list_to(c.grid().bottom)}}; }

Json encode(const SecancyResult& r) {
    return Json{{"degree", r.degree},
                {"d_form", encode(r.d_form)},
                {"smooth", r.smooth},
                {"is_n_minus_1_secant", r.is_n_minus_1_secant}};
}

Json encode(const VerificationReport& r) {
    Json params = Json::array();
    for (const auto& t : r.point_params) params.push_back(t ? encode(*t) : Json(nullptr));
    return Json{{"point_params", params}, {"spaces", list_to(r.spaces)}, {"passed", r.passed}};
}

Json encode(const ExistenceCertificate& cert) {
    return Json{{"method", to_string(cert.method)},
                {"datum", encode(cert.datum)},
                {"curve", encode(cert.curve)},
                {"det", encode(cert.det)},
                {"report", encode(cert.report)}};
}

Json encode(const DegreeLedger& l) {
    return Json{{"intersection_lower_bound", l.intersection_lower_bound}, {"bezout_bound", l.bezout_bound}};
}

Json encode(const ObstructionCertificate& cert) {
    Json contains = Json::array();
    for (bool b : cert.contains) contains.push_back(b);
    return Json{{"datum", encode(cert.datum)},         {"quadric", encode(cert.quadric)},
                {"contains", contains},                 {"excluded_point", encode(cert.excluded_point)},
                {"excluded_value", encode(cert.excluded_value)}, {"ledger", encode(cert.ledger)}};
}

Json encode(const CountAnalysis& a) {
    return Json{{"n", a.n},
                {"p", a.p},
                {"l", a.l},
                {"dim_h", a.dim_h},
                {"conditions", a.conditions},
                {"verdict", to_string(a.verdict)},
                {"classification", to_string(a.classification)},
                {"count", a.count ? Json(*a.count) : Json(nullptr)}};
}

Json encode(const SchemeSpec& s) {
    return Json{{"n", s.n},
                {"degree", s.degree},
                {"points", list_to(s.double_points)},
                {"spaces", list_to(s.double_spaces)}};
}

Json encode(const PostulationReport& r) {
    Json items = Json::array();
    for (long c : r.item_conditions) items.push_back(c);
    return Json{{"total_monomials", r.total_monomials},
                {"item_conditions", items},
                {"conditions_sum", r.conditions_sum},
                {"h_formula", r.h_formula ? Json(*r.h_formula) : Json(nullptr)},
                {"expected", r.expected},
                {"actual", r.actual},
                {"deficit", r.deficit},
                {"note", r.note ? Json(*r.note) : Json(nullptr)}};
}

Json encode(const AhRow& r) {
    return Json{{"n", r.n}, {"p", r.p}, {"d", r.d}, {"exceptional", r.exceptional}, {"report", encode(r.report)}};
}

Json encode(const Signature& s) {
    return Json{{"point_params", list_to(s.point_params)}, {"space_forms", list_to(s.space_forms)}};
}

// ---------------------------------------------------------------- decoding

template <>
Scalar decode<Scalar>(const Json& j, const std::string& path) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), path);
    if (j.is_number_unsigned()) return Scalar(Integer(std::to_string(j.get<std::uint64_t>())));
    if (j.is_number_integer()) return Scalar(Integer(std::to_string(j.get<std::int64_t>())));
    if (j.is_number_float()) throw ParseError(path, "floating point values are not accepted; use \"p/q\"");
    throw ParseError(path, std::string("expected a rational, got ") + type_name(j));
}

template <>
ProjPoint decode<ProjPoint>(const Json& j, const std::string& path) {
    Vector v = vector_from(j, path);
    return building(path, [&] { return ProjPoint(std::move(v)); });
}

template <>
LinForm decode<LinForm>(const Json& j, const std::string& path) {
    return LinForm(vector_from(j, path));
}

template <>
Pencil decode<Pencil>(const Json& j, const std::string& path) {
    require_object(j, path);
    if (j.contains("forms")) {
        const std::string p = at(path, "forms");
        const Json& forms = require_array(j["forms"], p);
        if (forms.size() != 2) throw ParseError(p, "expected exactly two forms");
        LinForm f = decode<LinForm>(forms[0], at(p, 0));
        LinForm g = decode<LinForm>(forms[1], at(p, 1));
        if (f.n() != g.n()) throw ParseError(p, "forms have different lengths");
        return building(path, [&] { return Pencil(std::move(f), std::move(g)); });
    }
    if (j.contains("span_points")) {
        auto pts = list_from<ProjPoint>(j["span_points"], at(path, "span_points"));
        return building(path, [&] { return pencil_from_points(pts); });
    }
    throw ParseError(path, "a space needs 'forms' or 'span_points'");
}

template <>
Datum decode<Datum>(const Json& j, const std::string& path) {
    const int n = get_int(member(j, "n", path), at(path, "n"));
    if (n < 1) throw ParseError(at(path, "n"), "ambient dimension must be positive");
    Datum d;
    d.n = n;
    if (j.contains("points")) {
        const std::string p = at(path, "points");
        d.points = list_from<ProjPoint>(j["points"], p);
        for (std::size_t i = 0; i < d.points.size(); ++i) check_dimension(d.points[i].n() + 1, n, at(p, i));
    }
    if (j.contains("spaces")) {
        const std::string p = at(path, "spaces");
        d.spaces = list_from<Pencil>(j["spaces"], p);
        for (std::size_t i = 0; i < d.spaces.size(); ++i) check_dimension(d.spaces[i].n() + 1, n, at(p, i));
    }
    return d;
}

template <>
BinaryForm decode<BinaryForm>(const Json& j, const std::string& path) {
    Vector v = vector_from(j, path);
    if (v.empty()) throw ParseError(path, "a binary form needs at least one coefficient");
    return BinaryForm(std::move(v));
}

template <>
Param decode<Param>(const Json& j, const std::string& path) {
    require_array(j, path);
    if (j.size() != 2) throw ParseError(path, "a parameter is a pair [s, u]");
    Scalar s = decode<Scalar>(j[0], at(path, 0)), u = decode<Scalar>(j[1], at(path, 1));
    return building(path, [&] { return Param(s, u); });
}

template <>
Form decode<Form>(const Json& j, const std::string& path) {
    const int nvars = get_int(member(j, "nvars", path), at(path, "nvars"));
    const int degree = get_int(member(j, "degree", path), at(path, "degree"));
    if (nvars < 1 || degree < 0) throw ParseError(path, "bad form shape");
    Vector coeffs = vector_from(member(j, "coeffs", path), at(path, "coeffs"));
    return building(path, [&] { return Form(nvars, degree, std::move(coeffs)); });
}

template <>
ParamRnc decode<ParamRnc>(const Json& j, const std::string& path) {
    auto forms = list_from<BinaryForm>(member(j, "forms", path), at(path, "forms"));
    return building(path, [&] { return ParamRnc(std::move(forms)); });
}

template <>
DetRnc decode<DetRnc>(const Json& j, const std::string& path) {
    LinFormGrid g;
    g.top = list_from<LinForm>(member(j, "top", path), at(path, "top"));
    g.bottom = list_from<LinForm>(member(j, "bottom", path), at(path, "bottom"));
    return building(path, [&] { return DetRnc(std::move(g)); });
}

ParamRnc decode_curve(const Json& j, const std::string& path) {
    require_object(j, path);
    if (j.contains("forms")) return decode<ParamRnc>(j, path);
    if (j.contains("top")) return decode<DetRnc>(j, path).param();
    throw ParseError(path, "a curve needs 'forms' or 'top' and 'bottom'");
}

template <>
SecancyResult decode<SecancyResult>(const Json& j, const std::string& path) {
    SecancyResult r;
    r.degree = get_int(member(j, "degree", path), at(path, "degree"));
    r.d_form = decode<BinaryForm>(member(j, "d_form", path), at(path, "d_form"));
    r.smooth = get_bool(member(j, "smooth", path), at(path, "smooth"));
    r.is_n_minus_1_secant = get_bool(member(j, "is_n_minus_1_secant", path), at(path, "is_n_minus_1_secant"));
    return r;
}

template <>
VerificationReport decode<VerificationReport>(const Json& j, const std::string& path) {
    VerificationReport r;
    const std::string pp = at(path, "point_params");
    const Json& params = require_array(member(j, "point_params", path), pp);
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].is_null())
            r.point_params.emplace_back(std::nullopt);
        else
            r.point_params.emplace_back(decode<Param>(params[i], at(pp, i)));
    }
    r.spaces = list_from<SecancyResult>(member(j, "spaces", path), at(path, "spaces"));
    r.passed = get_bool(member(j, "passed", path), at(path, "passed"));
    return r;
}

template <>
ExistenceCertificate decode<ExistenceCertificate>(const Json& j, const std::string& path) {
    return ExistenceCertificate{decode<Datum>(member(j, "datum", path), at(path, "datum")),
                                decode<ParamRnc>(member(j, "curve", path), at(path, "curve")),
                                decode<DetRnc>(member(j, "det", path), at(path, "det")),
                                decode<VerificationReport>(member(j, "report", path), at(path, "report")),
                                enum_from(member(j, "method", path), at(path, "method"), kMethods)};
}

template <>
DegreeLedger decode<DegreeLedger>(const Json& j, const std::string& path) {
    return DegreeLedger{get_long(member(j, "intersection_lower_bound", path), at(path, "intersection_lower_bound")),
                        get_long(member(j, "bezout_bound", path), at(path, "bezout_bound"))};
}

template <>
ObstructionCertificate decode<ObstructionCertificate>(const Json& j, const std::string& path) {
    ObstructionCertificate cert;
    cert.datum = decode<Datum>(member(j, "datum", path), at(path, "datum"));
    cert.quadric = decode<Form>(member(j, "quadric", path), at(path, "quadric"));
    const std::string cp = at(path, "contains");
    const Json& contains = require_array(member(j, "contains", path), cp);
    if (contains.size() != cert.contains.size()) throw ParseError(cp, "expected five flags");
    for (std::size_t i = 0; i < cert.contains.size(); ++i) cert.contains[i] = get_bool(contains[i], at(cp, i));
    cert.excluded_point = decode<ProjPoint>(member(j, "excluded_point", path), at(path, "excluded_point"));
    cert.excluded_value = decode<Scalar>(member(j, "excluded_value", path), at(path, "excluded_value"));
    cert.ledger = decode<DegreeLedger>(member(j, "ledger", path), at(path, "ledger"));
    return cert;
}

template <>
CountAnalysis decode<CountAnalysis>(const Json& j, const std::string& path) {
    CountAnalysis a;
    a.n = get_int(member(j, "n", path), at(path, "n"));
    a.p = get_int(member(j, "p", path), at(path, "p"));
    a.l = get_int(member(j, "l", path), at(path, "l"));
    a.dim_h = get_long(member(j, "dim_h", path), at(path, "dim_h"));
    a.conditions = get_long(member(j, "conditions", path), at(path, "conditions"));
    a.verdict = enum_from(member(j, "verdict", path), at(path, "verdict"), kVerdicts);
    a.classification = enum_from(member(j, "classification", path), at(path, "classification"), kClassifications);
    if (j.contains("count") && !j["count"].is_null()) a.count = get_int(j["count"], at(path, "count"));
    return a;
}

template <>
SchemeSpec decode<SchemeSpec>(const Json& j, const std::string& path) {
    const Datum d = decode<Datum>(j, path);
    SchemeSpec s;
    s.n = d.n;
    s.double_points = d.points;
    s.double_spaces = d.spaces;
    s.degree = get_int(member(j, "degree", path), at(path, "degree"));
    if (s.degree < 1) throw ParseError(at(path, "degree"), "degree must be at least 1");
    return s;
}

template <>
PostulationReport decode<PostulationReport>(const Json& j, const std::string& path) {
    PostulationReport r;
    r.total_monomials = get_long(member(j, "total_monomials", path), at(path, "total_monomials"));
    const std::string ip = at(path, "item_conditions");
    const Json& items = require_array(member(j, "item_conditions", path), ip);
    for (std::size_t i = 0; i < items.size(); ++i) r.item_conditions.push_back(get_long(items[i], at(ip, i)));
    r.conditions_sum = get_long(member(j, "conditions_sum", path), at(path, "conditions_sum"));
    if (j.contains("h_formula") && !j["h_formula"].is_null())
        r.h_formula = get_long(j["h_formula"], at(path, "h_formula"));
    r.expected = get_long(member(j, "expected", path), at(path, "expected"));
    r.actual = get_long(member(j, "actual", path), at(path, "actual"));
    r.deficit = get_long(member(j, "deficit", path), at(path, "deficit"));
    if (j.contains("note") && !j["note"].is_null()) r.note = get_string(j["note"], at(path, "note"));
    return r;
}

template <>
AhRow decode<AhRow>(const Json& j, const std::string& path) {
    return AhRow{get_int(member(j, "n", path), at(path, "n")), get_int(member(j, "p", path), at(path, "p")),
                 get_int(member(j, "d", path), at(path, "d")),
                 get_bool(member(j, "exceptional", path), at(path, "exceptional")),
                 decode<PostulationReport>(member(j, "report", path), at(path, "report"))};
}

template <>
Signature decode<Signature>(const Json& j, const std::string& path) {
    return Signature{list_from<Param>(member(j, "point_params", path), at(path, "point_params")),
                     list_from<BinaryForm>(member(j, "space_forms", path), at(path, "space_forms"))};
}

}  // namespace rnckit
