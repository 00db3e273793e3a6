#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "rnckit/construct.hpp"
#include "rnckit/curve.hpp"
#include "rnckit/datum.hpp"
#include "rnckit/equivalence.hpp"
#include "rnckit/obstruction.hpp"
#include "rnckit/postulation.hpp"

namespace rnckit {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses text as a document. Throws ParseError with the byte offset on malformed input.
Json parse_document(std::string_view text);

/// Two-space indented rendering with a trailing newline.
std::string dump_document(const Json& doc);

/// Rejects documents whose "version" is present and not 1.
void check_version(const Json& doc);

Json encode(const Scalar& x);
Json encode(const ProjPoint& p);
Json encode(const LinForm& l);
Json encode(const Pencil& lam);
Json encode(const Datum& d);
Json encode(const BinaryForm& f);
Json encode(const Param& t);
Json encode(const Form& q);
Json encode(const ParamRnc& c);
Json encode(const DetRnc& c);
Json encode(const SecancyResult& r);
Json encode(const VerificationReport& r);
Json encode(const ExistenceCertificate& cert);
Json encode(const DegreeLedger& l);
Json encode(const ObstructionCertificate& cert);
Json encode(const CountAnalysis& a);
Json encode(const SchemeSpec& s);
Json encode(const PostulationReport& r);
Json encode(const AhRow& r);
Json encode(const Signature& s);

/// Inverse of encode. `path` names the node in error messages
/// ("$.points[2][1]"). Integers are accepted wherever a rational string is.
/// Pencils also accept {"span_points": [...]} with n-1 points.
template <class T>
T decode(const Json& j, const std::string& path = "$");

template <> Scalar decode<Scalar>(const Json& j, const std::string& path);
template <> ProjPoint decode<ProjPoint>(const Json& j, const std::string& path);
template <> LinForm decode<LinForm>(const Json& j, const std::string& path);
template <> Pencil decode<Pencil>(const Json& j, const std::string& path);
template <> Datum decode<Datum>(const Json& j, const std::string& path);
template <> BinaryForm decode<BinaryForm>(const Json& j, const std::string& path);
template <> Param decode<Param>(const Json& j, const std::string& path);
template <> Form decode<Form>(const Json& j, const std::string& path);
template <> ParamRnc decode<ParamRnc>(const Json& j, const std::string& path);
template <> DetRnc decode<DetRnc>(const Json& j, const std::string& path);
template <> SecancyResult decode<SecancyResult>(const Json& j, const std::string& path);
template <> VerificationReport decode<VerificationReport>(const Json& j, const std::string& path);
template <> ExistenceCertificate decode<ExistenceCertificate>(const Json& j, const std::string& path);
template <> DegreeLedger decode<DegreeLedger>(const Json& j, const std::string& path);
template <> ObstructionCertificate decode<ObstructionCertificate>(const Json& j, const std::string& path);
template <> CountAnalysis decode<CountAnalysis>(const Json& j, const std::string& path);
template <> SchemeSpec decode<SchemeSpec>(const Json& j, const std::string& path);
template <> PostulationReport decode<PostulationReport>(const Json& j, const std::string& path);
template <> AhRow decode<AhRow>(const Json& j, const std::string& path);
template <> Signature decode<Signature>(const Json& j, const std::string& path);

/// A curve given either as {"forms": ...} or as {"top": ..., "bottom": ...}.
ParamRnc decode_curve(const Json& j, const std::string& path = "$");

}  // namespace rnckit
