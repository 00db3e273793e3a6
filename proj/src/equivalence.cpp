#include "rnckit/equivalence.hpp"

#include "rnckit/construct.hpp"
#include "rnckit/errors.hpp"

namespace rnckit {

Matrix normalizing_mobius(const Param& a, const Param& b, const Param& c) {
    if (a == b || a == c || b == c) throw RepeatedParameter({0, 1, 2});
    // Row one vanishes at a, row two at c; scales make the rows agree at b.
    const Scalar k1 = b.s * c.u - b.u * c.s;
    const Scalar k2 = b.s * a.u - b.u * a.s;
    Matrix g(2, 2);
    g(0, 0) = a.u * k1;
    g(0, 1) = -a.s * k1;
    g(1, 0) = c.u * k2;
    g(1, 1) = -c.s * k2;
    return g;
}

Signature signature_on(const ParamRnc& curve, const Datum& datum) {
    if (datum.p() < 3) throw Unsupported("signatures need at least three points");
    const auto report = verify_datum(curve, datum);
    if (!report.passed) throw NotGeneric("signature", "the curve does not satisfy the datum");
    const Param& a = *report.point_params[0];
    const Matrix g = normalizing_mobius(a, *report.point_params[1], *report.point_params[2]);
    Signature sig;
    for (const auto& t : report.point_params) sig.point_params.emplace_back(g(0, 0) * t->s + g(0, 1) * t->u, g(1, 0) * t->s + g(1, 1) * t->u);
    // D(adj(g) (s, u)) has the transported roots; adj(g) is g^{-1} up to scale.
    for (const auto& sp : report.spaces)
        sig.space_forms.push_back(sp.d_form.substitute(g(1, 1), -g(0, 1), -g(1, 0), g(0, 0)).monic());
    return sig;
}

Signature signature(const Datum& datum) {
    if (datum.p() < 3) throw Unsupported("signatures need at least three points");
    auto result = construct(datum);
    if (const auto* cert = std::get_if<ExistenceCertificate>(&result)) return signature_on(cert->curve, datum);
    throw Unsupported("no unique curve interpolates this datum");
}

bool are_equivalent(const Datum& a, const Datum& b) {
    if (a.n != b.n || a.p() != b.p() || a.l() != b.l()) return false;
    return signature(a) == signature(b);
}

}  // namespace rnckit
