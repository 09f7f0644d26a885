#pragma once

#include "k3cert/planner.hpp"

#include <stdexcept>
#include <string>

namespace k3cert {

// Raised on any syntactic or schema defect of a certificate file. Semantic
// defects (wrong values) are left to verify_certificate.
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

// Byte-deterministic JSON emission: fixed field order, canonical rational
// strings, two-space indent, trailing newline.
std::string emit_certificate(const ConstructionCertificate& cert);
ConstructionCertificate parse_certificate(const std::string& text);

// Standalone profile fixtures ("period" for circles, "interval" otherwise).
std::string emit_profile(const DHProfile& profile);

// The lattice-block JSON (same schema as one lattice_certs entry).
std::string emit_roots(const RootsData& roots, const PrimitivityCertificate& prim);

std::string report_to_json(const VerificationReport& rep);
std::string report_to_markdown(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

}  // namespace k3cert
