#pragma once

// JSON encodings of the library's values. Objects are emitted with sorted
// keys and integers only (as numbers when they fit in 64 bits, otherwise as
// decimal strings), so dumps are byte-for-byte reproducible.

#include <grpcohom/les.hpp>
#include <grpcohom/transfer.hpp>

#include <json.hpp>

namespace grpcohom::json_io {

using Json = nlohmann::json;

// Raised for malformed or invalid input documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
Json vector_to_json(std::span<const Integer> v);
linalg::Vector vector_from_json(const Json& j);
Json matrix_to_json(const linalg::IntMatrix& m);
linalg::IntMatrix matrix_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);
Json module_to_json(const GModule& m);
ModulePtr module_from_json(const Json& j, const GroupPtr& group);
Json class_to_json(const ContinuityClass& c);
ContinuityClass class_from_json(const Json& j, const FiniteGroup& group);
Json nbhd_to_json(const IdentityNbhd& U);

Json abelian_group_to_json(const linalg::FPAbelianGroup& g);

// Zero values are omitted. `embed_context` adds the group and module.
Json cochain_to_json(const Cochain& f, bool embed_context = true);
// Uses `module` when given, otherwise the embedded group and module.
Cochain cochain_from_json(const Json& j, ModulePtr module = nullptr);
Json bicochain_to_json(const BiCochain& f);
BiCochain bicochain_from_json(const Json& j, const ModulePtr& module);
Json total_to_json(const TotalCochain& t);
TotalCochain total_from_json(const Json& j, const ModulePtr& module);

Json certificate_to_json(const TransferCertificate& cert);
// Rebuilds the certificate and recomputes "verified".
TransferCertificate certificate_from_json(const Json& j);
Json obstruction_to_json(const TransferObstruction& obs, const ContinuityClass& cls);
Json exactness_to_json(const ExactnessReport& r);

CoefficientSES ses_from_json(const Json& j, const GroupPtr& group);
Json ses_to_json(const CoefficientSES& ses);
Json les_to_json(const LESReport& r);
Json ladder_to_json(const LadderReport& r);

// Canonical serialization used for every file the tools write.
std::string dump(const Json& j);

}  // namespace grpcohom::json_io
