// JSON encodings used repo-wide:
//   complex scalar  [re, im]
//   matrix          {"rows": n, "cols": m, "data": [[re,im], ... row-major]}
//   vector          {"dim": d, "data": [[re,im], ...]}
// Outcome and class indices are 1-based on the wire, 0-based in memory.

#pragma once

#include "loccdist/bipartite.hpp"
#include "loccdist/certificate.hpp"
#include "loccdist/channel.hpp"
#include "loccdist/estimator.hpp"
#include "loccdist/measurement.hpp"
#include "loccdist/qubit_construct.hpp"
#include "loccdist/types.hpp"

// vendored single-header nlohmann/json
#include <json.hpp>

#include <vector>

namespace loccdist {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json bipartite_vector_to_json(const BipartiteVector& u);
BipartiteVector bipartite_vector_from_json(const Json& j);

Json basis_to_json(const std::vector<BipartiteVector>& basis);
std::vector<BipartiteVector> basis_from_json(const Json& j);

// {"n": n, "pairs": [{"a": vector, "b": vector}, ...]}; square spaces only.
Json measurement_to_json(const RankOneSeparableMeasurement& m);
// Decodes without validating completeness; callers decide.
RankOneSeparableMeasurement measurement_from_json(const Json& j);

// {"classes": [[1-based outcome indices], ...]}
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"i": i, "j": j, "alpha": [re, im], "commutator_norm": x}, 1-based i, j
Json certificate_to_json(const Certificate& c);

Json identity_report_to_json(const IdentityReport& r);
Json report_to_json(const DistinguishabilityReport& r);
Json harness_summary_to_json(const HarnessSummary& s);
Json tagged_basis_to_json(const TaggedBasis& b);
Json construction_report_to_json(const ConstructionReport& r);

// {"dX": , "nA": , "nB": , "U": matrix}
Json realization_to_json(const ChannelRealization& r);
ChannelRealization realization_from_json(const Json& j);

Json choi_to_json(const ChoiMatrix& c);
Json witness_sweep_to_json(const WitnessSweepSummary& s);
Json search_result_to_json(const SearchResult& r);

}  // namespace loccdist
