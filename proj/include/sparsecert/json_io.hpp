#pragma once

#include <string>

#include <json.hpp>

#include "sparsecert/frames.hpp"
#include "sparsecert/harness.hpp"
#include "sparsecert/lp.hpp"
#include "sparsecert/nsp.hpp"
#include "sparsecert/solvers.hpp"

// JSON encodings. Vectors are plain arrays; +infinity thresholds are encoded
// as the string "inf" and the unbounded sparsity marker as "unbounded".
// nlohmann::json keeps keys sorted, so dumps are byte-stable across reruns.

namespace sparsecert {

using json = nlohmann::json;

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const FramePair& p);
FramePair frame_pair_from_json(const json& j);

json to_json(const CoherenceCertificate& c);
json to_json(const LinearProgram& p);
LinearProgram linear_program_from_json(const json& j);
json to_json(const LpOutcome& o);
json to_json(const SparseSolution& s);
json to_json(const NspReport& r);
json to_json(const TrialRecord& t);
json to_json(const RecoveryReport& r);
json to_json(const IffReport& r);
json to_json(const CorollaryReport& r);

// One matrix row per line, comma-separated.
Matrix matrix_from_csv(const std::string& text);

std::string dump_report(const json& j);  // 2-space indent, trailing newline

}  // namespace sparsecert
