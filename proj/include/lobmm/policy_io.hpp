#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "lobmm/hjb_solver.hpp"

namespace lobmm {

inline constexpr int kTieBreakVersion = 1;
inline constexpr int kActionRecordBytes = 7;

/// A solved policy together with what it was solved against.
struct PolicyArtifact {
  std::string model_fingerprint;
  SchemeParams params;
  PolicyTensor policy;
};

PolicyArtifact make_artifact(const Solution& solution);

/// One JSON header line, then row-major [t, spread, y, p] action records:
/// kind u8, bid level u8, ask level u8, two signed 16-bit operands in lots (little endian).
/// make: (bid size, ask size); take: (impulse, 0).
void write_policy(const PolicyArtifact& artifact, std::ostream& out);
PolicyArtifact read_policy(std::istream& in);

void save_policy(const PolicyArtifact& artifact, const std::filesystem::path& path);
PolicyArtifact load_policy(const std::filesystem::path& path);

/// Header document alone (what `write_policy` puts on the first line).
Json policy_header(const PolicyArtifact& artifact);

}  // namespace lobmm
