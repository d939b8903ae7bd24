#pragma once
#include <memory>
#include <optional>
#include <string>

#include "grmod/module.hpp"

namespace grmod {

inline constexpr const char* kToolName = "grmod";
inline constexpr const char* kToolVersion = "0.1.0";

// Shared, extendable state of a free resolution.  maps[k] is the
// differential into the k-th free module; maps[0] is the relation map of
// the minimal presentation.  `complete` means the last computed syzygy
// module was zero.
struct ResolutionState {
    Presentation minimal;
    std::vector<GradedMap> maps;
    bool complete = false;
};

// Resolution states are shared within the process and optionally persisted
// to a directory (CLI flag or GRMOD_CACHE_DIR).  Disk entries are keyed by
// content hash and tool version.
void set_disk_cache_dir(std::optional<std::string> dir);
const std::optional<std::string>& disk_cache_dir();

// Returns the shared state for M, loading from disk when available.  The
// state's `minimal` field is filled on first use.
std::shared_ptr<ResolutionState> resolution_state(const Presentation& M);

// Writes the state to the disk cache when one is configured.
void persist_resolution_state(const Presentation& M,
                              const ResolutionState& st);

void clear_resolution_memory();

} // namespace grmod
