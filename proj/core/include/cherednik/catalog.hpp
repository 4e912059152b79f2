#pragma once

#include "cherednik/reflection_group.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cherednik {

/// Which group to build: "cyclic" (m), "dihedral" (m, realized as G(m,m,2)),
/// "symmetric" (m = n in {3,4}, reflection representation in the simple
/// root basis) or "matrix" (explicit generators, no irrep table).
struct GroupSpec {
    std::string type;
    int m = 0;
    std::vector<Matrix> generators;

    /// Parses "cyclic:2", "dihedral:3", "symmetric:4".
    static GroupSpec parse(const std::string& text);
    std::string name() const;
    /// Stable text used for the cache key.
    std::string canonical() const;
};

struct Catalog {
    std::string name;
    std::shared_ptr<const ReflectionGroup> group;
    std::shared_ptr<const IrrepTable> irreps;  // null for "matrix" groups

    const ReflectionGroup& g() const { return *group; }
    const IrrepTable& table() const;
};

/// Builds the group and its irreps. With a cache directory, a previously
/// written JSON file is loaded and re-verified, or a new one is written.
Catalog load_catalog(const GroupSpec& spec, std::size_t cap = 48,
                     const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

}  // namespace cherednik
