#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vem6/mesh.hpp"

namespace vem6 {

/// Parses the JSON mesh format:
///   {"vertices": [[x,y,z], ...],
///    "faces":    [[v0, v1, ...], ...],        // CCW about the stored normal
///    "cells":    [[[face, sign], ...], ...]}  // sign in {1, -1}
/// Unknown keys are ignored. Throws ParseError on malformed content and
/// ValidationError when the mesh breaks an invariant.
PolyMesh import_mesh(std::string_view content);

/// Serialises a mesh in the same format. Coordinates use 17 significant
/// digits so that import(export(m)) reproduces m exactly.
std::string export_mesh(const PolyMesh& mesh);

/// Reads a mesh file; a missing or unreadable file raises std::ios_base::failure
/// whose message names the path.
PolyMesh read_mesh_file(const std::filesystem::path& path);

void write_mesh_file(const PolyMesh& mesh, const std::filesystem::path& path);

}  // namespace vem6
