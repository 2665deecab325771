#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sheafwc/betti.hpp"
#include "sheafwc/walls.hpp"

namespace sheafwc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one subcommand. `args` excludes the program name. Returns the exit
/// code: 0 on success, 1 on usage errors, 2 on domain or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// SVG drawing of walls as semicircles in the upper half-plane. Exact values
/// are converted to floating point only here, and printed with fixed precision.
std::string svg_document(const std::vector<walls::Wall>& ws, const std::vector<std::string>& labels = {});

/// Writes svg_document to `path`; throws std::runtime_error if unwritable.
void render_svg(const std::vector<walls::Wall>& ws, const std::filesystem::path& path,
                const std::vector<std::string>& labels = {});

/// Parses N6 | Q6 | hilb:n[:k] | kronecker:m:e:f | gr:k:n | proj:n. M6 is not a
/// single descriptor; the betti command assembles it.
betti::SpaceDescriptor parse_space(const std::string& text);

}  // namespace sheafwc::cli
