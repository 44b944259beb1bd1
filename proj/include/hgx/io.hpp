#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hgx/hypergraph.hpp"

namespace hgx {

/// `.hg` text format: a header line `r n m`, then m lines of r strictly
/// increasing 0-based labels. Lines starting with `#` are comments.
Hypergraph read_hg(std::istream& in, const std::string& source = "<stream>");
Hypergraph read_hg_file(const std::filesystem::path& path);

/// Writes edges in lexicographic order.
void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg_file(const std::filesystem::path& path, const Hypergraph& h);

std::string to_hg_string(const Hypergraph& h);
Hypergraph from_hg_string(const std::string& text);

}  // namespace hgx
