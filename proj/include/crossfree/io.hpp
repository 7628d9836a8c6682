#pragma once

#include <optional>
#include <string>

#include "crossfree/components.hpp"
#include "crossfree/cross_free.hpp"
#include "crossfree/triple_system.hpp"

namespace crossfree {

/// Provenance trailer for constructed systems.
struct Provenance {
    int k = 0;
    bool used_fallback = false;
};

/// Everything a system file can carry: the block list, optionally the
/// three-part partition, a block coloring and construction provenance.
struct Bundle {
    TripleSystem ts;
    std::optional<CrossFreePartition> partition;
    std::optional<BlockColoring> coloring;
    std::optional<Provenance> provenance;
};

/// Thrown on malformed input; carries the 1-based line number when known.
struct ParseError : DesignError {
    int line = 0;
    ParseError(int line, const std::string& what);
};

/// Canonical plain format: first line "n <n>", then one block per line
/// "a b c" (a<b<c, lexicographic order), then optional trailer lines
/// "X0:/X1:/X2: <points>" and "provenance: k=<k> factor_u=<closed-form|fallback>".
/// Colorings travel in a separate plain file ("r <r>", one color per line).
std::string write_plain(const Bundle& bundle);
Bundle read_plain(const std::string& text);

std::string write_plain_coloring(const BlockColoring& coloring);
BlockColoring read_plain_coloring(const std::string& text);

/// Structured JSON format, versioned by the "format" field ("sts-1");
/// unknown versions are rejected. Carries the same data as the plain
/// format in one document.
std::string write_json(const Bundle& bundle);
Bundle read_json(const std::string& text);

/// Convenience file helpers.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace crossfree
