// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabuq/qubo.hpp"

namespace tabuq {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the OR-LIB bqp convention: an instance count, then per instance a
/// "n m" header followed by m records "i j v" with 1-based indices.
/// The public files state maximization, so every coefficient is negated on
/// ingest and Sense::maximize_negated records the provenance; the toolkit
/// always minimizes internally.
std::vector<Qubo> parse_orlib(std::istream& in);
std::vector<Qubo> parse_orlib(const std::string& text);
std::vector<Qubo> parse_orlib_file(const std::string& path);

/// Writes instances back in the file convention (maximization), i.e. stored
/// coefficients are re-negated, so parse(write(qs)) reproduces the stored
/// coefficients. Offsets are not representable in the format and are dropped.
void write_orlib(std::ostream& out, const std::vector<Qubo>& instances);
void write_orlib_file(const std::string& path, const std::vector<Qubo>& instances);

}  // namespace tabuq
