// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#include "tabuq/orlib.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tabuq {

namespace {

// Whitespace tokenizer that tracks line numbers for error reporting.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    bool next(std::string& tok) {
        tok.clear();
        int c;
        while ((c = in_.get()) != EOF) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line_;
                if (!tok.empty()) return true;
            } else {
                if (tok.empty()) token_line_ = line_;
                tok.push_back(static_cast<char>(c));
            }
        }
        if (tok.empty()) token_line_ = line_;
        return !tok.empty();
    }

    long long next_int(const char* what) {
        std::string tok;
        if (!next(tok)) throw ParseError(line_, std::string("unexpected end of input, expected ") + what);
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(token_line_, std::string("expected ") + what + ", got '" + tok + "'");
        }
    }

    double next_real(const char* what) {
        std::string tok;
        if (!next(tok)) throw ParseError(line_, std::string("unexpected end of input, expected ") + what);
        try {
            std::size_t pos = 0;
            double v = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(token_line_, std::string("expected ") + what + ", got '" + tok + "'");
        }
    }

    int line() const { return token_line_; }

private:
    std::istream& in_;
    int line_ = 1;
    int token_line_ = 1;
};

}  // namespace

std::vector<Qubo> parse_orlib(std::istream& in) {
    TokenReader rd(in);
    const long long count = rd.next_int("instance count");
    if (count < 0) throw ParseError(rd.line(), "negative instance count");
    std::vector<Qubo> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long inst = 0; inst < count; ++inst) {
        const long long n = rd.next_int("variable count");
        const long long m = rd.next_int("nonzero count");
        if (n < 0 || m < 0)
            throw ParseError(rd.line(), "malformed instance header (n=" + std::to_string(n) +
                                            ", m=" + std::to_string(m) + ")");
        std::vector<QuboTerm> terms;
        terms.reserve(static_cast<std::size_t>(m));
        for (long long r = 0; r < m; ++r) {
            long long i, j;
            double v;
            try {
                i = rd.next_int("row index");
                j = rd.next_int("column index");
                v = rd.next_real("coefficient");
            } catch (const ParseError& e) {
                throw ParseError(e.line(), "instance " + std::to_string(inst) + " declares " +
                                               std::to_string(m) + " records but record " +
                                               std::to_string(r + 1) + " is missing or malformed (" +
                                               e.what() + ")");
            }
            if (i < 1 || i > n || j < 1 || j > n)
                throw ParseError(rd.line(), "index (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") out of range for n=" + std::to_string(n));
            // files state maximization; negate so the toolkit minimizes
            terms.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), -v});
        }
        out.emplace_back(static_cast<int>(n), std::move(terms), 0.0, Sense::maximize_negated);
    }
    return out;
}

std::vector<Qubo> parse_orlib(const std::string& text) {
    std::istringstream in(text);
    return parse_orlib(in);
}

std::vector<Qubo> parse_orlib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return parse_orlib(in);
}

namespace {

void write_value(std::ostream& out, double file_value) {
    const double r = std::nearbyint(file_value);
    if (r == file_value && std::abs(file_value) < 1e15) {
        out << static_cast<long long>(r);
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", file_value);
        out << buf;
    }
}

}  // namespace

void write_orlib(std::ostream& out, const std::vector<Qubo>& instances) {
    out << instances.size() << "\n";
    for (const auto& q : instances) {
        out << q.num_vars() << " " << q.nonzero_count() << "\n";
        for (const auto& t : q.terms()) {
            out << (t.i + 1) << " " << (t.j + 1) << " ";
            write_value(out, -t.value);
            out << "\n";
        }
    }
}

void write_orlib_file(const std::string& path, const std::vector<Qubo>& instances) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_orlib(out, instances);
}

}  // namespace tabuq
