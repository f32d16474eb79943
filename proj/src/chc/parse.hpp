// Copyright (c) horngraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "chc/ast.hpp"

#include <stdexcept>
#include <string>

namespace horn::chc {

/// Error in clause-format text; carries 1-based line/column.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string &what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + what),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Parses the `.chc` clause format: one clause per line,
/// `head :- item, item, ... .`, `%` comments, `false` head keyword.
/// Clause ids are assigned in textual order; arities inferred from the
/// first occurrence of each relation symbol.
ClauseSystem parse_system(const std::string &text);

} // namespace horn::chc
