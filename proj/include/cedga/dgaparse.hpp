#pragma once
// Line-oriented text format for free DGAs with optional augmentations:
//
//   field 2              # or any other prime, or Q for the rationals
//   gen a0 : 1           # one generator per line, with its degree
//   diff a0 = 1 - x0*x1  # signed sum of words; `1` is the unit
//   aug x0 = -1          # augmentation value, integer or rational n/d
//
// Comments run from `#` to the end of the line.  Generators must be
// declared before they are used; a generator without a `diff` line has
// zero differential.  parse_dga throws ParseError carrying a 1-based
// line/column position; serialize_dga emits the canonical form (generator
// order, canonical term order), and parsing that text back reproduces the
// original structures.

#include <optional>
#include <stdexcept>
#include <string>

#include "cedga/dga.hpp"

namespace cedga {

enum class ParseErrorKind {
    syntax,
    undeclared_name,
    duplicate_declaration,
    bad_field,  // modulus that is missing, composite, or out of range
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, int column,
               const std::string& message);

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

struct DGADocument {
    FreeDGA dga;
    std::optional<Augmentation> aug;  // present iff any `aug` line appeared
};

DGADocument parse_dga(const std::string& text);

std::string serialize_dga(const FreeDGA& d, const Augmentation* eps = nullptr);

}  // namespace cedga
