#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "twostep/tensor.hpp"

namespace twostep {

/// On-disk algebra document. JSON with exactly these fields:
///   format_version ("1", required), q, p, brackets, optional name and notes.
/// One bracket record per unordered pair: {"i": .., "j": .., "coeffs":
/// {"<center index>": "<rational>"}} with i < j and rationals as strings
/// ("3/2", "-1"); no floating point anywhere in the format.
struct AlgebraFile {
    TwoStepAlgebra algebra;
    std::optional<std::string> name;
    std::optional<std::string> notes;
};

/// Throws ParseError with field context on malformed documents; the parsed
/// tensor is validated before being returned.
AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

std::string serialize_algebra(const TwoStepAlgebra& alg, const std::optional<std::string>& name = std::nullopt,
                              const std::optional<std::string>& notes = std::nullopt);
void save_algebra_file(const std::string& path, const TwoStepAlgebra& alg,
                       const std::optional<std::string>& name = std::nullopt,
                       const std::optional<std::string>& notes = std::nullopt);

/// Bracket table in the catalog's display style, e.g.
/// "[x1,x2] = y1, [x3,x4] = y2, [x5,x6] = y1 + y2".
std::string bracket_table(const TwoStepAlgebra& alg);

}  // namespace twostep
