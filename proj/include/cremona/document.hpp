#pragma once

// Reading and writing exponent matrices.
//
// Text form: an optional header line "n d", then n+1 rows of integers.
// JSON form: {"n": 3, "d": 2, "rows": [[2,0,0,0], ...]}; n and d optional.
// The form is picked by the first non-blank character ('{' means JSON).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cremona/monomial_map.hpp"
#include "json.hpp"

namespace cremona {

struct MatrixDocument {
  int n = 0;
  std::optional<std::int64_t> d;
  RawMatrix rows;
};

/// Throws Error(Malformed) on unparseable or inconsistent input.
MatrixDocument parse_document(std::string_view text);

/// Validates rows and, when a degree was declared, that it matches.
ExponentMatrix to_exponent_matrix(const MatrixDocument& doc, ValidateOptions options = {});

std::string to_text(const ExponentMatrix& e);
nlohmann::ordered_json to_json(const ExponentMatrix& e);

}  // namespace cremona
