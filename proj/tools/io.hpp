// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

// JSON encodings of the library's values, shared by the CLI and its tests.

#ifndef WH_TOOLS_IO_HPP
#define WH_TOOLS_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wh/fredholm.hpp"
#include "wh/group.hpp"
#include "wh/symbol.hpp"
#include "wh/wiener_hopf.hpp"
#include "wh/z_oracle.hpp"

namespace wh::io {

using Json = nlohmann::json;

/// Parses text, mapping syntax errors to ParseError with line and column.
Json parse(std::string_view text);

std::string read_file(const std::string& path);
/// Writes through a sibling temp file and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view contents);

// {"rank": r, "order": "lex"} or
// {"rank": r, "order": {"embedding": {"d": d, "weights": [[a, b], ...]}}}
// where a and b are integers or [num, den].
Json to_json(const OrderedGroup& g);
OrderedGroup group_from_json(const Json& j);

// {"group": ..., "coeffs": [{"exp": [...], "re": x, "im": y}, ...]}
Json to_json(const TrigPolynomial& p);
/// `group` overrides the descriptor inside the document (which may then be
/// absent).
TrigPolynomial symbol_from_json(const Json& j, const std::optional<OrderedGroup>& group = std::nullopt);

// {"entries": [{"exp": [...], "re": x, "im": y}, ...]}
Json to_json(const PositiveVector& v);
PositiveVector vector_from_json(const Json& j, const OrderedGroup& group);

Json to_json(const FredholmVerdict& v);
Json to_json(const LambdaClass& c);
Json to_json(const SpectrumGrid& g);

Json to_json(const z::FactorizationResult& f);
Json to_json(const z::KernelData& k);

Json complex_json(Complex c);

}  // namespace wh::io

#endif  // WH_TOOLS_IO_HPP
