#pragma once

#include "jackcc/jack.hpp"

#include <json.hpp>

namespace jackcc {

using Json = nlohmann::ordered_json;

/// [[num, den], ...] as decimal strings, ascending degree.
Json to_json(const AlphaPoly & p);
/// {"num": <poly>, "den": <poly>}.
Json to_json(const RatFunc & f);
/// {"degree": n, "terms": [{"mu": "2,1", "coeff": <ratfunc>}, ...]} in reverse-lex order.
Json to_json(const PSumVector & v);
/// {"n": n, "rows": [{"lambda": "2", "row": <psum>}, ...]}.
Json to_json(const JackTable & t);

/* Parsers throw std::invalid_argument on malformed input. */
AlphaPoly poly_from_json(const Json & j);
RatFunc ratfunc_from_json(const Json & j);
PSumVector psum_from_json(const Json & j);
JackTable jack_table_from_json(const Json & j);

} // namespace jackcc
