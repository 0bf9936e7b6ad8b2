#pragma once

// JSON and TSV renderings of library results. Rationals travel as canonical
// "p/q" strings (plain "p" for integers); no floating point appears.

#include <json.hpp>
#include <string>
#include <string_view>

#include "schreier/averages.hpp"
#include "schreier/constructions.hpp"
#include "schreier/domination.hpp"
#include "schreier/family.hpp"
#include "schreier/norm.hpp"
#include "schreier/verify.hpp"

namespace schreier::io {

using Json = nlohmann::ordered_json;

/// Object {"index": "p/q", ...}; integer values are accepted as JSON
/// integers too. Throws std::invalid_argument on anything else.
RationalVector parse_vector(std::string_view text);

Json to_json(const FinSet& f);
Json to_json(const RationalVector& v);
Json to_json(const NormResult& r);
Json to_json(const Decomposition& d);
Json to_json(const AverageBlock& b);
Json to_json(const DTruncation& d);
Json to_json(const RatioWitness& w);
Json to_json(const BasisReport& r);
Json to_json(const ComplementedBasis& b, bool with_vectors);
Json to_json(const UncomplementedExample& e, bool with_vectors);
Json to_json(const SuiteReport& r);

/// Table with header prefix_len, d_LM, d_ML, exact flags.
std::string genericity_tsv(const std::vector<GenericityRow>& rows);
Json genericity_json(const std::vector<GenericityRow>& rows);

/// Per-claim summary rows, then the kept lines.
std::string suite_tsv(const SuiteReport& r);

}  // namespace schreier::io
