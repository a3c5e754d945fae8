#ifndef SKEWINFO_JSON_IO_HPP
#define SKEWINFO_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "skewinfo/channel_bounds.hpp"
#include "skewinfo/observable_bounds.hpp"

namespace skewinfo {

// Matrix interchange format, shared by every CLI input and output:
//   {"dim": d, "entries": [[[re,im], ... d entries], ... d rows]}
// row-major, IEEE-754 doubles. State, observable and channel files wrap it
// as {"rho": <matrix>}, {"observable": <matrix>}, {"kraus": [<matrix>, ...]};
// a bare matrix object is also accepted wherever a single matrix is expected.

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& A);

/// Throws ParseError on any structural problem (missing keys, ragged rows,
/// non-finite or non-numeric entries, dim < 1).
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix state_matrix_from_json(const nlohmann::json& j);
ComplexMatrix observable_matrix_from_json(const nlohmann::json& j);
std::vector<ComplexMatrix> kraus_list_from_json(const nlohmann::json& j);

/// Report serialization with deterministic field order (stable for golden
/// files): {"n", "sum_skew", "bounds": {"lb0", "lb0_two", "lb0bar", "lb1"},
/// "slacks"}. Undefined bounds serialize as null and are omitted from slacks.
nlohmann::ordered_json report_to_json(const ObservableBoundReport& rep);

/// {"N", "n_kraus", "sum_skew", "bounds": {"fu_two", "thm3", "thm4"},
///  "argmax": {"thm3", "thm4", "fu_two"}, "search_exhaustive"}.
nlohmann::ordered_json report_to_json(const ChannelBoundReport& rep);

/// Locale-independent shortest representation with 12 significant digits,
/// '.' decimal separator. Used for every CSV cell and scalar CLI output.
std::string format_sig12(double v);

} // namespace skewinfo

#endif
