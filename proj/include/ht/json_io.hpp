#pragma once

#include <string>

#include "ht/htmatrix.hpp"
#include "ht/rational.hpp"
#include "ht/series.hpp"

namespace ht {

// Wire formats:
//   HElem       {"t": number, "a": [re, im], "b": [re, im]}
//   HMatrix     {"t": number, "rows": n, "cols": m, "entries": [HElem...]}
//   PowerSeries {"t": number, "trunc": N, "coeffs": [HElem...]}
//   Realization {"t": number, "n":, "m":, "p":, "A":, "B":, "C":, "D":}

std::string to_json(const HElem& q);
std::string to_json(const HMatrix& m);
std::string to_json(const PowerSeries& f);
std::string to_json(const Realization& r);

HElem helem_from_json(const std::string& text);
HMatrix hmatrix_from_json(const std::string& text);
PowerSeries series_from_json(const std::string& text);
Realization realization_from_json(const std::string& text);

std::vector<HElem> helem_list_from_json(const std::string& text);

/// %.17g rendering used by every numeric field this library emits.
std::string format_double(double v);

} // namespace ht
