#pragma once

#include <iosfwd>
#include <string>

#include "pball/geometry.hpp"
#include "pball/samplers.hpp"

namespace pball {

// Sample emission. CSV carries a "x1,...,xn" header and 17 significant
// digits so values round-trip exactly; lines end with LF, decimal point is
// always '.'.
void write_csv(std::ostream& os, const SampleBatch& batch);
void write_jsonl(std::ostream& os, const SampleBatch& batch);  // one JSON array per row
void write_json(std::ostream& os, const SampleBatch& batch);   // metadata + data matrix

// Parses a CSV emitted by write_csv back into a batch (metadata supplied by
// the caller; the header fixes n).
SampleBatch read_csv(std::istream& is, Exponent p, Exponent q, SampleMode mode,
                     Algorithm algorithm, std::uint64_t seed);

// {"p", "q", "n", "pi_p", "quarter_length_q", "V_n", "S_nq"}; infinite
// exponents serialize as the string "inf".
std::string constants_json(const PCircleGrid& grid, const GeometryReport& report);

void write_rel_diff_csv(std::ostream& os, const RelDiffCurve& curve);

// (t, cos_p, sin_p) over one full period [0, 2*pi_p].
void write_squig_table_csv(std::ostream& os, const PCircleGrid& grid, int resolution);

std::string format_double(double v);  // %.17g

}  // namespace pball
