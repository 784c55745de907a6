#pragma once

#include "polecount/specfun.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polecount {

enum class Family { sphere_exact, sphere_olver, transparent_boundary, transparent_interior };

const char* family_name(Family f);
Family family_from_name(const std::string& s);

struct ResonanceRecord {
    int l = 0;
    HalfIntOrder nu;
    cplx lambda;                // the stored zero (lower half-plane for sphere_exact)
    long long multiplicity = 1;
    Family family = Family::sphere_exact;
};

// CSV schema: l,twice_nu,re,im,multiplicity[,family]; shortest round-trip
// number formatting so repeated runs are byte-identical.
void write_records_csv(std::ostream& os, const std::vector<ResonanceRecord>& recs,
                       bool with_family);
std::vector<ResonanceRecord> read_records_csv(std::istream& is);

std::string format_double(double v); // shortest round-trip decimal

} // namespace polecount
