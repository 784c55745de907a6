#include "polecount/records.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polecount {

const char* family_name(Family f)
{
    switch (f) {
        case Family::sphere_exact: return "sphere_exact";
        case Family::sphere_olver: return "sphere_olver";
        case Family::transparent_boundary: return "transparent_boundary";
        case Family::transparent_interior: return "transparent_interior";
    }
    return "unknown";
}

Family family_from_name(const std::string& s)
{
    if (s == "sphere_exact") return Family::sphere_exact;
    if (s == "sphere_olver") return Family::sphere_olver;
    if (s == "transparent_boundary") return Family::transparent_boundary;
    if (s == "transparent_interior") return Family::transparent_interior;
    throw std::invalid_argument("unknown family tag: " + s);
}

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_records_csv(std::ostream& os, const std::vector<ResonanceRecord>& recs,
                       bool with_family)
{
    os << "l,twice_nu,re,im,multiplicity";
    if (with_family) os << ",family";
    os << '\n';
    for (const auto& r : recs) {
        os << r.l << ',' << r.nu.twice_nu << ',' << format_double(r.lambda.real()) << ','
           << format_double(r.lambda.imag()) << ',' << r.multiplicity;
        if (with_family) os << ',' << family_name(r.family);
        os << '\n';
    }
}

std::vector<ResonanceRecord> read_records_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("records csv: empty input");
    const bool with_family = line.find(",family") != std::string::npos;
    if (line.rfind("l,twice_nu,re,im,multiplicity", 0) != 0)
        throw std::runtime_error("records csv: unexpected header: " + line);

    std::vector<ResonanceRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        ResonanceRecord r;
        std::getline(ss, tok, ',');
        r.l = std::stoi(tok);
        std::getline(ss, tok, ',');
        r.nu.twice_nu = std::stoi(tok);
        std::getline(ss, tok, ',');
        const double re = std::stod(tok);
        std::getline(ss, tok, ',');
        const double im = std::stod(tok);
        r.lambda = cplx(re, im);
        std::getline(ss, tok, ',');
        r.multiplicity = std::stoll(tok);
        if (with_family && std::getline(ss, tok, ','))
            r.family = family_from_name(tok);
        r.nu.l = r.l;
        r.nu.n = r.nu.twice_nu - 2 * r.l + 2;
        out.push_back(r);
    }
    return out;
}

} // namespace polecount
