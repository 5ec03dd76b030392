// Reading and writing the line-oriented ideal file format.

#include "egh/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "egh/errors.hpp"
#include "egh/fp.hpp"
#include "egh/parse.hpp"

namespace egh {

namespace {

// Strips comments and surrounding whitespace; returns an empty string for
// lines that carry no payload.
std::string strip_line(const std::string& raw) {
    std::string line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::size_t first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const std::size_t last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

RingPtr parse_header(const std::string& line, const std::string& label) {
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    if (keyword != "ring")
        throw ParseError(label + ": expected 'ring <n> <p> <names...>' header, got '" +
                         line + "'");
    long long nvars = 0;
    long long p = 0;
    if (!(words >> nvars) || !(words >> p))
        throw ParseError(label + ": malformed ring header '" + line + "'");
    if (nvars < 1) throw ParseError(label + ": ring needs at least one variable");
    if (p < 2 || !is_prime(std::uint64_t(p)))
        throw ParseError(label + ": characteristic " + std::to_string(p) +
                         " is not prime");
    std::vector<std::string> names;
    std::string name;
    while (words >> name) names.push_back(name);
    if (names.empty()) return RingContext::make_default(int(nvars), std::uint32_t(p));
    if (static_cast<long long>(names.size()) != nvars)
        throw ParseError(label + ": header names " + std::to_string(names.size()) +
                         " variables but declares " + std::to_string(nvars));
    return RingContext::make(int(nvars), std::uint32_t(p), std::move(names));
}

}  // namespace

Ideal read_ideal(std::istream& in, const std::string& label) {
    std::string raw;
    RingPtr ring;
    std::vector<Polynomial> gens;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_line(raw);
        if (line.empty()) continue;
        if (!ring) {
            ring = parse_header(line, label);
            continue;
        }
        try {
            gens.push_back(parse_polynomial(line, ring));
        } catch (const ParseError& e) {
            throw ParseError(label + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!ring) throw ParseError(label + ": missing ring header");
    return Ideal::from_generators(ring, std::move(gens));
}

Ideal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ideal file '" + path + "'");
    return read_ideal(in, path);
}

namespace {

void write_header(std::ostream& out, const RingPtr& ring) {
    out << "ring " << ring->nvars() << " " << ring->characteristic();
    for (int i = 0; i < ring->nvars(); ++i) out << " " << ring->var_name(i);
    out << "\n";
}

}  // namespace

void write_ideal(std::ostream& out, const Ideal& ideal) {
    write_header(out, ideal.ring());
    for (const Polynomial& g : ideal.generators()) out << g.to_string() << "\n";
}

std::string ideal_to_file_string(const Ideal& ideal) {
    std::ostringstream out;
    write_ideal(out, ideal);
    return out.str();
}

void write_monomial_ideal(std::ostream& out, const MonomialIdeal& ideal) {
    write_header(out, ideal.ring());
    for (const Monomial& m : ideal.generators())
        out << Polynomial::monomial(ideal.ring(), m).to_string() << "\n";
}

void write_multicomplex(std::ostream& out, const Multicomplex& mc) {
    write_header(out, mc.ring());
    for (const Monomial& m : mc.monomials())
        out << Polynomial::monomial(mc.ring(), m).to_string() << "\n";
}

std::vector<std::string> monomial_strings(const RingPtr& ring,
                                          const std::vector<Monomial>& monomials) {
    std::vector<std::string> result;
    result.reserve(monomials.size());
    for (const Monomial& m : monomials)
        result.push_back(Polynomial::monomial(ring, m).to_string());
    return result;
}

}  // namespace egh
