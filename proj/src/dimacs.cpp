#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "egw/cnf.hpp"

namespace egw {

DimacsError::DimacsError(const std::string& source, std::size_t l, const std::string& msg)
    : CnfError(source + ":" + std::to_string(l) + ": " + msg), line(l) {}

namespace {

bool parse_long(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    char* end = nullptr;
    errno = 0;
    out = std::strtoll(tok.c_str(), &end, 10);
    return errno == 0 && end == tok.c_str() + tok.size();
}

}  // namespace

CnfFormula read_dimacs(std::istream& in, const std::string& source) {
    CnfFormula f;
    bool have_header = false;
    long long declared_clauses = 0;
    Clause current;
    std::size_t clause_line = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        if (line[first] == '%') break;
        std::istringstream ss(line);
        if (line[first] == 'p') {
            if (have_header) throw DimacsError(source, lineno, "second header line");
            std::string p, fmt, v, c, extra;
            ss >> p >> fmt >> v >> c;
            long long nv = 0, nc = 0;
            if (p != "p" || fmt != "cnf" || !parse_long(v, nv) || !parse_long(c, nc) || nv < 0 || nc < 0 ||
                (ss >> extra))
                throw DimacsError(source, lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
            if (nv > 0x7FFFFFFF) throw DimacsError(source, lineno, "variable count too large");
            f.num_vars = static_cast<unsigned>(nv);
            declared_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header) throw DimacsError(source, lineno, "clause before 'p cnf' header");
        std::string tok;
        while (ss >> tok) {
            long long lit = 0;
            if (!parse_long(tok, lit)) throw DimacsError(source, lineno, "malformed literal '" + tok + "'");
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::llabs(lit) > static_cast<long long>(f.num_vars))
                throw DimacsError(source, lineno,
                                  "literal " + tok + " exceeds declared variable count " + std::to_string(f.num_vars));
            if (current.empty()) clause_line = lineno;
            if (std::find(current.begin(), current.end(), static_cast<Literal>(lit)) != current.end())
                throw DimacsError(source, lineno, "literal " + tok + " repeated within a clause");
            current.push_back(static_cast<Literal>(lit));
        }
    }
    if (!have_header) throw DimacsError(source, lineno, "missing 'p cnf' header");
    if (!current.empty()) throw DimacsError(source, clause_line, "clause is not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw DimacsError(source, lineno,
                          "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                              std::to_string(f.clauses.size()));
    return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CnfError("cannot open " + path);
    return read_dimacs(in, path);
}

std::string write_dimacs(const CnfFormula& f, const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += "c " + c + "\n";
    out += "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const Clause& c : f.clauses) {
        Clause sorted = c;
        std::sort(sorted.begin(), sorted.end(), [](Literal a, Literal b) {
            if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
            return a > b;
        });
        for (Literal l : sorted) out += std::to_string(l) + " ";
        out += "0\n";
    }
    return out;
}

}  // namespace egw
