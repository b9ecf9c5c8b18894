#include "idcodes/sat_reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace idcodes {
namespace sat {

void CnfFormula::validate() const {
    for (const auto& cl : clauses) {
        if (cl.empty() || cl.size() > 3)
            throw std::invalid_argument("clauses must have 1 to 3 literals");
        for (int lit : cl) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars)
                throw std::invalid_argument("literal out of range");
            if (std::find(cl.begin(), cl.end(), -lit) != cl.end())
                throw std::invalid_argument("tautological clause");
        }
    }
}

CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    std::size_t declared_clauses = 0;
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                throw std::runtime_error("bad DIMACS problem line");
            have_header = true;
            continue;
        }
        if (!have_header) throw std::runtime_error("clause before DIMACS problem line");
        std::vector<int> cl;
        int lit = std::stoi(tok);
        while (lit != 0) {
            cl.push_back(lit);
            if (!(ls >> lit)) throw std::runtime_error("clause not 0-terminated");
        }
        f.clauses.push_back(std::move(cl));
    }
    if (!have_header) throw std::runtime_error("missing DIMACS problem line");
    if (f.clauses.size() != declared_clauses)
        throw std::runtime_error("clause count mismatch in DIMACS file");
    f.validate();
    return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_dimacs(in);
}

Reduction reduce_3sat(const CnfFormula& f) {
    f.validate();
    Reduction red;
    red.num_vars = f.num_vars;
    red.num_clauses = f.clauses.size();
    red.target_size = 3 * f.num_vars + f.clauses.size();
    Graph g(6 * f.num_vars + 2 * f.clauses.size());
    for (std::size_t j = 0; j < f.num_vars; ++j) {
        g.add_edge(red.a(j), red.b(j));
        g.add_edge(red.b(j), red.x(j));
        g.add_edge(red.b(j), red.xbar(j));
        g.add_edge(red.c(j), red.d(j));
        g.add_edge(red.c(j), red.x(j));
        g.add_edge(red.c(j), red.xbar(j));
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        g.add_edge(red.alpha(i), red.beta(i));
        for (int lit : f.clauses[i]) {
            std::size_t j = static_cast<std::size_t>(std::abs(lit)) - 1;
            g.add_edge(red.alpha(i), lit > 0 ? red.x(j) : red.xbar(j));
        }
    }
    red.graph = std::move(g);
    return red;
}

VertexSet code_from_assignment(const Reduction& red, const std::vector<bool>& assignment) {
    if (assignment.size() != red.num_vars)
        throw std::invalid_argument("assignment size mismatch");
    VertexSet code(red.graph.order());
    for (std::size_t j = 0; j < red.num_vars; ++j) {
        code.add(red.b(j));
        code.add(red.c(j));
        code.add(assignment[j] ? red.x(j) : red.xbar(j));
    }
    for (std::size_t i = 0; i < red.num_clauses; ++i) code.add(red.alpha(i));
    return code;
}

namespace {

bool satisfies(const CnfFormula& f, const std::vector<bool>& asg) {
    for (const auto& cl : f.clauses) {
        bool ok = false;
        for (int lit : cl) {
            std::size_t j = static_cast<std::size_t>(std::abs(lit)) - 1;
            if (asg[j] == (lit > 0)) { ok = true; break; }
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<bool>> assignment_from_code(const Reduction& red, const CnfFormula& f,
                                                      const VertexSet& code) {
    // one codeword among {x_j, xbar_j} pins the value; when a code happens to
    // take both or neither, those variables stay free and we try to complete
    std::vector<bool> asg(red.num_vars, false);
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < red.num_vars; ++j) {
        bool pos = code.contains(red.x(j)), neg = code.contains(red.xbar(j));
        if (pos == neg)
            free.push_back(j);
        else
            asg[j] = pos;
    }
    if (free.size() > 20) throw std::invalid_argument("too many undetermined variables");
    for (std::size_t m = 0; m < (std::size_t{1} << free.size()); ++m) {
        for (std::size_t i = 0; i < free.size(); ++i) asg[free[i]] = (m >> i) & 1;
        if (satisfies(f, asg)) return asg;
    }
    return std::nullopt;
}

std::optional<std::vector<bool>> brute_sat(const CnfFormula& f) {
    f.validate();
    if (f.num_vars > 20) throw std::invalid_argument("brute_sat supports at most 20 variables");
    std::vector<bool> asg(f.num_vars, false);
    for (std::size_t m = 0; m < (std::size_t{1} << f.num_vars); ++m) {
        for (std::size_t j = 0; j < f.num_vars; ++j) asg[j] = (m >> j) & 1;
        if (satisfies(f, asg)) return asg;
    }
    return std::nullopt;
}

}  // namespace sat
}  // namespace idcodes
