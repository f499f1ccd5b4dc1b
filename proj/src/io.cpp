#include "hamdec/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hamdec {

namespace {

// Reads the next non-empty, non-comment line; returns false on EOF.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

std::vector<int> parse_ints(const std::string& s, int lineno) {
    std::istringstream iss(s);
    std::vector<int> out;
    int x;
    while (iss >> x) out.push_back(x);
    std::string rest;
    if (iss.fail() && !iss.eof() && iss >> rest)
        throw parse_error(lineno, "expected integers, got '" + s + "'");
    iss.clear();
    if (iss >> rest) throw parse_error(lineno, "trailing junk '" + rest + "'");
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) throw parse_error(lineno, "missing header 'n m'");
    auto hdr = parse_ints(line, lineno);
    if (hdr.size() != 2) throw parse_error(lineno, "header must be 'n m'");
    int n = hdr[0], m = hdr[1];
    if (n < 0 || m < 0) throw parse_error(lineno, "negative header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno))
            throw parse_error(lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        auto e = parse_ints(line, lineno);
        if (e.size() != 2) throw parse_error(lineno, "edge line must be 'u v'");
        try {
            g.add_edge(e[0], e[1]);
        } catch (const domain_error& err) {
            throw parse_error(lineno, err.what());
        }
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

static std::vector<int> parse_labeled(const std::string& line, const std::string& label, int lineno) {
    auto pos = line.find(':');
    if (pos == std::string::npos) throw parse_error(lineno, "expected '" + label + ": ...'");
    std::string got = line.substr(0, pos);
    got.erase(got.find_last_not_of(" \t") + 1);
    got.erase(0, got.find_first_not_of(" \t"));
    if (got != label) throw parse_error(lineno, "expected label '" + label + "', got '" + got + "'");
    return parse_ints(line.substr(pos + 1), lineno);
}

BiPartition read_bipartition(std::istream& in) {
    int lineno = 0;
    std::string line;
    BiPartition p;
    const char* labels[4] = {"A", "A0", "B", "B0"};
    std::vector<int>* dest[4] = {&p.A, &p.A0, &p.B, &p.B0};
    for (int i = 0; i < 4; ++i) {
        if (!next_line(in, line, lineno)) throw parse_error(lineno, std::string("missing line ") + labels[i]);
        *dest[i] = parse_labeled(line, labels[i], lineno);
    }
    return p;
}

void write_bipartition(std::ostream& out, const BiPartition& p) {
    auto dump = [&](const char* label, const std::vector<int>& xs) {
        out << label << ':';
        for (int v : xs) out << ' ' << v;
        out << '\n';
    };
    dump("A", p.A);
    dump("A0", p.A0);
    dump("B", p.B);
    dump("B0", p.B0);
}

Decomposition read_decomposition(std::istream& in, const Graph& host) {
    Decomposition d;
    d.host = host;
    int lineno = 0;
    std::string line;
    bool saw_complete = false;
    while (next_line(in, line, lineno)) {
        size_t i = line.find_first_not_of(" \t");
        if (line.compare(i, 2, "C:") == 0) {
            d.cycles.push_back(parse_ints(line.substr(i + 2), lineno));
        } else if (line.compare(i, 2, "M:") == 0) {
            EdgeList m;
            std::istringstream iss(line.substr(i + 2));
            std::string tok;
            while (iss >> tok) {
                auto dash = tok.find('-');
                if (dash == std::string::npos) throw parse_error(lineno, "matching edge must be 'u-v'");
                try {
                    int u = std::stoi(tok.substr(0, dash));
                    int v = std::stoi(tok.substr(dash + 1));
                    m.push_back(make_edge(u, v));
                } catch (const std::exception&) {
                    throw parse_error(lineno, "bad edge token '" + tok + "'");
                }
            }
            d.matchings.push_back(std::move(m));
        } else if (line.compare(i, 9, "complete:") == 0) {
            std::string v = line.substr(i + 9);
            v.erase(0, v.find_first_not_of(" \t"));
            v.erase(v.find_last_not_of(" \t\r") + 1);
            if (v == "yes") d.complete = true;
            else if (v == "no") d.complete = false;
            else throw parse_error(lineno, "complete must be yes|no");
            saw_complete = true;
        } else {
            throw parse_error(lineno, "unrecognized line '" + line + "'");
        }
    }
    if (!saw_complete) throw parse_error(lineno, "missing trailing 'complete:' line");
    d.canonicalize();
    return d;
}

void write_decomposition(std::ostream& out, const Decomposition& d) {
    Decomposition c = d;
    c.canonicalize();
    for (const auto& cyc : c.cycles) {
        out << "C:";
        for (int v : cyc) out << ' ' << v;
        out << '\n';
    }
    for (const auto& m : c.matchings) {
        out << "M:";
        for (auto [u, v] : m) out << ' ' << u << '-' << v;
        out << '\n';
    }
    out << "complete: " << (c.complete ? "yes" : "no") << '\n';
}

std::string to_string(const Graph& g) {
    std::ostringstream oss;
    write_graph(oss, g);
    return oss.str();
}

std::string to_string(const Decomposition& d) {
    std::ostringstream oss;
    write_decomposition(oss, d);
    return oss.str();
}

}  // namespace hamdec
