#include "concordia/describe.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "concordia/plumbing.hpp"
#include "concordia/twobridge.hpp"

namespace concordia {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<int> parse_braid_word(const std::string& body) {
    std::vector<int> word;
    std::istringstream is(body);
    int v;
    while (is >> v) word.push_back(v);
    if (!is.eof()) throw parse_error("braid word: expected whitespace-separated nonzero integers");
    if (word.empty()) throw parse_error("braid word: empty");
    return word;
}

}  // namespace

LinkInput parse_link_description(const std::string& text) {
    // split off '!' modifiers (but not inside the base text, which never
    // contains '!')
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '!') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
    }
    std::string base = trim(parts[0]);

    LinkInput in;
    in.text = trim(text);
    if (base == "unknot") {
        in.diagram = parse_pd("PD[] comps=[[1]] marked=1 mode=oriented");
    } else if (base.rfind("S(", 0) == 0) {
        size_t comma = base.find(',');
        size_t close = base.find(')');
        if (comma == std::string::npos || close == std::string::npos || close < comma)
            throw parse_error("two-bridge literal: expected S(p,q)");
        long long p = std::stoll(trim(base.substr(2, comma - 2)));
        long long q = std::stoll(trim(base.substr(comma + 1, close - comma - 1)));
        in.diagram = twobridge_diagram(p, q);
        if (q == 1) in.braid = std::vector<int>(static_cast<size_t>(p), 1);
    } else if (base.rfind("braid:", 0) == 0) {
        in.braid = parse_braid_word(base.substr(6));
        in.diagram = braid_closure_diagram(*in.braid);
    } else if (base.rfind("pd:", 0) == 0) {
        in.diagram = parse_pd(trim(base.substr(3)));
    } else if (base.rfind("tree:", 0) == 0) {
        in.diagram = montesinos_diagram(parse_tree(trim(base.substr(5))));
    } else {
        throw parse_error("unknown link description: '" + base + "'");
    }

    for (size_t i = 1; i < parts.size(); ++i) {
        std::string mod = trim(parts[i]);
        if (mod == "mirror") {
            in.diagram = negate(in.diagram);
            if (in.braid) {
                for (int& g : *in.braid) g = -g;
                // mirror of a closure is the closure of the mirrored word only
                // up to orientation reversal of all strands; both have the
                // same Seifert data, so the word stays usable
            }
        } else if (mod == "partly") {
            in.diagram.mode = OrientationMode::PartlyOriented;
        } else if (mod.rfind("mark=", 0) == 0) {
            int k = std::stoi(mod.substr(5));
            if (k < 1 || k > in.diagram.num_components())
                throw parse_error("mark=: component out of range");
            in.diagram.marked = k - 1;
        } else if (mod.rfind("rev=", 0) == 0) {
            std::vector<int> comps;
            std::istringstream is(mod.substr(4));
            std::string tok;
            while (std::getline(is, tok, ','))
                comps.push_back(std::stoi(tok) - 1);
            in.diagram = reverse_components(in.diagram, comps);
            in.braid.reset();  // no longer a plain braid closure
        } else {
            throw parse_error("unknown modifier: '!" + mod + "'");
        }
    }
    return in;
}

}  // namespace concordia
