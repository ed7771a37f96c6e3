#include "concordia/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "concordia/goeritz.hpp"
#include "concordia/lattice.hpp"
#include "concordia/tangle.hpp"

namespace concordia {

void PlumbingTree::validate() const {
    int n = size();
    if (n == 0) throw precondition_error("plumbing tree: empty");
    for (long long w : weights)
        if (w == 0) throw precondition_error("plumbing tree: zero weight");
    if (static_cast<int>(edges.size()) != n - 1)
        throw precondition_error("plumbing tree: edge count must be n - 1");
    std::vector<int> par(static_cast<size_t>(n));
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (par[a] != a) a = par[a] = par[par[a]];
        return a;
    };
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw precondition_error("plumbing tree: bad edge");
        int ra = find(a), rb = find(b);
        if (ra == rb) throw precondition_error("plumbing tree: cycle");
        par[ra] = rb;
    }
}

PlumbingTree parse_tree(const std::string& text) {
    PlumbingTree t;
    auto fail = [&](const std::string& m) { throw parse_error("tree: " + m); };
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ';')) ++i; };
    auto expect = [&](const std::string& tok) {
        skip();
        if (text.compare(i, tok.size(), tok) != 0) fail("expected '" + tok + "'");
        i += tok.size();
    };
    auto integer = [&]() {
        skip();
        size_t j = i;
        if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
        size_t k = j;
        while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
        if (k == j) fail("expected integer");
        long long v = std::stoll(text.substr(i, k - i));
        i = k;
        return v;
    };
    expect("vertices");
    expect(":");
    expect("[");
    skip();
    if (text[i] != ']') {
        while (true) {
            t.weights.push_back(integer());
            skip();
            if (text[i] == ',') { ++i; continue; }
            break;
        }
    }
    expect("]");
    expect("edges");
    expect(":");
    expect("[");
    skip();
    if (text[i] != ']') {
        while (true) {
            expect("(");
            long long a = integer();
            expect(",");
            long long b = integer();
            expect(")");
            t.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            skip();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            break;
        }
    }
    expect("]");
    t.validate();
    return t;
}

std::string to_tree_text(const PlumbingTree& t) {
    std::ostringstream os;
    os << "vertices: [";
    for (size_t i = 0; i < t.weights.size(); ++i) {
        if (i) os << ",";
        os << t.weights[i];
    }
    os << "]; edges: [";
    for (size_t i = 0; i < t.edges.size(); ++i) {
        if (i) os << ",";
        os << "(" << t.edges[i].first << "," << t.edges[i].second << ")";
    }
    os << "]";
    return os.str();
}

IntMat plumbing_matrix(const PlumbingTree& t) {
    t.validate();
    int n = t.size();
    IntMat m(static_cast<size_t>(n), IntVec(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[i][i] = t.weights[i];
    for (auto [a, b] : t.edges) {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    return m;
}

namespace {

// center of a star tree: the unique vertex so that every leg hangs off it as
// a simple chain. Returns -1 when no vertex works.
int star_center(const PlumbingTree& t) {
    int n = t.size();
    if (n == 1) return 0;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int c = 0; c < n; ++c) {
        // every other vertex must have degree <= 2, forming chains from c
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (v != c && adj[v].size() > 2) ok = false;
        if (ok) return c;
    }
    return -1;
}

}  // namespace

LinkDiagram montesinos_diagram(const PlumbingTree& t) {
    t.validate();
    int center = star_center(t);
    if (center < 0) throw unavailable_error("montesinos_diagram: not a star-shaped tree");
    int n = t.size();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // legs as weight chains walking outward from the center
    std::vector<std::vector<long long>> legs;
    for (int s : adj[center]) {
        std::vector<long long> chain;
        int prev = center, cur = s;
        while (true) {
            chain.push_back(t.weights[cur]);
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev) nxt = w;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
        legs.push_back(chain);
    }
    std::sort(legs.begin(), legs.end());

    // Each leg contributes the tangle of fraction -beta/alpha, where
    // alpha/beta is the minus continued fraction of the chain read from the
    // center outward: c1 - 1/(c2 - 1/(...)).
    Tangle acc = Tangle::zero();
    bool first = true;
    for (const auto& chain : legs) {
        long long alpha = 1, beta = 0;  // evaluate from the far end: x = c - 1/x'
        for (size_t i = chain.size(); i-- > 0;) {
            long long na = chain[i] * alpha - beta;
            beta = alpha;
            alpha = na;
        }
        if (alpha == 0) throw precondition_error("montesinos_diagram: leg chain is degenerate");
        Tangle leg = rational_tangle(-beta, alpha);
        if (first) {
            acc = leg;
            first = false;
        } else {
            tangle_sum(acc, leg);
        }
    }
    long long e0 = t.weights[center];
    if (first) {
        // no legs: the link of a single twisted band
        acc = rational_tangle(e0, 1);
    } else {
        int s = e0 >= 0 ? 1 : -1;
        for (long long k = 0; k < std::llabs(e0); ++k) twist_right(acc, s);
    }
    return numerator_closure(acc);
}

std::vector<SweepEntry> quasiorientation_sweep(const LinkDiagram& d) {
    if (d.mode != OrientationMode::MarkedOriented)
        throw precondition_error("quasiorientation_sweep: requires marked oriented input");
    if (determinant(d).is_zero())
        throw precondition_error("quasiorientation_sweep: zero determinant");
    int m = d.num_components();
    std::vector<int> others;
    for (int i = 0; i < m; ++i)
        if (i != d.marked) others.push_back(i);
    std::vector<SweepEntry> out;
    for (int mask = 0; mask < (1 << others.size()); ++mask) {
        std::vector<int> rev;
        for (size_t j = 0; j < others.size(); ++j)
            if (mask & (1 << j)) rev.push_back(others[j]);
        LinkDiagram dd = rev.empty() ? d : reverse_components(d, rev);
        SweepEntry e;
        e.reversed = rev;
        e.sigma = signature(dd);
        e.delta = delta_invariant(dd);
        out.push_back(e);
    }
    return out;
}

}  // namespace concordia
