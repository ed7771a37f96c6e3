#include "concordia/tangle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace concordia {

Tangle Tangle::zero() {
    Tangle t;
    t.nw = t.ne = 1;
    t.sw = t.se = 2;
    t.fnum = 0;
    t.fden = 1;
    t.next_arc = 3;
    return t;
}

Tangle Tangle::infinity() {
    Tangle t;
    t.nw = t.sw = 1;
    t.ne = t.se = 2;
    t.fnum = 1;
    t.fden = 0;
    t.next_arc = 3;
    return t;
}

void twist_right(Tangle& t, int sign) {
    // crossing with NW slot = t.ne, SW slot = t.se; new NE/SE become corners.
    ProtoCrossing x;
    int a = t.next_arc++, b = t.next_arc++;
    x.arcs[1] = t.ne;  // NW
    x.arcs[2] = t.se;  // SW
    x.arcs[0] = a;     // NE
    x.arcs[3] = b;     // SE
    // strands: (NW,SE) carries ne -> new SE, (NE,SW) carries se -> new NE
    x.under_diag = sign > 0 ? 0 : 1;
    t.crossings.push_back(x);
    t.ne = a;
    t.se = b;
    // fraction: F += sign
    t.fnum += static_cast<long long>(sign) * t.fden;
}

void twist_bottom(Tangle& t, int sign) {
    // crossing with NW slot = t.sw, NE slot = t.se; new SW/SE become corners.
    ProtoCrossing x;
    int a = t.next_arc++, b = t.next_arc++;
    x.arcs[1] = t.sw;  // NW
    x.arcs[0] = t.se;  // NE
    x.arcs[2] = a;     // SW
    x.arcs[3] = b;     // SE
    x.under_diag = sign > 0 ? 0 : 1;
    t.crossings.push_back(x);
    t.sw = a;
    t.se = b;
    // fraction: F <- 1/(sign + 1/F) = fnum / (sign*fnum + fden)
    t.fden = static_cast<long long>(sign) * t.fnum + t.fden;
}

void tangle_sum(Tangle& t, const Tangle& t2_in) {
    Tangle t2 = t2_in;
    int offset = t.next_arc - 1;
    for (auto& x : t2.crossings)
        for (auto& a : x.arcs) a += offset;
    t2.nw += offset;
    t2.ne += offset;
    t2.sw += offset;
    t2.se += offset;
    t.next_arc += t2.next_arc - 1;
    // glue t.ne to t2.nw and t.se to t2.sw
    auto replace_arc = [](Tangle& tt, int from, int to) {
        for (auto& x : tt.crossings)
            for (auto& a : x.arcs)
                if (a == from) a = to;
        for (int* c : {&tt.nw, &tt.ne, &tt.sw, &tt.se})
            if (*c == from) *c = to;
    };
    replace_arc(t2, t2.nw, t.ne);
    replace_arc(t2, t2.sw, t.se);
    for (auto& x : t2.crossings) t.crossings.push_back(x);
    t.ne = t2.ne;
    t.se = t2.se;
    // F(t1 + t2) = F(t1) + F(t2) for finite fractions
    long long num = t.fnum * t2.fden + t2.fnum * t.fden;
    long long den = t.fden * t2.fden;
    long long g = std::gcd(std::abs(num), std::abs(den));
    if (g > 1) { num /= g; den /= g; }
    t.fnum = num;
    t.fden = den;
}

Tangle rational_tangle(long long p, long long q) {
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) {
        if (p == 0) throw precondition_error("rational_tangle: 0/0");
        return Tangle::infinity();
    }
    long long g = std::gcd(std::abs(p), q);
    if (g > 1) { p /= g; q /= g; }
    if (p == 0) return Tangle::zero();
    // continued fraction p/q = a1 + 1/(a2 + 1/(...)) by floor division
    std::vector<long long> cf;
    long long num = p, den = q;
    while (den != 0) {
        long long a = num >= 0 ? num / den : -((-num + den - 1) / den);
        cf.push_back(a);
        long long rem = num - a * den;
        num = den;
        den = rem;
    }
    // build from the innermost entry outward, alternating right/bottom and
    // ending with right twists for cf[0]
    size_t m = cf.size();
    Tangle t = (m % 2 == 1) ? Tangle::zero() : Tangle::infinity();
    for (size_t i = m; i-- > 0;) {
        bool right = ((m - 1 - i) % 2 == 0) == (m % 2 == 1);
        long long a = cf[i];
        int s = a >= 0 ? 1 : -1;
        for (long long k = 0; k < std::llabs(a); ++k)
            right ? twist_right(t, s) : twist_bottom(t, s);
    }
    if (!(t.fnum == p && t.fden == q))
        throw std::logic_error("rational_tangle: fraction bookkeeping mismatch (" +
                               std::to_string(t.fnum) + "/" + std::to_string(t.fden) + " vs " +
                               std::to_string(p) + "/" + std::to_string(q) + ")");
    return t;
}

namespace {

struct Occ {
    int crossing = -1, pos = -1;
};

}  // namespace

LinkDiagram numerator_closure(const Tangle& t_in) {
    Tangle t = t_in;
    std::vector<int> free_loops;
    auto replace_arc = [](Tangle& tt, int from, int to) {
        for (auto& x : tt.crossings)
            for (auto& a : x.arcs)
                if (a == from) a = to;
        for (int* c : {&tt.nw, &tt.ne, &tt.sw, &tt.se})
            if (*c == from) *c = to;
    };
    // close the top: nw joins ne
    if (t.nw == t.ne) free_loops.push_back(t.nw);
    else replace_arc(t, t.ne, t.nw);
    // close the bottom
    if (t.sw == t.se) {
        if (std::find(free_loops.begin(), free_loops.end(), t.sw) == free_loops.end())
            free_loops.push_back(t.sw);
    } else {
        replace_arc(t, t.se, t.sw);
    }
    // drop free loops that actually appear in crossings (merged strands)
    {
        std::vector<int> keep;
        for (int a : free_loops) {
            bool used = false;
            for (auto& x : t.crossings)
                for (int v : x.arcs)
                    if (v == a) used = true;
            if (!used) keep.push_back(a);
        }
        free_loops = keep;
    }

    // occurrences
    std::map<int, std::vector<Occ>> occ;
    for (int c = 0; c < static_cast<int>(t.crossings.size()); ++c)
        for (int p = 0; p < 4; ++p) occ[t.crossings[c].arcs[p]].push_back({c, p});
    for (auto& [arc, v] : occ)
        if (v.size() != 2)
            throw std::logic_error("numerator_closure: arc multiplicity " + std::to_string(v.size()));

    // orient each unoriented strand cycle deterministically
    // head_of[arc] = the occurrence where the arc terminates
    std::map<int, Occ> head_of;
    std::map<int, bool> visited;
    for (auto& [arc, v] : occ) visited[arc] = false;
    for (auto& [start, v0] : occ) {
        if (visited[start]) continue;
        // walk the cycle: the smallest arc's first occurrence is its head-free
        // end (tail), i.e. the strand leaves through its second occurrence.
        int arc = start;
        Occ tail_occ = v0[0];  // (crossing,pos) order: deterministic
        while (true) {
            visited[arc] = true;
            const auto& lst = occ[arc];
            Occ head = (lst[0].crossing == tail_occ.crossing && lst[0].pos == tail_occ.pos) ? lst[1] : lst[0];
            head_of[arc] = head;
            // the next arc leaves the head crossing at the opposite position
            int np = (head.pos + 2) % 4;
            int next = t.crossings[static_cast<size_t>(head.crossing)].arcs[static_cast<size_t>(np)];
            if (next == start) break;
            tail_occ = {head.crossing, np};
            arc = next;
        }
    }

    // normalize each crossing so the incoming under-arc is at slot 0
    std::vector<Crossing> xs;
    for (int c = 0; c < static_cast<int>(t.crossings.size()); ++c) {
        const ProtoCrossing& px = t.crossings[static_cast<size_t>(c)];
        int u0 = px.under_diag == 0 ? 0 : 1;  // one end of the under diagonal
        int u1 = u0 + 2;
        int under_in_pos = -1;
        for (int p : {u0, u1}) {
            int arc = px.arcs[static_cast<size_t>(p)];
            Occ h = head_of[arc];
            if (h.crossing == c && h.pos == p) under_in_pos = p;
        }
        if (under_in_pos < 0) throw std::logic_error("numerator_closure: lost under strand");
        Crossing x;
        for (int k = 0; k < 4; ++k)
            x.arcs[static_cast<size_t>(k)] = px.arcs[static_cast<size_t>((under_in_pos + k) % 4)];
        int over_in_pos = -1;
        for (int p : {(u0 + 1) % 4, (u0 + 3) % 4}) {
            int arc = px.arcs[static_cast<size_t>(p)];
            Occ h = head_of[arc];
            if (h.crossing == c && h.pos == p) over_in_pos = p;
        }
        if (over_in_pos < 0) throw std::logic_error("numerator_closure: lost over strand");
        x.over_in_slot = (over_in_pos - under_in_pos + 4) % 4;
        xs.push_back(x);
    }

    {
        LinkDiagram d;
        d.crossings = xs;
        d.mode = OrientationMode::MarkedOriented;
        std::map<int, int> succ;
        for (const auto& x : xs) {
            succ[x.under_in()] = x.under_out();
            succ[x.over_in()] = x.over_out();
        }
        std::map<int, bool> seen;
        for (auto& [a, v] : occ) seen[a] = false;
        for (auto& [a, v] : occ) {
            if (seen[a]) continue;
            std::vector<int> cyc;
            int cur = a;
            do {
                cyc.push_back(cur);
                seen[cur] = true;
                cur = succ.at(cur);
            } while (cur != a);
            auto mn = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), mn, cyc.end());
            d.components.push_back(cyc);
        }
        for (int a : free_loops) d.components.push_back({a});
        std::sort(d.components.begin(), d.components.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        d.marked = 0;
        d.validate();
        return d;
    }
}

}  // namespace concordia
