#include "concordia/link_core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace concordia {

namespace {

struct Occurrence {
    int crossing;
    int slot;
};

std::map<int, std::vector<Occurrence>> arc_occurrences(const std::vector<Crossing>& xs) {
    std::map<int, std::vector<Occurrence>> occ;
    for (int c = 0; c < static_cast<int>(xs.size()); ++c)
        for (int s = 0; s < 4; ++s) occ[xs[c].arcs[s]].push_back({c, s});
    return occ;
}

// Role of an arc occurrence: head = strand terminates there, tail = emanates.
enum class Role { Unknown, Head, Tail };

// Determine over_in_slot for every crossing. Tuples are assumed to satisfy
// the slot-0 = incoming-under convention; the over-strand direction is the
// unknown, fixed by global consistency. Components that are everywhere-over
// are oriented deterministically (smallest arc emanates from its first
// occurrence in (crossing, slot) order).
void resolve_over_directions(std::vector<Crossing>& xs) {
    auto occ = arc_occurrences(xs);
    for (const auto& [arc, lst] : occ)
        if (lst.size() != 2)
            throw parse_error("arc multiplicity: arc " + std::to_string(arc) +
                              " appears " + std::to_string(lst.size()) + " times");

    std::map<int, std::array<Role, 2>> role;  // per arc, per occurrence index
    for (const auto& [arc, lst] : occ) role[arc] = {Role::Unknown, Role::Unknown};
    std::vector<int> over_in(xs.size(), 0);  // 0 = unresolved

    auto occ_index = [&](int arc, int crossing, int slot) {
        const auto& lst = occ[arc];
        for (int k = 0; k < 2; ++k)
            if (lst[k].crossing == crossing && lst[k].slot == slot) return k;
        throw parse_error("internal: occurrence lookup failed");
    };

    std::deque<int> queue;  // arcs to (re)examine
    auto assign = [&](int arc, int k, Role r) {
        Role& cur = role[arc][k];
        if (cur == r) return;
        if (cur != Role::Unknown)
            throw parse_error("inconsistent orientation at arc " + std::to_string(arc));
        cur = r;
        queue.push_back(arc);
    };

    for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
        assign(xs[c].arcs[0], occ_index(xs[c].arcs[0], c, 0), Role::Head);
        assign(xs[c].arcs[2], occ_index(xs[c].arcs[2], c, 2), Role::Tail);
    }

    std::function<void(int, int)> force_over = [&](int c, int slot_in) {
        if (over_in[c] == slot_in) return;
        if (over_in[c] != 0)
            throw parse_error("inconsistent over-strand direction at crossing " + std::to_string(c));
        over_in[c] = slot_in;
        int slot_out = (slot_in + 2) % 4;
        int a_in = xs[c].arcs[slot_in], a_out = xs[c].arcs[slot_out];
        assign(a_in, occ_index(a_in, c, slot_in), Role::Head);
        assign(a_out, occ_index(a_out, c, slot_out), Role::Tail);
    };

    while (true) {
        while (!queue.empty()) {
            int arc = queue.front();
            queue.pop_front();
            auto& rs = role[arc];
            for (int k = 0; k < 2; ++k) {
                if (rs[k] != Role::Unknown) continue;
                if (rs[1 - k] == Role::Unknown) continue;
                Role forced = rs[1 - k] == Role::Head ? Role::Tail : Role::Head;
                const Occurrence& o = occ[arc][k];
                if (o.slot == 0) {
                    if (forced != Role::Head) throw parse_error("orientation conflict at under-strand");
                    rs[k] = forced;
                } else if (o.slot == 2) {
                    if (forced != Role::Tail) throw parse_error("orientation conflict at under-strand");
                    rs[k] = forced;
                } else {
                    int slot_in = forced == Role::Head ? o.slot : (o.slot + 2) % 4;
                    force_over(o.crossing, slot_in);
                }
            }
        }
        // Deterministic seed for any leftover everywhere-over component.
        int seed_arc = -1;
        for (const auto& [arc, rs] : role)
            if (rs[0] == Role::Unknown && rs[1] == Role::Unknown) { seed_arc = arc; break; }
        if (seed_arc < 0) break;
        assign(seed_arc, 0, Role::Tail);  // occurrences are in (crossing, slot) order
    }

    for (size_t c = 0; c < xs.size(); ++c) {
        if (over_in[c] == 0) {
            // Both over occurrences resolved through roles; derive the slot.
            int a1 = xs[c].arcs[1];
            int k1 = occ_index(a1, static_cast<int>(c), 1);
            if (role[a1][k1] == Role::Head) over_in[c] = 1;
            else if (role[a1][k1] == Role::Tail) over_in[c] = 3;
            else throw parse_error("unresolved over-strand at crossing " + std::to_string(c));
        }
        xs[c].over_in_slot = over_in[c];
    }
}

// Components by strand-following, ordered by smallest arc, each cycle
// starting at its smallest arc.
std::vector<std::vector<int>> trace_components(const std::vector<Crossing>& xs,
                                               const std::vector<int>& free_loops) {
    auto occ = arc_occurrences(xs);
    std::map<int, int> succ;
    for (const auto& x : xs) {
        succ[x.under_in()] = x.under_out();
        succ[x.over_in()] = x.over_out();
    }
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (const auto& [arc, lst] : occ) {
        if (seen.count(arc)) continue;
        std::vector<int> cyc;
        int cur = arc;
        do {
            cyc.push_back(cur);
            seen.insert(cur);
            auto it = succ.find(cur);
            if (it == succ.end()) throw parse_error("broken strand at arc " + std::to_string(cur));
            cur = it->second;
        } while (cur != arc);
        // rotate so the smallest arc comes first
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mn, cyc.end());
        comps.push_back(std::move(cyc));
    }
    for (int a : free_loops) comps.push_back({a});
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end()) return false;
    size_t off = static_cast<size_t>(it - b.begin());
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(off + i) % b.size()]) return false;
    return true;
}

}  // namespace

int LinkDiagram::component_of_arc(int arc) const {
    for (int i = 0; i < num_components(); ++i)
        for (int a : components[i])
            if (a == arc) return i;
    throw precondition_error("arc not in any component: " + std::to_string(arc));
}

bool LinkDiagram::is_free_loop(int comp) const {
    const auto& c = components.at(static_cast<size_t>(comp));
    if (c.size() != 1) return false;
    for (const auto& x : crossings)
        for (int s = 0; s < 4; ++s)
            if (x.arcs[s] == c[0]) return false;
    return true;
}

void LinkDiagram::validate() const {
    if (components.empty()) throw parse_error("diagram has no components");
    if (marked < 0 || marked >= num_components()) throw parse_error("marked component out of range");
    auto occ = arc_occurrences(crossings);
    std::set<int> comp_arcs;
    std::vector<int> free_loops;
    for (const auto& c : components) {
        if (c.empty()) throw parse_error("empty component");
        for (int a : c) {
            if (!comp_arcs.insert(a).second) throw parse_error("arc in two components");
            if (!occ.count(a)) {
                if (c.size() != 1) throw parse_error("crossingless arc in multi-arc component");
                free_loops.push_back(a);
            }
        }
    }
    for (const auto& [arc, lst] : occ) {
        if (lst.size() != 2) throw parse_error("arc multiplicity: arc " + std::to_string(arc));
        if (!comp_arcs.count(arc)) throw parse_error("arc missing from components");
    }
    for (const auto& x : crossings)
        if (x.over_in_slot != 1 && x.over_in_slot != 3) throw parse_error("bad over_in_slot");
    auto traced = trace_components(crossings, free_loops);
    if (traced.size() != components.size()) throw parse_error("component count mismatch");
    for (const auto& c : components) {
        bool found = false;
        for (const auto& t : traced)
            if (same_cycle(c, t)) { found = true; break; }
        if (!found) throw parse_error("component traversal mismatch");
    }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(i, tok.size(), tok) == 0) { i += tok.size(); return true; }
        return false;
    }
    void expect(const std::string& tok) {
        if (!eat(tok)) throw parse_error("expected '" + tok + "' near position " + std::to_string(i));
    }
    bool peek(const std::string& tok) {
        skip_ws();
        return s.compare(i, tok.size(), tok) == 0;
    }
    int integer() {
        skip_ws();
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw parse_error("expected integer near position " + std::to_string(i));
        int v = std::stoi(s.substr(i, k - i));
        i = k;
        return v;
    }
    bool done() { skip_ws(); return i >= s.size(); }
    std::string word() {
        skip_ws();
        size_t k = i;
        while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
        std::string w = s.substr(i, k - i);
        i = k;
        return w;
    }
};

std::vector<int> parse_int_list(Cursor& cur) {
    std::vector<int> v;
    cur.expect("[");
    if (!cur.eat("]")) {
        do { v.push_back(cur.integer()); } while (cur.eat(","));
        cur.expect("]");
    }
    return v;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
    Cursor cur{text};
    LinkDiagram d;
    std::vector<int> declared_signs;  // 0 = unspecified
    cur.expect("PD");
    cur.expect("[");
    if (!cur.eat("]")) {
        do {
            cur.expect("X");
            cur.expect("(");
            Crossing x;
            for (int s = 0; s < 4; ++s) {
                x.arcs[s] = cur.integer();
                if (x.arcs[s] <= 0) throw parse_error("arc labels must be positive");
                if (s < 3) cur.expect(",");
            }
            int sign = 0;
            if (cur.eat(";")) {
                if (cur.eat("+")) sign = +1;
                else if (cur.eat("-")) sign = -1;
                else throw parse_error("bad sign annotation");
            }
            cur.expect(")");
            d.crossings.push_back(x);
            declared_signs.push_back(sign);
        } while (cur.eat(","));
        cur.expect("]");
    }

    std::vector<std::vector<int>> given_comps;
    std::vector<int> orient_flags;
    bool have_comps = false, have_marked = false;
    d.mode = OrientationMode::MarkedOriented;
    int marked_1based = 0;
    while (!cur.done()) {
        std::string key = cur.word();
        cur.expect("=");
        if (key == "comps") {
            have_comps = true;
            cur.expect("[");
            if (!cur.eat("]")) {
                do { given_comps.push_back(parse_int_list(cur)); } while (cur.eat(","));
                cur.expect("]");
            }
        } else if (key == "orient") {
            cur.expect("[");
            if (!cur.eat("]")) {
                do {
                    if (cur.eat("+")) orient_flags.push_back(+1);
                    else if (cur.eat("-")) orient_flags.push_back(-1);
                    else throw parse_error("orient flags must be + or -");
                } while (cur.eat(","));
                cur.expect("]");
            }
        } else if (key == "marked") {
            have_marked = true;
            marked_1based = cur.integer();
        } else if (key == "mode") {
            std::string m = cur.word();
            if (m == "oriented") d.mode = OrientationMode::MarkedOriented;
            else if (m == "partly") d.mode = OrientationMode::PartlyOriented;
            else throw parse_error("mode must be oriented or partly");
        } else {
            throw parse_error("unknown key '" + key + "'");
        }
    }
    if (!have_marked) throw parse_error("unmarked diagram: marked=<k> is required");

    if (d.crossings.empty() && !have_comps)
        throw parse_error("crossingless diagram requires comps=");

    resolve_over_directions(d.crossings);

    std::vector<int> free_loops;
    if (have_comps) {
        auto occ = arc_occurrences(d.crossings);
        for (const auto& c : given_comps)
            if (c.size() == 1 && !occ.count(c[0])) free_loops.push_back(c[0]);
    }
    auto traced = trace_components(d.crossings, free_loops);

    if (have_comps) {
        if (given_comps.size() != traced.size())
            throw parse_error("comps= does not match traced components");
        for (const auto& g : given_comps) {
            bool ok = false;
            for (const auto& t : traced)
                if (same_cycle(g, t)) { ok = true; break; }
            if (!ok) throw parse_error("comps= cycle does not match diagram traversal");
        }
        d.components = given_comps;
    } else {
        d.components = traced;
    }

    if (marked_1based < 1 || marked_1based > static_cast<int>(d.components.size()))
        throw parse_error("marked component out of range");
    d.marked = marked_1based - 1;

    if (!orient_flags.empty()) {
        if (orient_flags.size() != d.components.size())
            throw parse_error("orient= length mismatch");
        std::vector<int> rev;
        for (size_t i = 0; i < orient_flags.size(); ++i)
            if (orient_flags[i] < 0) rev.push_back(static_cast<int>(i));
        if (!rev.empty()) d = reverse_components(d, rev);
    }

    for (size_t c = 0; c < d.crossings.size(); ++c)
        if (declared_signs[c] != 0 && declared_signs[c] != d.crossings[c].sign())
            throw parse_error("declared crossing sign disagrees with orientations");

    d.validate();
    return d;
}

std::string to_pd_text(const LinkDiagram& d) {
    std::ostringstream os;
    os << "PD[";
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        if (c) os << ", ";
        const auto& x = d.crossings[c];
        os << "X(" << x.arcs[0] << "," << x.arcs[1] << "," << x.arcs[2] << "," << x.arcs[3]
           << ";" << (x.sign() > 0 ? "+" : "-") << ")";
    }
    os << "] comps=[";
    for (size_t i = 0; i < d.components.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < d.components[i].size(); ++j) {
            if (j) os << ",";
            os << d.components[i][j];
        }
        os << "]";
    }
    os << "] marked=" << (d.marked + 1)
       << " mode=" << (d.mode == OrientationMode::MarkedOriented ? "oriented" : "partly");
    return os.str();
}

std::string canonical_form(const LinkDiagram& d) {
    LinkDiagram c = d;
    std::vector<std::vector<int>> comps = c.components;
    // order components canonically but keep the marked one identifiable
    std::vector<int> order(comps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if ((a == c.marked) != (b == c.marked)) return a == c.marked;
        return comps[static_cast<size_t>(a)] < comps[static_cast<size_t>(b)];
    });
    std::vector<std::vector<int>> sorted;
    for (int i : order) sorted.push_back(comps[static_cast<size_t>(i)]);
    c.components = sorted;
    c.marked = 0;
    std::sort(c.crossings.begin(), c.crossings.end(), [](const Crossing& a, const Crossing& b) {
        return std::tie(a.arcs, a.over_in_slot) < std::tie(b.arcs, b.over_in_slot);
    });
    return to_pd_text(c);
}

// ---------------------------------------------------------------------------
// Invariant-level operations

long long linking_number(const LinkDiagram& d, int i, int j) {
    if (i == j) throw precondition_error("linking_number: components must differ");
    if (i < 0 || j < 0 || i >= d.num_components() || j >= d.num_components())
        throw precondition_error("linking_number: component index out of range");
    if (d.mode == OrientationMode::PartlyOriented && i != d.marked && j != d.marked)
        throw precondition_error("linking_number: unoriented pair in partly oriented mode");
    long long sum = 0;
    for (const auto& x : d.crossings) {
        int cu = d.component_of_arc(x.under_in());
        int co = d.component_of_arc(x.over_in());
        if ((cu == i && co == j) || (cu == j && co == i)) sum += x.sign();
    }
    if (sum % 2 != 0) throw precondition_error("linking_number: odd signed crossing count");
    long long lk = sum / 2;
    if (d.mode == OrientationMode::PartlyOriented) return ((lk % 2) + 2) % 2;
    return lk;
}

long long total_linking(const LinkDiagram& d) {
    long long total = 0;
    for (int j = 0; j < d.num_components(); ++j) {
        if (j == d.marked) continue;
        total += linking_number(d, d.marked, j);
    }
    if (d.mode == OrientationMode::PartlyOriented) return ((total % 2) + 2) % 2;
    return total;
}

int mu_invariant(const LinkDiagram& d) { return (1 + d.num_components()) % 2; }

namespace {

LinkDiagram relabel_arcs(const LinkDiagram& d, int offset) {
    LinkDiagram r = d;
    for (auto& x : r.crossings)
        for (auto& a : x.arcs) a += offset;
    for (auto& c : r.components)
        for (auto& a : c) a += offset;
    return r;
}

int max_arc(const LinkDiagram& d) {
    int m = 0;
    for (const auto& c : d.components)
        for (int a : c) m = std::max(m, a);
    return m;
}

struct ArcEnd {
    int crossing = -1, slot = -1;
};

// Head occurrence of an arc (where the strand terminates), if any.
bool head_of(const LinkDiagram& d, int arc, ArcEnd& out) {
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        const auto& x = d.crossings[c];
        if (x.under_in() == arc) { out = {c, 0}; return true; }
        if (x.over_in() == arc) { out = {c, x.over_in_slot}; return true; }
    }
    return false;
}

LinkDiagram rebuild(std::vector<Crossing> crossings, std::vector<int> free_loops,
                    OrientationMode mode, int marked_arc) {
    LinkDiagram r;
    r.crossings = std::move(crossings);
    r.components = trace_components(r.crossings, free_loops);
    r.mode = mode;
    r.marked = -1;
    for (int i = 0; i < r.num_components(); ++i)
        for (int a : r.components[static_cast<size_t>(i)])
            if (a == marked_arc) r.marked = i;
    if (r.marked < 0) throw precondition_error("rebuild: marked arc vanished");
    r.validate();
    return r;
}

std::vector<int> free_loop_arcs(const LinkDiagram& d) {
    std::vector<int> v;
    for (int i = 0; i < d.num_components(); ++i)
        if (d.is_free_loop(i)) v.push_back(d.components[static_cast<size_t>(i)][0]);
    return v;
}

}  // namespace

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.mode != b.mode) throw precondition_error("connected_sum: orientation mode mismatch");
    LinkDiagram bb = relabel_arcs(b, max_arc(a));
    int x = *std::min_element(a.components[static_cast<size_t>(a.marked)].begin(),
                              a.components[static_cast<size_t>(a.marked)].end());
    int y = *std::min_element(bb.components[static_cast<size_t>(bb.marked)].begin(),
                              bb.components[static_cast<size_t>(bb.marked)].end());

    std::vector<Crossing> xs = a.crossings;
    xs.insert(xs.end(), bb.crossings.begin(), bb.crossings.end());

    bool x_free = a.is_free_loop(a.marked);
    bool y_free = bb.is_free_loop(bb.marked);

    std::vector<int> loops;
    for (int v : free_loop_arcs(a))
        if (!(x_free && v == x)) loops.push_back(v);
    for (int v : free_loop_arcs(bb))
        if (!(y_free && v == y)) loops.push_back(v);

    int marked_arc;
    if (x_free && y_free) {
        loops.push_back(x);
        marked_arc = x;
    } else if (x_free) {
        marked_arc = y;  // unknot summand disappears
    } else if (y_free) {
        marked_arc = x;
    } else {
        // swap the head occurrences of x and y
        ArcEnd hx, hy;
        int nx = static_cast<int>(a.crossings.size());
        if (!head_of(a, x, hx)) throw precondition_error("connected_sum: lost arc end");
        if (!head_of(bb, y, hy)) throw precondition_error("connected_sum: lost arc end");
        xs[static_cast<size_t>(hx.crossing)].arcs[static_cast<size_t>(hx.slot)] = y;
        xs[static_cast<size_t>(nx + hy.crossing)].arcs[static_cast<size_t>(hy.slot)] = x;
        marked_arc = x;
    }
    return rebuild(std::move(xs), std::move(loops), a.mode, marked_arc);
}

LinkDiagram negate(const LinkDiagram& d) {
    std::vector<Crossing> xs;
    xs.reserve(d.crossings.size());
    for (const auto& x : d.crossings) {
        Crossing y;
        int r = x.over_out_slot();  // rotate so the old over-out arc leads
        for (int s = 0; s < 4; ++s) y.arcs[static_cast<size_t>(s)] = x.arcs[static_cast<size_t>((s + r) % 4)];
        y.over_in_slot = (2 - r + 4) % 4;  // old under-out position after rotation
        xs.push_back(y);
    }
    int marked_arc = d.components[static_cast<size_t>(d.marked)][0];
    return rebuild(std::move(xs), free_loop_arcs(d), d.mode, marked_arc);
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& comps) {
    std::set<int> rev(comps.begin(), comps.end());
    for (int c : rev)
        if (c < 0 || c >= d.num_components())
            throw precondition_error("reverse_components: index out of range");
    std::vector<Crossing> xs;
    xs.reserve(d.crossings.size());
    for (const auto& x : d.crossings) {
        bool under_rev = rev.count(d.component_of_arc(x.under_in())) > 0;
        bool over_rev = rev.count(d.component_of_arc(x.over_in())) > 0;
        Crossing y = x;
        if (under_rev) {
            for (int s = 0; s < 4; ++s) y.arcs[static_cast<size_t>(s)] = x.arcs[static_cast<size_t>((s + 2) % 4)];
            y.over_in_slot = (x.over_in_slot + 2) % 4;
        }
        if (over_rev) y.over_in_slot = (y.over_in_slot + 2) % 4;
        xs.push_back(y);
    }
    int marked_arc = d.components[static_cast<size_t>(d.marked)][0];
    return rebuild(std::move(xs), free_loop_arcs(d), d.mode, marked_arc);
}

LinkDiagram braid_closure_diagram(const std::vector<int>& word) {
    if (word.empty()) throw precondition_error("braid word must be nonempty");
    int n = 1;
    for (int g : word) {
        if (g == 0) throw precondition_error("braid letters are nonzero integers");
        n = std::max(n, std::abs(g) + 1);
    }
    std::vector<int> cur(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    int next_arc = n + 1;
    std::vector<Crossing> xs;
    for (int g : word) {
        int i = std::abs(g) - 1;  // 0-based pair index
        int A = cur[static_cast<size_t>(i)], B = cur[static_cast<size_t>(i + 1)];
        int C = next_arc++, D = next_arc++;
        Crossing x;
        if (g > 0) {
            x.arcs = {B, D, C, A};  // under B -> C, over A -> D
            x.over_in_slot = 3;
        } else {
            x.arcs = {A, B, D, C};  // under A -> D, over B -> C
            x.over_in_slot = 1;
        }
        xs.push_back(x);
        cur[static_cast<size_t>(i)] = C;
        cur[static_cast<size_t>(i + 1)] = D;
    }
    // Closure: identify top arcs with the initial bottom arcs.
    std::vector<int> loops;
    for (int i = 0; i < n; ++i) {
        int top = cur[static_cast<size_t>(i)], bot = i + 1;
        if (top == bot) { loops.push_back(bot); continue; }  // untouched strand
        for (auto& x : xs)
            for (auto& a : x.arcs)
                if (a == top) a = bot;
    }
    return rebuild(std::move(xs), std::move(loops), OrientationMode::MarkedOriented, 1);
}

LinkDiagram marked_component_diagram(const LinkDiagram& d) {
    // union-find over arc labels for smoothing
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int a) -> int {
        auto it = parent.find(a);
        if (it == parent.end() || it->second == a) return a;
        return parent[a] = find(it->second);
    };
    auto unite = [&](int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    };

    int mk = d.marked;
    std::vector<Crossing> kept;
    for (const auto& x : d.crossings) {
        bool under_marked = d.component_of_arc(x.under_in()) == mk;
        bool over_marked = d.component_of_arc(x.over_in()) == mk;
        if (under_marked && over_marked) kept.push_back(x);
        else if (under_marked) unite(x.under_in(), x.under_out());
        else if (over_marked) unite(x.over_in(), x.over_out());
    }
    for (auto& x : kept)
        for (auto& a : x.arcs) a = find(a);

    const auto& marked_arcs = d.components[static_cast<size_t>(mk)];
    int marked_arc = find(marked_arcs[0]);
    std::vector<int> loops;
    if (kept.empty()) loops.push_back(marked_arc);
    LinkDiagram r = rebuild(std::move(kept), std::move(loops), d.mode, marked_arc);
    return r;
}

std::vector<LinkDiagram> split_pieces(const LinkDiagram& d) {
    int nc = static_cast<int>(d.crossings.size());
    // union-find over crossings joined by shared arcs
    std::vector<int> par(static_cast<size_t>(nc));
    for (int i = 0; i < nc; ++i) par[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int a) -> int {
        while (par[static_cast<size_t>(a)] != a) a = par[static_cast<size_t>(a)] = par[static_cast<size_t>(par[static_cast<size_t>(a)])];
        return a;
    };
    std::map<int, int> arc_first;
    for (int i = 0; i < nc; ++i)
        for (int s = 0; s < 4; ++s) {
            int a = d.crossings[static_cast<size_t>(i)].arcs[static_cast<size_t>(s)];
            auto it = arc_first.find(a);
            if (it == arc_first.end()) arc_first[a] = i;
            else {
                int ra = find(it->second), rb = find(i);
                if (ra != rb) par[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
    std::map<int, std::vector<Crossing>> groups;
    for (int i = 0; i < nc; ++i) groups[find(i)].push_back(d.crossings[static_cast<size_t>(i)]);

    std::vector<LinkDiagram> pieces;
    for (auto& [root, xs] : groups) {
        int arc0 = xs[0].arcs[0];
        pieces.push_back(rebuild(std::vector<Crossing>(xs), {}, d.mode, arc0));
    }
    for (int i = 0; i < d.num_components(); ++i)
        if (d.is_free_loop(i)) {
            int a = d.components[static_cast<size_t>(i)][0];
            pieces.push_back(rebuild({}, {a}, d.mode, a));
        }
    return pieces;
}

}  // namespace concordia
