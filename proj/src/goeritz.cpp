#include "concordia/goeritz.hpp"

#include <algorithm>
#include <map>

namespace concordia {

namespace {

struct Dart {
    int crossing, slot;
    bool operator<(const Dart& o) const {
        return std::tie(crossing, slot) < std::tie(o.crossing, o.slot);
    }
    bool operator==(const Dart& o) const { return crossing == o.crossing && slot == o.slot; }
};

bool diagram_is_alternating(const LinkDiagram& d) {
    std::map<int, int> under_ends, total_ends;
    for (const auto& x : d.crossings)
        for (int s = 0; s < 4; ++s) {
            total_ends[x.arcs[static_cast<size_t>(s)]]++;
            if (s == 0 || s == 2) under_ends[x.arcs[static_cast<size_t>(s)]]++;
        }
    for (const auto& [arc, n] : total_ends) {
        if (n != 2) return false;
        if (under_ends[arc] != 1) return false;
    }
    return !d.crossings.empty();
}

}  // namespace

std::vector<int> Checkerboard::faces_of_color(bool white) const {
    std::vector<int> v;
    for (int f = 0; f < num_faces; ++f)
        if (is_white[static_cast<size_t>(f)] == white) v.push_back(f);
    return v;
}

Checkerboard checkerboard(const LinkDiagram& d) {
    Checkerboard cb;
    if (d.crossings.empty()) {
        if (d.num_components() != 1)
            throw unavailable_error("checkerboard: disconnected diagram");
        cb.num_faces = 2;
        cb.is_white = {true, false};
        cb.alternating = false;
        return cb;
    }
    for (int i = 0; i < d.num_components(); ++i)
        if (d.is_free_loop(i)) throw unavailable_error("checkerboard: disconnected diagram");
    if (split_pieces(d).size() != 1)
        throw unavailable_error("checkerboard: disconnected diagram");

    int n = static_cast<int>(d.crossings.size());
    // other end of the arc occupying (crossing, slot)
    std::map<int, std::vector<Dart>> occ;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) occ[d.crossings[static_cast<size_t>(c)].arcs[static_cast<size_t>(s)]].push_back({c, s});
    auto other_end = [&](int c, int s) -> Dart {
        int arc = d.crossings[static_cast<size_t>(c)].arcs[static_cast<size_t>(s)];
        const auto& e = occ[arc];
        if (e.size() != 2) throw parse_error("checkerboard: arc multiplicity");
        return (e[0] == Dart{c, s}) ? e[1] : e[0];
    };

    // trace faces: arriving at (c, s), leave along slot s+1 toward its other end
    cb.corner_face.assign(static_cast<size_t>(n), {-1, -1, -1, -1});
    int face_count = 0;
    for (int c0 = 0; c0 < n; ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (cb.corner_face[static_cast<size_t>(c0)][static_cast<size_t>(s0)] >= 0) continue;
            int f = face_count++;
            int c = c0, s = s0;
            do {
                cb.corner_face[static_cast<size_t>(c)][static_cast<size_t>(s)] = f;
                Dart nxt = other_end(c, (s + 1) % 4);
                c = nxt.crossing;
                s = nxt.slot;
            } while (!(c == c0 && s == s0));
        }
    cb.num_faces = face_count;
    if (face_count != n + 2)
        throw parse_error("checkerboard: PD code is not planar (face count " +
                          std::to_string(face_count) + " for " + std::to_string(n) + " crossings)");

    // 2-color faces: corners k and k+1 share the arc at slot k+1
    cb.is_white.assign(static_cast<size_t>(face_count), false);
    std::vector<int> color(static_cast<size_t>(face_count), -1);
    std::vector<int> stack;
    color[0] = 1;
    stack.push_back(0);
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < 4; ++k) {
                int f1 = cb.corner_face[static_cast<size_t>(c)][static_cast<size_t>(k)];
                int f2 = cb.corner_face[static_cast<size_t>(c)][static_cast<size_t>((k + 1) % 4)];
                int g = -1;
                if (f1 == f) g = f2;
                else if (f2 == f) g = f1;
                if (g < 0) continue;
                if (color[static_cast<size_t>(g)] < 0) {
                    color[static_cast<size_t>(g)] = 1 - color[static_cast<size_t>(f)];
                    stack.push_back(g);
                } else if (color[static_cast<size_t>(g)] == color[static_cast<size_t>(f)]) {
                    throw parse_error("checkerboard: faces are not 2-colorable");
                }
            }
    }

    cb.alternating = diagram_is_alternating(d);
    int white_color;
    if (cb.alternating) {
        // the class holding corners {1,3} of every crossing (negative-definite side
        // for all-positive alternating diagrams)
        white_color = color[static_cast<size_t>(cb.corner_face[0][1])];
        for (int c = 0; c < n; ++c) {
            if (color[static_cast<size_t>(cb.corner_face[static_cast<size_t>(c)][1])] != white_color ||
                color[static_cast<size_t>(cb.corner_face[static_cast<size_t>(c)][3])] != white_color)
                throw parse_error("checkerboard: inconsistent alternating corners");
        }
    } else {
        white_color = color[0];  // face 0 is white: deterministic fallback
    }
    for (int f = 0; f < face_count; ++f) cb.is_white[static_cast<size_t>(f)] = color[static_cast<size_t>(f)] == white_color;
    return cb;
}

namespace {

// The two corners of crossing c lying in the requested class. Corners
// alternate colors, so they are either {0,2} or {1,3}.
std::pair<int, int> class_corners(const Checkerboard& cb, int c, bool white) {
    int f0 = cb.corner_face[static_cast<size_t>(c)][0];
    bool corner0_in = cb.is_white[static_cast<size_t>(f0)] == white;
    return corner0_in ? std::make_pair(0, 2) : std::make_pair(1, 3);
}

}  // namespace

GoeritzData goeritz_matrix(const LinkDiagram& d, const Checkerboard& cb, bool use_white, int r0) {
    GoeritzData g;
    g.white_is_color_white = use_white;
    g.white_faces = cb.faces_of_color(use_white);
    if (g.white_faces.empty()) throw precondition_error("goeritz_matrix: empty color class");
    if (r0 < 0) r0 = g.white_faces.front();
    if (std::find(g.white_faces.begin(), g.white_faces.end(), r0) == g.white_faces.end())
        throw precondition_error("goeritz_matrix: r0 is not a region of the chosen class");
    g.region_at_infinity = r0;

    std::map<int, int> index;  // face -> row in the full matrix
    for (size_t i = 0; i < g.white_faces.size(); ++i) index[g.white_faces[i]] = static_cast<int>(i);
    int nw = static_cast<int>(g.white_faces.size());
    IntMat full(static_cast<size_t>(nw), IntVec(static_cast<size_t>(nw), 0));

    long long mu = 0;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        auto [k1, k2] = class_corners(cb, c, use_white);
        int f1 = cb.corner_face[static_cast<size_t>(c)][static_cast<size_t>(k1)];
        int f2 = cb.corner_face[static_cast<size_t>(c)][static_cast<size_t>(k2)];
        int eta = (k1 == 0) ? +1 : -1;  // white corners {0,2} -> eta = +1
        if (f1 != f2) {
            int i = index[f1], j = index[f2];
            full[static_cast<size_t>(i)][static_cast<size_t>(j)] -= eta;
            full[static_cast<size_t>(j)][static_cast<size_t>(i)] -= eta;
        }
        // type II: the corner between the outgoing under-arc (slot 2) and the
        // outgoing over-arc lies in the opposite class
        const Crossing& x = d.crossings[static_cast<size_t>(c)];
        int corner = x.over_out_slot() == 1 ? 1 : 2;
        int cf = cb.corner_face[static_cast<size_t>(c)][static_cast<size_t>(corner)];
        bool corner_in_class = cb.is_white[static_cast<size_t>(cf)] == use_white;
        if (!corner_in_class) mu += x.sign();
    }
    for (int i = 0; i < nw; ++i) {
        long long s = 0;
        for (int j = 0; j < nw; ++j)
            if (j != i) s += full[static_cast<size_t>(i)][static_cast<size_t>(j)];
        full[static_cast<size_t>(i)][static_cast<size_t>(i)] = -s;
    }
    g.mu_correction = mu;

    int skip = index[r0];
    IntMat reduced;
    for (int i = 0; i < nw; ++i) {
        if (i == skip) continue;
        IntVec row;
        for (int j = 0; j < nw; ++j)
            if (j != skip) row.push_back(full[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        reduced.push_back(std::move(row));
    }
    g.matrix = std::move(reduced);
    std::vector<int> faces;
    for (int f : g.white_faces)
        if (f != r0) faces.push_back(f);
    g.white_faces = std::move(faces);
    return g;
}

long long signature(const LinkDiagram& d) {
    if (d.mode != OrientationMode::MarkedOriented)
        throw precondition_error("signature: requires marked oriented input");
    auto pieces = split_pieces(d);
    if (pieces.size() > 1) {
        long long s = 0;
        for (auto& p : pieces) s += signature(p);
        return s;
    }
    if (d.crossings.empty()) return 0;
    Checkerboard cb = checkerboard(d);
    GoeritzData g = goeritz_matrix(d, cb, true);
    SymSig sig = symmetric_signature(g.matrix);
    return static_cast<long long>(sig.pos - sig.neg) - g.mu_correction;
}

BigInt determinant(const LinkDiagram& d) {
    auto pieces = split_pieces(d);
    if (pieces.size() > 1) return BigInt(0);
    if (d.crossings.empty()) return BigInt(1);
    Checkerboard cb = checkerboard(d);
    GoeritzData g = goeritz_matrix(d, cb, true);
    return mat_det(g.matrix).abs();
}

}  // namespace concordia
