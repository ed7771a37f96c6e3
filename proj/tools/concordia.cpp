// concordia: concordance obstructions for links given combinatorially.
//
// Subcommands: invariants, profile, dinv, witness, group, sweep, cache.
// Reports are JSON on stdout; profiles can also emit CSV step data.

#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "concordia/cache.hpp"
#include "concordia/describe.hpp"
#include "concordia/fixtures.hpp"
#include "concordia/goeritz.hpp"
#include "concordia/group.hpp"
#include "concordia/lattice.hpp"
#include "concordia/plumbing.hpp"
#include "concordia/seifert_lt.hpp"
#include "concordia/twobridge.hpp"

using namespace concordia;
using nlohmann::ordered_json;

namespace {

struct InputFlags {
    std::string positional;
    std::string pd, braid, two_bridge, tree;
    bool partly = false;
};

void add_json_flag(CLI::App* cmd) {
    static bool json_default = true;
    cmd->add_flag("--json", json_default, "emit JSON (the default; kept for interface stability)");
}

void add_input_flags(CLI::App* cmd, InputFlags& f) {
    cmd->add_option("input", f.positional, "link description (mini-language)");
    cmd->add_option("--pd", f.pd, "PD text");
    cmd->add_option("--braid", f.braid, "braid word, e.g. \"1 1 1\"");
    cmd->add_option("--two-bridge", f.two_bridge, "two-bridge literal S(p,q) or p/q");
    cmd->add_option("--tree", f.tree, "plumbing tree text");
    cmd->add_flag("--partly", f.partly, "forget orientations of nonmarked components");
}

LinkInput resolve_input(const InputFlags& f) {
    std::string desc;
    int given = 0;
    if (!f.positional.empty()) { desc = f.positional; ++given; }
    if (!f.pd.empty()) { desc = "pd: " + f.pd; ++given; }
    if (!f.braid.empty()) { desc = "braid: " + f.braid; ++given; }
    if (!f.two_bridge.empty()) {
        std::string s = f.two_bridge;
        if (s.find('/') != std::string::npos) {
            auto k = s.find('/');
            s = "S(" + s.substr(0, k) + "," + s.substr(k + 1) + ")";
        }
        desc = s;
        ++given;
    }
    if (!f.tree.empty()) { desc = "tree: " + f.tree; ++given; }
    if (given != 1) throw parse_error("exactly one input form is required");
    if (f.partly) desc += "!partly";
    return parse_link_description(desc);
}

ordered_json omega_json(const OmegaEntry& e) {
    ordered_json j;
    j["omega"] = std::to_string(e.omega.a) + "/" + std::to_string(e.omega.b);
    j["sigma"] = e.sigma;
    j["nullity"] = e.nullity;
    j["prime_power"] = e.prime_power;
    return j;
}

ordered_json vector_json(const ObstructionVector& v) {
    ordered_json j;
    j["mode"] = v.mode == OrientationMode::MarkedOriented ? "oriented" : "partly";
    j[v.mode == OrientationMode::MarkedOriented ? "l_tilde" : "l_mod2"] = v.linking;
    j["mu"] = v.mu;
    if (v.det_defined) {
        j["determinant"] = v.det.to_string();
        j["square_class"] = v.square_class;
        j["square_class_trivial"] = v.square_class.empty();
    } else {
        j["determinant"] = nullptr;
    }
    if (v.sigma_defined) j["sigma"] = v.sigma;
    if (v.mode == OrientationMode::MarkedOriented) {
        if (v.delta_defined) j["delta"] = v.delta;
        else j["delta_unavailable"] = v.delta_reason;
    }
    if (v.lt_defined) {
        ordered_json tab = ordered_json::array();
        for (const auto& e : v.lt) tab.push_back(omega_json(e));
        j["levine_tristram"] = tab;
    }
    return j;
}

int run_invariants(const InputFlags& flags, int omega_res, const std::string& cache_flag) {
    LinkInput in = resolve_input(flags);
    FormalClass cls = make_class({{in, 1}});
    ObstructionVector v = obstruction_vector(cls, default_omega_samples(omega_res));
    Certificate cert = nontriviality_certificate(cls, default_omega_samples(omega_res));

    ordered_json j;
    j["input"] = in.text;
    j["components"] = in.diagram.num_components();
    j["crossings"] = in.diagram.crossings.size();
    j.update(vector_json(v));
    j["certificate"] = cert.found ? cert.witness : "no obstruction found";
    j["nontrivial"] = cert.found;
    j["version"] = kToolVersion;

    InvariantCache cache(resolve_cache_path(cache_flag));
    std::string key = canonical_form(in.diagram);
    auto put = [&](const std::string& name, const std::string& value) {
        cache.record(key, name, value);
    };
    put("mu", std::to_string(v.mu));
    put("linking", std::to_string(v.linking));
    if (v.det_defined) put("determinant", v.det.to_string());
    if (v.sigma_defined) put("sigma", std::to_string(v.sigma));
    if (v.delta_defined) put("delta", std::to_string(v.delta));

    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_profile(const InputFlags& flags, int res, const std::string& csv_path) {
    LinkInput in = resolve_input(flags);
    if (!in.braid)
        throw precondition_error("profile: a braid-backed input is required for Seifert data");
    SeifertMatrix m = seifert_from_braid(*in.braid);
    SignatureProfile prof = signature_profile(m, res);
    ordered_json j;
    j["input"] = in.text;
    j["alexander"] = prof.alexander.to_string();
    ordered_json samples = ordered_json::array();
    for (const auto& s : prof.samples) {
        ordered_json e;
        e["omega"] = std::to_string(s.omega.a) + "/" + std::to_string(s.omega.b);
        e["angle_fraction"] = s.omega.angle_fraction();
        e["sigma"] = s.sigma;
        e["nullity"] = s.nullity;
        samples.push_back(e);
    }
    j["samples"] = samples;
    ordered_json jumps = ordered_json::array();
    for (const auto& jj : prof.jumps) {
        ordered_json e;
        e["between"] = {std::to_string(jj.before.a) + "/" + std::to_string(jj.before.b),
                        std::to_string(jj.after.a) + "/" + std::to_string(jj.after.b)};
        e["sigma_before"] = jj.sigma_before;
        e["sigma_after"] = jj.sigma_after;
        jumps.push_back(e);
    }
    j["jumps"] = jumps;
    j["version"] = kToolVersion;
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "angle_fraction,sigma,nullity\n";
        for (const auto& s : prof.samples)
            csv << s.omega.a << "/" << s.omega.b << "," << s.sigma << "," << s.nullity << "\n";
        j["csv"] = csv_path;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_dinv(const std::string& matrix_json, const std::string& tree_text) {
    IntMat q;
    if (!matrix_json.empty()) {
        auto j = nlohmann::json::parse(matrix_json);
        for (const auto& row : j) q.push_back(row.get<IntVec>());
    } else if (!tree_text.empty()) {
        q = plumbing_matrix(parse_tree(tree_text));
    } else {
        throw parse_error("dinv: provide --matrix or --tree");
    }
    DefiniteLattice lat = make_definite(q);
    if (lat.definite_sign != -1)
        throw precondition_error(
            "dinv: form is positive definite; negate it (d of the reversed boundary flips sign)");
    ordered_json j;
    j["rank"] = lat.rank();
    j["det"] = lat.det_abs.to_string();
    ordered_json cosets = ordered_json::array();
    for (const auto& c : char_cosets(lat)) {
        ordered_json e;
        e["representative"] = c.rep;
        Rational d = d_invariant(lat, c);
        e["d"] = d.to_string();
        e["four_d"] = (d * Rational(4)).to_string();
        cosets.push_back(e);
    }
    j["cosets"] = cosets;
    j["version"] = kToolVersion;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_witness(const std::vector<long long>& qs) {
    WitnessCertificate w = torsion_witness(qs);
    ordered_json j;
    j["inputs"] = w.inputs;
    j["p"] = w.p;
    j["q"] = w.q;
    j["q_squared_plus_one"] = w.q * w.q + 1;
    j["verified"] = w.verify();
    j["version"] = kToolVersion;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_group(const std::string& file, int omega_res, const std::string& omega_list) {
    std::ifstream in(file);
    if (!in) throw parse_error("group: cannot open " + file);
    auto spec = nlohmann::json::parse(in);
    std::vector<RootOfUnity> ws;
    if (!omega_list.empty()) {
        std::istringstream is(omega_list);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto k = tok.find('/');
            if (k == std::string::npos) throw parse_error("group: omega list entries are a/b");
            ws.emplace_back(std::stoll(tok.substr(0, k)), std::stoll(tok.substr(k + 1)));
        }
    } else if (spec.contains("omegas")) {
        for (const auto& t : spec["omegas"]) {
            std::string s = t.get<std::string>();
            auto k = s.find('/');
            ws.emplace_back(std::stoll(s.substr(0, k)), std::stoll(s.substr(k + 1)));
        }
    } else {
        ws = default_omega_samples(omega_res);
    }
    std::vector<FormalClass> classes;
    std::vector<std::string> names;
    for (const auto& c : spec.at("classes")) {
        std::vector<FormalSummand> summands;
        for (const auto& s : c.at("summands"))
            summands.push_back(
                {parse_link_description(s.at("link").get<std::string>()), s.value("mult", 1LL)});
        classes.push_back(make_class(std::move(summands)));
        names.push_back(c.value("name", "class " + std::to_string(names.size() + 1)));
    }
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < classes.size(); ++i) {
        ordered_json e;
        e["name"] = names[i];
        e.update(vector_json(obstruction_vector(classes[i], ws)));
        Certificate cert = nontriviality_certificate(classes[i], ws);
        e["certificate"] = cert.witness;
        rows.push_back(e);
    }
    j["classes"] = rows;
    RankResult r = independence_rank(classes, ws);
    j["free_rank_lower_bound"] = r.free_rank;
    j["two_torsion_rank_lower_bound"] = r.two_torsion_rank;
    ordered_json cert;
    cert["rows"] = r.cert.free_rows;
    cert["columns"] = r.cert.free_cols;
    cert["minor"] = r.cert.free_minor;
    cert["torsion_primes"] = r.cert.torsion_primes;
    cert["torsion_columns"] = r.cert.torsion_cols;
    j["certificates"] = cert;
    j["version"] = kToolVersion;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_sweep(const std::string& tree_file, const std::string& tree_text) {
    PlumbingTree t;
    if (!tree_text.empty()) {
        t = parse_tree(tree_text);
    } else {
        std::ifstream in(tree_file);
        if (!in) throw parse_error("sweep: cannot open " + tree_file);
        std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        t = parse_tree(content);
    }
    IntMat p = plumbing_matrix(t);
    LinkDiagram d = montesinos_diagram(t);
    auto sweep = quasiorientation_sweep(d);
    ordered_json j;
    j["tree"] = to_tree_text(t);
    j["matrix_det"] = mat_det(p).to_string();
    j["components"] = d.num_components();
    j["determinant"] = determinant(d).to_string();
    ordered_json entries = ordered_json::array();
    std::multiset<long long> sig, del;
    for (const auto& e : sweep) {
        ordered_json row;
        std::vector<int> rev1;
        for (int c : e.reversed) rev1.push_back(c + 1);
        row["reversed_components"] = rev1;
        row["sigma"] = e.sigma;
        row["delta"] = e.delta;
        entries.push_back(row);
        sig.insert(e.sigma);
        del.insert(e.delta);
    }
    j["entries"] = entries;
    j["sigma_multiset"] = std::vector<long long>(sig.begin(), sig.end());
    j["delta_multiset"] = std::vector<long long>(del.begin(), del.end());
    j["version"] = kToolVersion;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_cache_verify(const std::string& cache_flag) {
    InvariantCache cache(resolve_cache_path(cache_flag));
    int checked = 0, failed = 0;
    for (const auto& [kv, value] : cache.records()) {
        const auto& [key, invariant] = kv;
        LinkDiagram d;
        try {
            d = parse_pd(key);
        } catch (const parse_error&) {
            continue;  // key not a PD form we can replay
        }
        std::string recomputed;
        try {
            if (invariant == "mu") recomputed = std::to_string(mu_invariant(d));
            else if (invariant == "linking") recomputed = std::to_string(total_linking(d));
            else if (invariant == "determinant") recomputed = determinant(d).to_string();
            else if (invariant == "sigma") recomputed = std::to_string(signature(d));
            else if (invariant == "delta") recomputed = std::to_string(delta_invariant(d));
            else continue;
        } catch (const std::exception&) {
            continue;
        }
        ++checked;
        if (recomputed != value) {
            ++failed;
            std::cerr << "MISMATCH " << invariant << " of " << key << ": cached " << value
                      << ", recomputed " << recomputed << "\n";
        }
    }
    ordered_json j;
    j["path"] = cache.path();
    j["records"] = cache.records().size();
    j["checked"] = checked;
    j["mismatches"] = failed;
    std::cout << j.dump(2) << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concordance obstructions for links"};
    app.require_subcommand(1);

    InputFlags inv_flags;
    int inv_omega_res = 12;
    std::string inv_cache;
    auto* inv = app.add_subcommand("invariants", "obstruction vector of one link");
    add_input_flags(inv, inv_flags);
    inv->add_option("--omega-res", inv_omega_res, "Levine-Tristram sample resolution");
    inv->add_option("--cache", inv_cache, "cache file path");
    add_json_flag(inv);

    InputFlags prof_flags;
    int prof_res = 24;
    std::string prof_csv;
    auto* prof = app.add_subcommand("profile", "signature profile over the unit circle");
    add_input_flags(prof, prof_flags);
    prof->add_option("--res", prof_res, "grid resolution for the upper semicircle");
    prof->add_option("--csv", prof_csv, "write step data as CSV");
    add_json_flag(prof);

    std::string dinv_matrix, dinv_tree;
    auto* dinv = app.add_subcommand("dinv", "d-invariants of a negative definite lattice");
    dinv->add_option("--matrix", dinv_matrix, "JSON matrix, e.g. [[-2,1],[1,-2]]");
    dinv->add_option("--tree", dinv_tree, "plumbing tree text");

    std::vector<long long> witness_inputs;
    auto* wit = app.add_subcommand("witness", "torsion witness prime for S(q^2+1,q) inputs");
    wit->add_option("q", witness_inputs, "odd positive integers");

    std::string group_file, group_omegas;
    int group_res = 12;
    auto* grp = app.add_subcommand("group", "obstruction vectors and ranks for formal classes");
    grp->add_option("file", group_file, "JSON class file")->required();
    grp->add_option("--omega-res", group_res, "Levine-Tristram sample resolution");
    grp->add_option("--omegas", group_omegas, "comma-separated a/b sample list");

    std::string sweep_file, sweep_tree;
    auto* swp = app.add_subcommand("sweep", "quasiorientation sweep of a plumbing link");
    swp->add_option("file", sweep_file, "tree file");
    swp->add_option("--tree", sweep_tree, "tree text");

    auto* cch = app.add_subcommand("cache", "cache maintenance");
    std::string cache_path;
    auto* cver = cch->add_subcommand("verify", "recompute and compare all records");
    cver->add_option("--cache", cache_path, "cache file path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return run_invariants(inv_flags, inv_omega_res, inv_cache);
        if (prof->parsed()) return run_profile(prof_flags, prof_res, prof_csv);
        if (dinv->parsed()) return run_dinv(dinv_matrix, dinv_tree);
        if (wit->parsed()) return run_witness(witness_inputs);
        if (grp->parsed()) return run_group(group_file, group_res, group_omegas);
        if (swp->parsed()) return run_sweep(sweep_file, sweep_tree);
        if (cch->parsed() && cver->parsed()) return run_cache_verify(cache_path);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const unavailable_error& e) {
        std::cerr << "method unavailable: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
